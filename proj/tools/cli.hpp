#pragma once

#include <functional>
#include <iosfwd>
#include <optional>
#include <string>
#include <thread>
#include <vector>

#include "lindelof/errors.hpp"
#include "lindelof/json_io.hpp"

namespace lindelof::cli {

enum ExitCode { kOk = 0, kDomainError = 2, kConvergenceError = 3, kBadArguments = 4 };

struct RunRecord {
  std::string command;
  Json inputs;
  Json outputs;
  double error_estimate = 0.0;
  std::optional<double> wall_time_s;  // null under --seed-precision

  Json to_json() const;
};

// Parses "re" or "re,im"; scientific notation accepted.
Complex parse_complex(const std::string& text);

// "log:A:B:N": N values of log z spaced geometrically from A to B.
std::vector<double> parse_grid(const std::string& text);

int exit_code_for(const Error& e);

// Runs fn(i) for i in [0, n) on up to `threads` workers; results keep input order.
template <class T>
std::vector<T> fan_out(std::size_t n, unsigned threads, const std::function<T(std::size_t)>& fn);

// Entry point shared by the executable and the tests.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace lindelof::cli

#include "cli_fan_out.inl"
