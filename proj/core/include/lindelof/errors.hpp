#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace lindelof {

// Every failure raised by the library carries one of these codes.
enum class Errc {
  InvalidArgument,
  Domain,
  Pole,
  Overflow,
  SectorViolation,
  SingularityHit,
  UnsupportedParameter,
  UnsupportedKind,
  HypothesisViolation,
  CatalogIncomplete,
  VariableMismatch,
  UnanchoredExactness,
  Divergence,
  SlowConvergence,
  NonConvergence,
  CapExceeded,
  PrecisionCap,
};

// Coarse grouping used for process exit codes.
enum class ErrorCategory { Domain, Convergence, BadArgument };

std::string_view to_string(Errc code) noexcept;
ErrorCategory category(Errc code) noexcept;

class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& what) : std::runtime_error(what), code_(code) {}

  Errc code() const noexcept { return code_; }
  ErrorCategory category() const noexcept { return lindelof::category(code_); }

 private:
  Errc code_;
};

[[noreturn]] void raise(Errc code, const std::string& what);

}  // namespace lindelof
