#include <algorithm>
#include <cmath>
#include <numbers>

#include "lindelof/errors.hpp"
#include "lindelof/numerics.hpp"

namespace lindelof {
namespace {

std::vector<Complex> trapezoid_coeffs(const std::vector<Complex>& values, double radius, int count,
                                      int laurent_order) {
  const std::size_t n = values.size();
  std::vector<Complex> out(static_cast<std::size_t>(count));
  for (int idx = 0; idx < count; ++idx) {
    const int k = idx - laurent_order;
    CompensatedSum<Complex> acc;
    for (std::size_t j = 0; j < n; ++j) {
      const double angle = -2.0 * std::numbers::pi * double(k) * double(j) / double(n);
      acc.add(values[j] * std::polar(1.0, angle));
    }
    out[static_cast<std::size_t>(idx)] = acc.value() / double(n) * std::pow(radius, -double(k));
  }
  return out;
}

}  // namespace

std::vector<Complex> taylor_coeffs_numeric(const AnalyticFunction& f, Complex s0, double radius,
                                           int count, const PrecisionContext& ctx,
                                           int laurent_order) {
  ctx.validate();
  if (!(radius > 0.0)) raise(Errc::InvalidArgument, "contour radius must be positive");
  if (count <= 0) return {};
  if (laurent_order < 0) raise(Errc::InvalidArgument, "laurent_order must be non-negative");

  std::size_t nodes = 16;
  while (nodes < static_cast<std::size_t>(2 * (count + laurent_order))) nodes *= 2;

  auto sample = [&](std::size_t n, std::size_t j) {
    return f(s0 + std::polar(radius, 2.0 * std::numbers::pi * double(j) / double(n)));
  };
  std::vector<Complex> values(nodes);
  for (std::size_t j = 0; j < nodes; ++j) values[j] = sample(nodes, j);
  std::vector<Complex> prev = trapezoid_coeffs(values, radius, count, laurent_order);

  for (int doubling = 0; doubling < 12; ++doubling) {
    std::vector<Complex> next_values(2 * nodes);
    for (std::size_t j = 0; j < nodes; ++j) {
      next_values[2 * j] = values[j];
      next_values[2 * j + 1] = sample(2 * nodes, 2 * j + 1);
    }
    nodes *= 2;
    values = std::move(next_values);
    std::vector<Complex> cur = trapezoid_coeffs(values, radius, count, laurent_order);

    double scale = 0.0;
    double diff = 0.0;
    for (int idx = 0; idx < count; ++idx) {
      const double w = std::pow(radius, double(idx - laurent_order));
      scale = std::max(scale, std::abs(cur[static_cast<std::size_t>(idx)]) * w);
      diff = std::max(diff, std::abs(cur[static_cast<std::size_t>(idx)] -
                                     prev[static_cast<std::size_t>(idx)]) * w);
    }
    if (diff <= ctx.tol * scale || diff < 1e-300) return cur;
    prev = std::move(cur);
  }
  raise(Errc::NonConvergence, "contour Taylor coefficients did not converge");
}

}  // namespace lindelof
