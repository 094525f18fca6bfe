#include <cmath>
#include <numbers>

#include "lindelof/errors.hpp"
#include "lindelof/numerics.hpp"

namespace lindelof {
namespace {

constexpr long kSeriesCap = 10'000'000;

Complex polylog_series(double alpha, Complex z, double tol) {
  const double r = std::abs(z);
  if (r >= 1.0) raise(Errc::Divergence, "polylog series needs |z| < 1");
  CompensatedSum<Complex> sum;
  Complex zn = z;
  for (long n = 1; n <= kSeriesCap; ++n) {
    const Complex term = zn * std::exp(-alpha * std::log(double(n)));
    sum.add(term);
    zn *= z;
    // Term ratios from here on never exceed rho.
    const double rho = alpha >= 0.0 ? r : r * std::exp(-alpha * std::log1p(1.0 / double(n)));
    if (rho < 1.0) {
      const double tail = std::abs(term) * rho / (1.0 - rho);
      if (tail <= 1e-3 * tol * std::abs(sum.value()) || tail < 1e-300) return sum.value();
    }
  }
  raise(Errc::SlowConvergence, "polylog series did not reach tolerance within the term cap");
}

// Li_alpha(z) for integer alpha >= 1 around z = 1, in w = -log z, |w| < pi.
Complex polylog_log_expansion(int alpha, Complex z, double tol) {
  const Complex w = -std::log(z);
  if (std::abs(w) >= std::numbers::pi)
    raise(Errc::Domain, "log expansion of the polylog needs |log z| < pi");
  double harmonic = 0.0;
  double fact = 1.0;  // (alpha-1)!
  for (int k = 1; k < alpha; ++k) {
    harmonic += 1.0 / k;
    fact *= k;
  }
  const double sign_alpha = (alpha % 2 == 0) ? 1.0 : -1.0;
  Complex result = sign_alpha / fact * std::pow(w, alpha - 1) * (std::log(w) - harmonic);
  Complex wj = 1.0;
  double jfact = 1.0;
  const double ratio = std::abs(w) / (2.0 * std::numbers::pi);
  for (int j = 0; j < 160; ++j) {
    if (j > 0) {
      wj *= w;
      jfact *= j;
    }
    if (j == alpha - 1) continue;
    const int arg = alpha - j;
    double zv;
    if (arg >= 2)
      zv = zeta_int(arg);
    else
      zv = zeta_nonpositive_int(-arg);
    const double sign = (j % 2 == 0) ? 1.0 : -1.0;
    const Complex term = sign * zv / jfact * wj;
    result += term;
    // |zeta(-m) w^{m+alpha}/(m+alpha)!| <= 2 (|w|/2pi)^{m+alpha} up to a factor near 1.
    if (j > alpha + 1 && 4.0 * std::pow(ratio, j) / (1.0 - ratio) <= tol * std::abs(result))
      return result;
  }
  raise(Errc::NonConvergence, "log expansion of the polylog did not converge");
}

}  // namespace

Complex polylog(double alpha, Complex z, const PrecisionContext& ctx, PolylogMethod method) {
  ctx.validate();
  if (!std::isfinite(alpha) || !std::isfinite(z.real()) || !std::isfinite(z.imag()))
    raise(Errc::InvalidArgument, "polylog arguments must be finite");
  const bool int_alpha = alpha == std::round(alpha);
  if (alpha == 0.0 && method != PolylogMethod::LogExpansion) {
    if (z == Complex(1.0, 0.0)) raise(Errc::SingularityHit, "Li_0 has a pole at z = 1");
    return z / (1.0 - z);
  }
  if (z == Complex(0.0, 0.0)) return 0.0;
  if (!(std::abs(z) < 1.0)) raise(Errc::Divergence, "polylog series needs |z| < 1");
  if (method == PolylogMethod::LogExpansion) {
    if (!int_alpha || alpha < 1.0)
      raise(Errc::UnsupportedParameter, "log expansion of the polylog needs integer alpha >= 1");
    return polylog_log_expansion(static_cast<int>(alpha), z, ctx.tol);
  }
  if (method == PolylogMethod::Auto && int_alpha && alpha >= 1.0 && std::abs(z) > 0.5 &&
      std::abs(std::log(z)) < 3.0)
    return polylog_log_expansion(static_cast<int>(alpha), z, ctx.tol);
  return polylog_series(alpha, z, ctx.tol);
}

}  // namespace lindelof
