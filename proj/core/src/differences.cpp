#include "lindelof/differences.hpp"

#include <cmath>
#include <numbers>

#include "lindelof/continuation.hpp"
#include "lindelof/errors.hpp"

namespace lindelof {
namespace {

constexpr int kMaxBits = 1 << 24;

std::function<Mp(long)> builtin_sequence(SequenceKind kind) {
  switch (kind) {
    case SequenceKind::ExpSqrtPlus: return [](long k) { return exp(sqrt(Mp(k))); };
    case SequenceKind::ExpSqrtMinus: return [](long k) { return exp(-sqrt(Mp(k))); };
    case SequenceKind::ExpInvPlus: return [](long k) { return k == 0 ? Mp(0) : exp(1 / Mp(k)); };
    case SequenceKind::ExpInvMinus: return [](long k) { return k == 0 ? Mp(0) : exp(-1 / Mp(k)); };
    case SequenceKind::Custom: break;
  }
  raise(Errc::UnsupportedKind, "custom sequences need an evaluator");
}

// sum_{j=0}^{m} C(m, j) (-1)^j f(offset + j) at the current default precision.
Mp alternating_binomial_sum(long m, long offset, const std::function<Mp(long)>& f) {
  BigInt binom = 1;
  Mp sum = 0;
  for (long j = 0; j <= m; ++j) {
    const Mp term = Mp(binom) * f(offset + j);
    if (j % 2 == 0)
      sum += term;
    else
      sum -= term;
    binom *= (m - j);
    binom /= (j + 1);
  }
  return sum;
}

}  // namespace

int difference_bits(long n, int requested_bits) {
  const double need = std::ceil(1.45 * double(n)) + 64.0;
  if (need > kMaxBits) raise(Errc::PrecisionCap, "differences of this length exceed the precision cap");
  return std::max(requested_bits, static_cast<int>(need));
}

DifferenceResult differences_exact(const DifferenceRequest& req) {
  req.ctx.validate();
  if (req.n < 0) raise(Errc::InvalidArgument, "n must be non-negative");
  const auto f = req.kind == SequenceKind::Custom ? req.custom : builtin_sequence(req.kind);
  if (!f) raise(Errc::InvalidArgument, "custom sequence evaluator missing");
  DifferenceResult out;
  out.bits = difference_bits(req.n, req.ctx.bits);
  ScopedPrecision guard(out.bits);
  out.value = static_cast<double>(alternating_binomial_sum(req.n, 0, f));
  return out;
}

double differences_asymptotic(SequenceKind kind, long n) {
  if (n < 3) raise(Errc::Domain, "asymptotic differences need n >= 3");
  const double l = std::log(double(n));
  const double sqrt_pi = std::sqrt(std::numbers::pi);
  switch (kind) {
    case SequenceKind::ExpSqrtPlus: return -1.0 / std::sqrt(std::numbers::pi * l);
    case SequenceKind::ExpSqrtMinus: return 1.0 / std::sqrt(std::numbers::pi * l);
    case SequenceKind::ExpInvPlus: return -std::exp(2.0 * std::sqrt(l)) / (2.0 * sqrt_pi * std::pow(l, 0.25));
    case SequenceKind::ExpInvMinus:
      return -std::cos(2.0 * std::sqrt(l) - std::numbers::pi / 4) / (sqrt_pi * std::pow(l, 0.25));
    case SequenceKind::Custom: break;
  }
  raise(Errc::UnsupportedKind, "no asymptotic form for custom sequences");
}

double euler_transform_check(const CoefficientFunction& f, Complex z, double f0, const PrecisionContext& ctx) {
  ctx.validate();
  const double r = std::abs(z);
  if (!(r < 0.5)) raise(Errc::Domain, "Euler transform check needs |z| < 1/2");
  const Complex w = z / (1.0 - z);
  const auto F = direct_sum(f, w, ctx);
  const Complex rhs = (f0 + F.value.value()) / (1.0 - z);

  auto seq = [&f, f0](long k) { return k == 0 ? Mp(f0) : f.sequence_mp(k); };
  const long N = static_cast<long>(std::ceil(std::log(ctx.tol * 1e-4) / std::log(r))) + 4;
  CompensatedSum<Complex> lhs;
  Complex zn = 1.0;
  for (long n = 0; n <= N; ++n) {
    DifferenceRequest req;
    req.kind = SequenceKind::Custom;
    req.n = n;
    req.custom = seq;
    lhs.add(differences_exact(req).value * zn);
    zn *= z;
  }
  return std::abs(lhs.value() - rhs);
}

double madsen_pmf(long n, long x, double p, double a, const PrecisionContext& ctx) {
  ctx.validate();
  if (n < 0 || x < 0 || x > n) raise(Errc::InvalidArgument, "need 0 <= x <= n");
  if (!(p > 0.0 && p < 1.0)) raise(Errc::InvalidArgument, "p must lie in (0, 1)");
  if (!(a >= 0.0 && a <= 1.0)) raise(Errc::InvalidArgument, "a must lie in [0, 1]");
  const int bits = difference_bits(n - x, ctx.bits);
  ScopedPrecision guard(bits);
  const Mp log_p = log(Mp(p));
  const Mp mp_a(a);
  auto power = [&](long k) { return a == 0.5 ? sqrt(Mp(k)) : pow(Mp(k), mp_a); };
  auto pi_k = [&](long k) { return k == 0 ? Mp(1) : exp(log_p * power(k)); };
  BigInt choose = 1;
  for (long i = 0; i < x; ++i) {
    choose *= (n - i);
    choose /= (i + 1);
  }
  return static_cast<double>(Mp(choose) * alternating_binomial_sum(n - x, x, pi_k));
}

double madsen_pmf_asymptotic(long n, long x, double p, double a) {
  if (!(a > 0.0 && a < 1.0)) raise(Errc::Domain, "asymptotic PMF needs 0 < a < 1");
  if (n < 3 || x < 0) raise(Errc::Domain, "asymptotic PMF needs n >= 3 and x >= 0");
  const double l = std::log(double(n));
  const double g = std::tgamma(1.0 - a);
  if (x == 0) return -std::log(p) / (g * std::pow(l, a));
  return -a * std::log(p) / (double(x) * g * std::pow(l, a + 1.0));
}

std::string sequence_kind_name(SequenceKind kind) {
  switch (kind) {
    case SequenceKind::ExpSqrtPlus: return "expsqrt+";
    case SequenceKind::ExpSqrtMinus: return "expsqrt-";
    case SequenceKind::ExpInvPlus: return "expinv+";
    case SequenceKind::ExpInvMinus: return "expinv-";
    case SequenceKind::Custom: return "custom";
  }
  return "unknown";
}

SequenceKind sequence_kind_from_name(const std::string& name) {
  for (SequenceKind k : {SequenceKind::ExpSqrtPlus, SequenceKind::ExpSqrtMinus, SequenceKind::ExpInvPlus,
                         SequenceKind::ExpInvMinus})
    if (sequence_kind_name(k) == name) return k;
  raise(Errc::InvalidArgument, "unknown sequence kind '" + name + "'");
}

}  // namespace lindelof
