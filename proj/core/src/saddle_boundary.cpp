#include "lindelof/saddle_boundary.hpp"

#include <cmath>
#include <limits>
#include <numbers>

#include <boost/math/special_functions/gamma.hpp>

#include "lindelof/errors.hpp"
#include "lindelof/numerics.hpp"

namespace lindelof {
namespace {

constexpr double kPi = std::numbers::pi;

double saddle_mu(double theta, double eps) {
  return theta >= -2.0 ? theta / (2.0 * (theta - 1.0)) - eps : 1.0 / (1.0 - theta);
}

void check_eps(double eps) {
  if (!(eps >= 0.0) || !std::isfinite(eps)) raise(Errc::InvalidArgument, "eps must be a finite non-negative number");
}

}  // namespace

SaddleConstants saddle_constants(double c, double theta, double eps) {
  check_eps(eps);
  if (!(c > 0.0) || !(theta < 0.0)) raise(Errc::Domain, "saddle constants need c > 0 and theta < 0");
  SaddleConstants k;
  const double ct = -c * theta;
  k.K1 = std::pow(2.0 * kPi * (1.0 - theta), -0.5) * std::pow(ct, 1.0 / (2.0 * (theta - 1.0)));
  k.K2 = (1.0 - 1.0 / (c * theta)) * std::pow(ct, 1.0 / (1.0 - theta));
  k.mu = saddle_mu(theta, eps);
  k.eps = eps;
  return k;
}

TwoSaddleConstants two_saddle_constants(double c, double theta, double eps) {
  check_eps(eps);
  if (!(c < 0.0) || !(theta < 0.0)) raise(Errc::Domain, "two-saddle constants need c < 0 and theta < 0");
  TwoSaddleConstants k;
  const double ct = c * theta;
  const double g = (1.0 - 1.0 / theta) * std::pow(ct, 1.0 / (1.0 - theta));
  k.A1 = -std::pow(ct, 1.0 / (2.0 * (theta - 1.0))) * std::sqrt(2.0 / (kPi * (1.0 - theta)));
  k.A2 = theta == -1.0 ? 0.0 : g * std::cos(kPi / (1.0 - theta));
  k.A3 = g * std::sin(kPi / (1.0 - theta));
  k.A4 = kPi / (2.0 * (theta - 1.0));
  k.mu = saddle_mu(theta, eps);
  k.eps = eps;
  return k;
}

LaplaceConstants laplace_constants(double c, double theta, double eps) {
  check_eps(eps);
  if (!(c > 0.0) || !(theta > 0.0 && theta < 1.0))
    raise(Errc::Domain, "Laplace constants need c > 0 and 0 < theta < 1");
  LaplaceConstants k;
  const double ct = c * theta;
  k.C1 = std::sqrt(2.0 * kPi) * std::pow(1.0 - theta, -0.5) * std::pow(ct, 1.0 / (2.0 * (1.0 - theta)));
  k.C2 = ((1.0 - theta) / theta) * std::pow(ct, 1.0 / (1.0 - theta));
  k.C3 = std::pow(ct, 1.0 / (1.0 - theta));
  k.mu = std::min(theta / (2.0 * (1.0 - theta)) - eps, 1.0);
  k.eps = eps;
  return k;
}

Expansion infinity_expansion(double c, double theta, double eps) {
  if (!(theta < 0.0)) raise(Errc::Domain, "the saddle-point approximant needs theta < 0");
  if (c == 0.0) raise(Errc::Domain, "the saddle-point approximant needs c != 0");
  const double p = theta / (2.0 * (1.0 - theta));
  const double beta = theta / (theta - 1.0);
  ExpansionTerm t;
  t.log_pow = p;
  Expansion e;
  if (c > 0.0) {
    const auto k = saddle_constants(c, theta, eps);
    t.coeff = -k.K1;
    t.exp = ExpFactor{k.K2, beta};
    e.source = "saddle";
  } else {
    const auto k = two_saddle_constants(c, theta, eps);
    t.coeff = k.A1;
    if (k.A2 != 0.0) t.exp = ExpFactor{k.A2, beta};
    t.osc = OscFactor{k.A3, k.A4, beta};
    e.source = "two-saddle";
  }
  e.terms = {t};
  return e;
}

InfinityApprox approx_infinity(double c, double theta, Complex log_z, double eps) {
  if (!(log_z.real() > 1.0)) raise(Errc::Domain, "approximant at infinity needs |z| > e");
  if (!(std::abs(log_z.imag()) < kPi)) raise(Errc::Domain, "z must stay off the negative real axis");
  InfinityApprox out;
  out.expansion = infinity_expansion(c, theta, eps);
  const ExpansionTerm& t = out.expansion.terms.front();
  const Complex logL = std::log(log_z);
  const Complex Lb = std::exp(t.exp ? t.exp->beta * logL : (t.osc->beta * logL));
  Complex expo = t.log_pow * logL;
  if (t.exp) expo += t.exp->q * Lb;
  const double scale = expo.real();
  Complex mant = t.coeff * std::exp(expo - scale);
  if (t.osc) mant *= std::cos(t.osc->r * Lb + t.osc->phase0);
  out.value = {mant, scale};
  return out;
}

Complex polylog_sum(double c, double theta, Complex z, const PrecisionContext& ctx) {
  ctx.validate();
  if (!(theta < 0.0)) raise(Errc::Domain, "polylog sum needs theta < 0");
  const double r = std::abs(z);
  if (!(r < 1.0)) raise(Errc::Divergence, "polylog sum needs |z| < 1");
  // |Li_a(-z)| <= |z|/(1-|z|) for a >= 0.
  const double li_bound = r / (1.0 - r);
  CompensatedSum<Complex> acc;
  double weight = 1.0;  // |c|^k / k!
  Complex ck = 1.0;
  for (int k = 0; k < 2000; ++k) {
    if (k > 0) {
      weight *= std::abs(c) / k;
      ck *= c / double(k);
    }
    if (ck != Complex(0.0, 0.0)) acc.add(ck * polylog(-double(k) * theta, -z, ctx));
    // Remaining k-tail is at most weight * e^{|c|} * li_bound * |c|/(k+1).
    const double tail = weight * std::abs(c) / (k + 1) * std::exp(std::abs(c)) * li_bound;
    if (k >= 1 && tail <= 0.1 * ctx.tol * std::abs(acc.value())) return acc.value();
    if (c == 0.0) return acc.value();
  }
  raise(Errc::NonConvergence, "polylog sum did not converge");
}

double abel_taylor_coeff(double c, double theta, int k, const PrecisionContext& ctx) {
  ctx.validate();
  if (!(c < 0.0) || !(theta > 0.0 && theta < 1.0))
    raise(Errc::Domain, "Abel coefficients need c < 0 and 0 < theta < 1");
  if (k < 0) raise(Errc::InvalidArgument, "k must be non-negative");
  const double peak = std::pow(double(k) / (-c * theta), 1.0 / theta);
  const double log_kfact = std::lgamma(double(k) + 1.0);
  CompensatedSum<double> acc;
  double binom = k == 0 ? 1.0 : 0.0;  // C(n, k), updated multiplicatively
  for (long n = std::max(1, k); n < 100'000'000; ++n) {
    if (n == k) binom = 1.0;
    else if (n > k && n > 1) binom *= double(n) / double(n - k);
    acc.add(binom * std::exp(c * std::pow(double(n), theta)));
    if (double(n) > peak && n % 64 == 0) {
      // sum_{m>n} C(m,k) e^{c m^theta} <= int_n^inf x^k/k! e^{c x^theta} dx.
      const double a = (k + 1) / theta;
      const double x = -c * std::pow(double(n), theta);
      const double log_tail = std::log(boost::math::tgamma(a, x)) - log_kfact - std::log(theta) -
                              a * std::log(-c);
      if (std::exp(log_tail) <= 0.01 * ctx.tol * std::abs(acc.value())) {
        const double s = acc.value();
        return k % 2 == 0 ? s : -s;
      }
    }
  }
  raise(Errc::SlowConvergence, "Abel coefficient sum did not converge");
}

std::vector<double> neg_log_ratio_power_series(double beta, int count) {
  if (count <= 0) return {};
  std::vector<double> p(static_cast<std::size_t>(count));
  for (int m = 0; m < count; ++m) p[static_cast<std::size_t>(m)] = 1.0 / (m + 1);
  std::vector<double> q(static_cast<std::size_t>(count), 0.0);
  q[0] = 1.0;
  for (int m = 1; m < count; ++m) {
    double s = 0.0;
    for (int j = 1; j <= m; ++j) s += ((beta + 1.0) * j - m) * p[static_cast<std::size_t>(j)] * q[static_cast<std::size_t>(m - j)];
    q[static_cast<std::size_t>(m)] = s / m;
  }
  return q;
}

MinusOneApprox approx_minus_one(double c, double theta, double z, double eps, int taylor_order,
                                const PrecisionContext& ctx) {
  if (!(theta > 0.0 && theta < 1.0)) raise(Errc::Domain, "approximant at -1 needs 0 < theta < 1");
  MinusOneApprox out;
  const double h = 1.0 + z;
  if (c < 0.0) {
    if (!(z >= -1.0 && z < 0.0)) raise(Errc::Domain, "approximant at -1 needs z in [-1, 0)");
    if (taylor_order < 0) raise(Errc::InvalidArgument, "taylor order must be non-negative");
    out.expansion.source = "abel";
    double value = 0.0, hk = 1.0;
    for (int k = 0; k <= taylor_order; ++k) {
      const double u = abel_taylor_coeff(c, theta, k, ctx);
      value += u * hk;
      hk *= h;
      ExpansionTerm t;
      t.variable = Variable::OnePlusZAtMinusOne;
      t.coeff = u;
      t.z_exp = double(k);
      out.expansion.terms.push_back(t);
    }
    ExpansionTerm err;
    err.variable = Variable::OnePlusZAtMinusOne;
    err.z_exp = double(taylor_order + 1);
    out.expansion.error_order = err;
    out.value = value;
    return out;
  }
  if (!(z > -1.0 && z < 0.0)) raise(Errc::Domain, "approximant at -1 needs z in (-1, 0)");
  const auto k = laplace_constants(c, theta, eps);
  const double a = (2.0 - theta) / (2.0 * (theta - 1.0));
  const double beta = theta / (theta - 1.0);
  const double v = -std::log(-z);
  out.log_value = std::log(k.C1) + a * std::log(h) + k.C2 * std::pow(v, beta);
  out.value = std::exp(*out.log_value);

  ExpansionTerm tv;
  tv.variable = Variable::NegLogAbsZAtMinusOne;
  tv.coeff = k.C1;
  tv.z_exp = a;
  tv.exp = ExpFactor{k.C2, beta};
  out.expansion.source = "laplace";
  out.expansion.terms = {tv};
  ExpansionTerm ev;
  ev.variable = Variable::NegLogAbsZAtMinusOne;
  ev.z_exp = a + k.mu;
  ev.exp = ExpFactor{k.C2, beta};
  out.expansion.error_order = ev;

  // C2 v^beta = sum_m C2 a_m h^{beta+m}; keep the exponents <= 0.
  const int count = static_cast<int>(std::floor(-beta + 1e-12)) + 1;
  const auto am = neg_log_ratio_power_series(beta, count);
  double log_form = std::log(k.C1) + a * std::log(h);
  double constant = 0.0;
  for (int m = 0; m < count; ++m) {
    const double e = beta + m;
    const double coef = k.C2 * am[static_cast<std::size_t>(m)];
    if (std::abs(e) < 1e-12)
      constant += coef;
    else
      log_form += coef * std::pow(h, e);
  }
  out.one_plus_z_form = std::exp(log_form + constant);
  if (count <= 2) {
    Expansion e1;
    e1.source = "laplace";
    ExpansionTerm t;
    t.variable = Variable::OnePlusZAtMinusOne;
    t.coeff = k.C1 * std::exp(constant);
    t.z_exp = a;
    t.exp = ExpFactor{k.C2, beta};
    const bool second_exp = count == 2 && std::abs(beta + 1.0) > 1e-12;
    if (!second_exp) {
      e1.terms = {t};
      out.one_plus_z_expansion = e1;
    }
  }
  return out;
}

}  // namespace lindelof
