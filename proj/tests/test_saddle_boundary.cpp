#include <gtest/gtest.h>

#include <cmath>
#include <numbers>

#include <boost/math/special_functions/binomial.hpp>

#include "lindelof/coeff_functions.hpp"
#include "lindelof/continuation.hpp"
#include "lindelof/errors.hpp"
#include "lindelof/saddle_boundary.hpp"

using namespace lindelof;
using std::numbers::pi;

namespace {

Errc code_of(const std::function<void()>& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.code();
  }
  return static_cast<Errc>(-1);
}

// (-1)^k sum_n C(n, k) exp(c sqrt n), summed in long double until terms vanish.
long double abel_oracle(double c, int k) {
  long double s = 0;
  for (long n = std::max(k, 1); n < 400000; ++n) {
    const long double t = boost::math::binomial_coefficient<long double>(unsigned(n), unsigned(k)) *
                          std::exp(static_cast<long double>(c) * std::sqrt(static_cast<long double>(n)));
    s += t;
    if (n > 100 && t < 1e-22L * s) break;
  }
  return k % 2 == 0 ? s : -s;
}

}  // namespace

TEST(Constants, TableRowsAtInfinity) {
  const auto s = saddle_constants(1.0, -1.0);
  EXPECT_NEAR(s.K1, 1.0 / (2.0 * std::sqrt(pi)), 1e-12);
  EXPECT_NEAR(s.K2, 2.0, 1e-12);
  EXPECT_NEAR(s.mu, 0.25 - 0.05, 1e-12);
  const auto t = two_saddle_constants(-1.0, -1.0);
  EXPECT_NEAR(t.A1, -1.0 / std::sqrt(pi), 1e-12);
  EXPECT_EQ(t.A2, 0.0);
  EXPECT_NEAR(t.A3, 2.0, 1e-12);
  EXPECT_NEAR(t.A4, -pi / 4, 1e-12);
}

TEST(Constants, TableRowAtMinusOne) {
  const auto l = laplace_constants(1.0, 0.5);
  EXPECT_NEAR(l.C1, std::sqrt(pi), 1e-12);
  EXPECT_NEAR(l.C2, 0.25, 1e-12);
  EXPECT_NEAR(l.C3, 0.25, 1e-12);
  EXPECT_NEAR(l.mu, 0.5 - 0.05, 1e-12);
  const auto a = approx_minus_one(1.0, 0.5, -0.99);
  ASSERT_TRUE(a.one_plus_z_expansion.has_value());
  const auto& term = a.one_plus_z_expansion->terms.front();
  EXPECT_NEAR(term.coeff.real(), std::sqrt(pi) * std::exp(-0.125), 1e-12);
  EXPECT_NEAR(term.z_exp.real(), -1.5, 1e-15);
  ASSERT_TRUE(term.exp.has_value());
  EXPECT_NEAR(term.exp->q.real(), 0.25, 1e-15);
  EXPECT_NEAR(term.exp->beta, -1.0, 1e-15);
  const double h = 0.01;
  EXPECT_NEAR(*a.one_plus_z_form, std::sqrt(pi) * std::exp(-0.125) * std::pow(h, -1.5) * std::exp(0.25 / h),
              1e-10 * *a.one_plus_z_form);
}

TEST(Constants, OtherParameters) {
  EXPECT_NEAR(saddle_constants(2.0, -1.0).K2, 3.0 / std::sqrt(2.0), 1e-12);
  EXPECT_NEAR(saddle_constants(1.0, -50.0).mu, 1.0 / 51.0, 1e-12);
  EXPECT_GT(two_saddle_constants(-1.0, -3.0).A2, 0.0);
  EXPECT_LT(laplace_constants(1.0, 1.0 - 1e-9).C2, 1e-6);
  EXPECT_EQ(code_of([] { saddle_constants(-1.0, -1.0); }), Errc::Domain);
  EXPECT_EQ(code_of([] { two_saddle_constants(1.0, -1.0); }), Errc::Domain);
  EXPECT_EQ(code_of([] { laplace_constants(1.0, 1.5); }), Errc::Domain);
  EXPECT_EQ(code_of([] { approx_infinity(1.0, 0.5, 10.0); }), Errc::Domain);
  EXPECT_EQ(code_of([] { approx_minus_one(1.0, 0.5, 0.5); }), Errc::Domain);
}

TEST(ApproxInfinity, ClosedForms) {
  const auto g = approx_infinity(1.0, -1.0, 100.0);
  const double log_expect = 20.0 - std::log(2.0 * std::sqrt(pi)) - 0.25 * std::log(100.0);
  EXPECT_NEAR(g.value.log_scale + std::log(std::abs(g.value.mantissa)), log_expect, 1e-12);
  EXPECT_LT(g.value.mantissa.real(), 0.0);
  EXPECT_EQ(g.expansion.terms.size(), 1u);

  const double root_l = (10.0 * pi + pi / 4) / 2.0;
  const double L = root_l * root_l;
  const auto o = approx_infinity(-1.0, -1.0, L);
  EXPECT_NEAR(o.value.value().real(), -std::pow(L, -0.25) / std::sqrt(pi), 1e-12);
}

TEST(ApproxInfinity, SaddleRatioDecreases) {
  const auto f = parse_builtin_spec("exp:1,-1");
  const double mu = saddle_constants(1.0, -1.0).mu;
  double prev = std::numeric_limits<double>::infinity();
  for (double L : {1e2, 1e3, 1e4}) {
    const auto c = continue_gf_log(f, L);
    const auto a = approx_infinity(1.0, -1.0, L);
    const Complex ratio = c.value.mantissa / a.value.mantissa * std::exp(c.value.log_scale - a.value.log_scale);
    const double dev = std::abs(ratio - 1.0);
    EXPECT_LT(dev, prev) << L;
    EXPECT_LE(dev, 3.0 * std::pow(L, -mu)) << L;
    prev = dev;
  }
}

TEST(ApproxInfinity, OscillationZerosAreBracketed) {
  const auto f = parse_builtin_spec("exp:-1,-1");
  auto value = [&](double L) { return continue_gf_log(f, L).unscaled().real(); };
  int checked = 0;
  for (int m = 0; checked < 5; ++m) {
    const double r = (pi / 2 + m * pi + pi / 4) / 2.0;
    const double L = r * r;
    if (L < 50.0) continue;
    const double r_next = r + pi / 2;
    const double gap = r_next * r_next - L;
    const double lo = L - 0.05 * gap, hi = L + 0.05 * gap;
    EXPECT_LT(value(lo) * value(hi), 0.0) << "zero near L=" << L;
    ++checked;
  }
}

TEST(PolylogSum, MatchesDirectSum) {
  const auto f = parse_builtin_spec("exp:1,-1");
  for (Complex z : {Complex(-0.5, 0.0), Complex(0.3, 0.2), Complex(0.0, -0.7)}) {
    const Complex d = direct_sum(f, z).value.value();
    EXPECT_LT(std::abs(polylog_sum(1.0, -1.0, z) - d), 1e-11 * std::abs(d)) << z;
  }
  const Complex z(0.4, -0.3);
  EXPECT_LT(std::abs(polylog_sum(0.0, -1.0, z) + z / (1.0 + z)), 1e-14);
  EXPECT_EQ(code_of([] { polylog_sum(1.0, -1.0, 1.5); }), Errc::Divergence);
}

TEST(PolylogSum, ConstantNearMinusOne) {
  double prev = std::numeric_limits<double>::infinity();
  for (double h : {1e-2, 1e-3, 1e-4}) {
    const double v = polylog_sum(1.0, -1.0, -1.0 + h).real();
    const double rest = v - 1.0 / h - std::log(1.0 / h);
    const double dev = std::abs(rest - 0.078189);
    EXPECT_LT(dev, prev) << h;
    prev = dev;
  }
  EXPECT_LT(prev, 1e-2);
}

TEST(AbelCoefficients, MatchSummationOracle) {
  for (int k = 0; k <= 4; ++k) {
    const double u = abel_taylor_coeff(-1.0, 0.5, k);
    const double o = static_cast<double>(abel_oracle(-1.0, k));
    EXPECT_NEAR(u, o, 1e-11 * std::abs(o)) << k;
    // every summand is positive, so |u_k| exceeds its largest one
    const long n = 4L * k * k;
    if (k > 0) {
      const double single = boost::math::binomial_coefficient<double>(unsigned(n), unsigned(k)) * std::exp(-std::sqrt(n));
      EXPECT_GE(std::abs(u), single) << k;
    }
  }
}

TEST(AbelCoefficients, TaylorPolynomialMatchesDirectSum) {
  const double h = 1e-3;
  const auto f = parse_builtin_spec("exp:-1,0.5");
  const double d = direct_sum(f, -1.0 + h).value.value().real();
  const auto a = approx_minus_one(-1.0, 0.5, -1.0 + h);
  const double u3 = abel_taylor_coeff(-1.0, 0.5, 3);
  EXPECT_LE(std::abs(d - a.value), 10.0 * std::abs(u3) * 1e-9);
  EXPECT_NEAR(approx_minus_one(-1.0, 0.5, -1.0).value, abel_taylor_coeff(-1.0, 0.5, 0), 1e-15);
}

TEST(NegLogRatio, SeriesMatchesFunction) {
  for (double beta : {-1.0, -0.5, 0.3, 2.0}) {
    const auto a = neg_log_ratio_power_series(beta, 14);
    EXPECT_EQ(a[0], 1.0);
    for (double h : {0.01, 0.05}) {
      double series = 0.0, hm = 1.0;
      for (double am : a) {
        series += am * hm;
        hm *= h;
      }
      const double exact = std::pow(-std::log1p(-h) / h, beta);
      EXPECT_NEAR(series, exact, 1e-14) << beta << ' ' << h;
    }
  }
  EXPECT_NEAR(neg_log_ratio_power_series(-1.0, 2)[1], -0.5, 1e-15);
  EXPECT_TRUE(neg_log_ratio_power_series(1.0, 0).empty());
}

TEST(ApproxMinusOne, RatioTendsToOne) {
  const auto f = parse_builtin_spec("exp:1,0.5");
  double prev = std::numeric_limits<double>::infinity();
  for (double z : {-0.99, -0.999}) {
    const auto d = direct_sum(f, z);
    const auto a = approx_minus_one(1.0, 0.5, z);
    const double ratio = std::exp(d.value.log_scale - std::log(a.value)) * d.value.mantissa.real();
    const double dev = std::abs(ratio - 1.0);
    EXPECT_LT(dev, prev) << z;
    EXPECT_LE(dev, 3.0 * std::pow(1.0 + z, 0.5 - 0.05)) << z;
    prev = dev;
  }
  const auto far = approx_minus_one(1.0, 0.5, -0.9999);
  ASSERT_TRUE(far.log_value.has_value());
  EXPECT_TRUE(std::isinf(far.value));
  const double v = -std::log(0.9999);
  EXPECT_NEAR(*far.log_value, std::log(std::sqrt(pi)) - 1.5 * std::log(1e-4) + 0.25 / v, 1e-9);
}
