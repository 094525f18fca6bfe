#include <gtest/gtest.h>

#include <cmath>
#include <numbers>

#include <boost/math/special_functions/digamma.hpp>
#include <boost/math/special_functions/sin_pi.hpp>

#include "lindelof/coeff_functions.hpp"
#include "lindelof/continuation.hpp"
#include "lindelof/errors.hpp"
#include "lindelof/expansions.hpp"

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

const ExpansionTerm* find_term(const Expansion& e, Complex z_exp, Complex log_pow = 0.0) {
  for (const auto& t : e.terms)
    if (std::abs(t.z_exp - z_exp) < 1e-8 && std::abs(t.log_pow - log_pow) < 1e-12) return &t;
  return nullptr;
}

double slope(const std::vector<double>& x, const std::vector<double>& y) {
  const double n = double(x.size());
  double sx = 0, sy = 0, sxx = 0, sxy = 0;
  for (std::size_t i = 0; i < x.size(); ++i) {
    sx += x[i];
    sy += y[i];
    sxx += x[i] * x[i];
    sxy += x[i] * y[i];
  }
  return (n * sxy - sx * sy) / (n * sxx - sx * sx);
}

}  // namespace

TEST(Residue, TwoRadiiAgree) {
  const PrecisionContext ctx;
  struct Case {
    std::string spec;
    PoleSingularity pole;
    double r1, r2;
  };
  const auto rg = parse_builtin_spec("recipgamma");
  const double s1 = gamma_plus_one_eq_minus_one_roots(1).front();
  const Complex left = gamma_plus_one_eq_minus_one_left_root();
  const std::vector<Case> cases = {
      {"const:1", {-1.0, 0}, 0.1, 0.3},     {"power:1", {0.0, 1}, 0.1, 0.25},
      {"power:2", {0.0, 2}, 0.1, 0.3},      {"recipgamma", {s1, 1}, 0.05, 0.12},
      {"recipgamma", {left, 1}, 0.1, 0.25}, {"reciptwopow", {Complex(0.0, 2 * pi / std::numbers::ln2), 1}, 0.1, 0.4},
  };
  for (const auto& c : cases) {
    const auto f = parse_builtin_spec(c.spec);
    const auto a = residue_terms(f, c.pole, ctx, c.r1);
    const auto b = residue_terms(f, c.pole, ctx, c.r2);
    ASSERT_EQ(a.size(), b.size()) << c.spec;
    for (std::size_t i = 0; i < a.size(); ++i) {
      EXPECT_TRUE(a[i].same_shape(b[i])) << c.spec;
      EXPECT_LE(std::abs(a[i].coeff - b[i].coeff), ctx.tol * std::max(1.0, std::abs(a[i].coeff)))
          << c.spec << " at " << c.pole.location;
    }
  }
}

TEST(Residue, GeometricPoleAtMinusOne) {
  const auto t = residue_terms(parse_builtin_spec("const:1"), {-1.0, 0});
  ASSERT_EQ(t.size(), 1u);
  EXPECT_NEAR(t[0].coeff.real(), 1.0, 1e-12);
  EXPECT_NEAR(t[0].coeff.imag(), 0.0, 1e-12);
  EXPECT_NEAR(t[0].z_exp.real(), -1.0, 1e-15);
}

TEST(Residue, RecipGammaRealRoots) {
  const auto f = parse_builtin_spec("recipgamma");
  for (double s : gamma_plus_one_eq_minus_one_roots(4)) {
    // Gamma'(s+1) = Gamma(s+1) psi(s+1) = -psi(s+1)
    const double expect = -(pi / boost::math::sin_pi(s)) / -boost::math::digamma(s + 1.0);
    const auto t = residue_terms(f, {s, 1});
    ASSERT_EQ(t.size(), 1u);
    EXPECT_NEAR(t[0].coeff.real(), expect, 1e-10 * std::abs(expect)) << s;
  }
}

TEST(Residue, DoublePoleGivesLogTerm) {
  // -log(1+z) = -log z - 1/z + ... at infinity
  const auto e = polar_expansion(parse_builtin_spec("power:1"), 0.5);
  const auto* lg = find_term(e, 0.0, 1.0);
  ASSERT_NE(lg, nullptr);
  EXPECT_NEAR(lg->coeff.real(), -1.0, 1e-11);
  const auto* c = find_term(e, 0.0, 0.0);
  if (c) EXPECT_NEAR(std::abs(c->coeff), 0.0, 1e-11);
  for (double z : {1e2, 1e3}) EXPECT_NEAR(evaluate_expansion(e, z).real(), -std::log1p(z), 1.5 / z);
}

TEST(PolarExpansion, GeometricOrientation) {
  const auto e = polar_expansion(parse_builtin_spec("const:1"), 2.5);
  ASSERT_EQ(e.terms.size(), 3u);
  const double expect[] = {-1.0, 1.0, -1.0};
  for (int k = 0; k < 3; ++k) {
    EXPECT_NEAR(e.terms[k].z_exp.real(), -double(k), 1e-15);
    EXPECT_NEAR(e.terms[k].coeff.real(), expect[k], 1e-11) << k;
  }
  EXPECT_NEAR(evaluate_expansion(e, 10.0).real(), -10.0 / 11.0, 1e-3);
  ASSERT_TRUE(e.error_order.has_value());
  EXPECT_EQ(e.error_order->z_exp, Complex(-2.5, 0.0));
  for (Complex z : {Complex(50.0, 0.0), std::polar(50.0, pi / 4), std::polar(50.0, -pi / 4)})
    EXPECT_LT(std::abs(evaluate_expansion(e, z) + z / (1.0 + z)), 2.0 * std::pow(50.0, -3.0)) << z;
}

TEST(PolarExpansion, RecipTwoPowLattice) {
  const auto f = parse_builtin_spec("reciptwopow");
  const auto e = polar_expansion(f, 0.4);
  const double step = 2 * pi / std::numbers::ln2;
  const long K = static_cast<long>(std::floor(40.0 / step));
  for (long k = -K; k <= K; ++k) EXPECT_NE(find_term(e, Complex(0.0, k * step), k == 0 ? 1.0 : 0.0), nullptr) << k;
  ASSERT_EQ(e.lattices.size(), 1u);
  EXPECT_FALSE(e.note.empty());
  for (double z : {1e3, 1e4}) {
    const Complex g = continue_gf(f, z).unscaled();
    EXPECT_LT(std::abs(evaluate_expansion(e, z) - g), 3.0 / z) << z;
  }
}

TEST(PolarExpansion, RecipGammaRoots) {
  const auto f = parse_builtin_spec("recipgamma");
  const auto e = polar_expansion(f, 5.5);
  for (double s : {-3.457024, -3.747682, -5.039361}) {
    bool seen = false;
    for (const auto& t : e.terms) seen |= std::abs(t.z_exp - Complex(s, 0.0)) < 1e-5;
    EXPECT_TRUE(seen) << s;
  }
  const Complex left = gamma_plus_one_eq_minus_one_left_root();
  EXPECT_NE(find_term(e, left), nullptr);
  EXPECT_NE(find_term(e, std::conj(left)), nullptr);
  EXPECT_NEAR(e.terms.front().coeff.real(), -0.5, 1e-11);
  EXPECT_FALSE(e.note.empty());

  // The expansion describes the contour integral, i.e. F plus the right-pole residue terms.
  for (double z : {50.0, 100.0}) {
    Complex g = continue_gf(f, z).unscaled();
    for (std::size_t k = 0;; ++k) {
      const auto p = f.right_pole(k);
      const Complex term = p->residue * std::exp(p->location * std::log(z)) * recip_sin_pi(p->location);
      g += term;
      if (k > 40 && std::abs(term) < 1e-20) break;
    }
    EXPECT_LT(std::abs(evaluate_expansion(e, z) - g), 10.0 * std::pow(z, -5.5)) << z;
  }
}

TEST(PolarExpansion, Errors) {
  EXPECT_EQ(code_of([] { polar_expansion(parse_builtin_spec("const:1"), 2.0); }), Errc::HypothesisViolation);
  EXPECT_EQ(code_of([] { polar_expansion(parse_builtin_spec("recipgamma"), 200.0); }), Errc::CatalogIncomplete);
  EXPECT_EQ(code_of([] { polar_expansion(parse_builtin_spec("exp:1,0.5"), 0.5); }), Errc::HypothesisViolation);
}

TEST(AlgebraicExpansion, ExpSqrtLeadingTerms) {
  const auto e = algebraic_expansion(parse_builtin_spec("exp:1,0.5"), 2.0);
  ASSERT_GE(e.terms.size(), 2u);
  EXPECT_NEAR(e.terms[0].coeff.real(), -1.0, 1e-12);
  EXPECT_NEAR(e.terms[1].coeff.real(), -1.0 / std::sqrt(pi), 1e-12);
  EXPECT_NEAR(e.terms[1].log_pow.real(), -0.5, 1e-15);
  const double L = 100.0;
  const Complex two = evaluate_expansion(e, std::exp(L), 2);
  EXPECT_NEAR(two.real(), -1.0 - 1.0 / std::sqrt(100.0 * pi), 1e-12);
  const auto e_minus = algebraic_expansion(parse_builtin_spec("exp:-1,0.5"), 2.0);
  EXPECT_NEAR(e_minus.terms[1].coeff.real(), 1.0 / std::sqrt(pi), 1e-12);
}

TEST(AlgebraicExpansion, PolylogMatchesContinuation) {
  // s^{-1/2}: sum (-z)^n / sqrt(n) = Li_{1/2}(-z)
  const auto f = parse_builtin_spec("power:0.5");
  const auto e = algebraic_expansion(f, 3.0);
  for (double L : {20.0, 40.0}) {
    const Complex g = continue_gf_log(f, L).unscaled();
    EXPECT_LT(std::abs(evaluate_expansion(e, std::exp(L)) - g), 50.0 * std::pow(L, -3.5)) << L;
  }
}

TEST(AlgebraicExpansion, ConvergenceOrderSlopes) {
  const auto f = parse_builtin_spec("exp:1,0.5");
  for (double K : {0.5, 1.5}) {
    const auto e = algebraic_expansion(f, K);
    std::vector<double> lx, ly;
    for (double L : {50.0, 100.0, 200.0}) {
      const auto r = continue_gf_log(f, L);
      const Complex diff = evaluate_expansion(e, std::exp(L)) - r.unscaled();
      lx.push_back(std::log(L));
      ly.push_back(std::log(std::abs(diff)));
    }
    const double predicted = -K - 1.0;
    EXPECT_NEAR(slope(lx, ly), predicted, 0.2 * std::abs(predicted)) << K;
  }
}

TEST(AlgebraicExpansion, RegularSumUpperIndex) {
  EXPECT_EQ(regular_sum_upper_index({Complex(-2, 1), Complex(-2, -1)}), 2);
  EXPECT_EQ(regular_sum_upper_index({Complex(-2, 0)}), 1);
  EXPECT_EQ(regular_sum_upper_index({Complex(-1.5, 0)}), 1);
  EXPECT_EQ(regular_sum_upper_index({Complex(0, 0)}), -1);
  EXPECT_EQ(regular_sum_upper_index({Complex(0, 3)}), 0);
  EXPECT_EQ(regular_sum_upper_index({Complex(-0.3, 0)}), 0);
  EXPECT_THROW(regular_sum_upper_index({}), Error);
}

TEST(ExpansionTerms, MergeIsIdempotentAndValuePreserving) {
  std::vector<ExpansionTerm> raw;
  for (int k = 0; k < 12; ++k) {
    ExpansionTerm t;
    t.coeff = Complex(0.3 * k - 1.0, 0.1 * (k % 3));
    t.z_exp = Complex(-0.5 * (k % 4), 0.0);
    t.log_pow = Complex(k % 2 == 0 ? 0.0 : -0.5, 0.0);
    raw.push_back(t);
  }
  ExpansionTerm zero;
  zero.coeff = 0.0;
  zero.z_exp = -7.0;
  raw.push_back(zero);
  const auto merged = merge_terms(raw);
  EXPECT_LT(merged.size(), raw.size());
  const auto twice = merge_terms(merged);
  ASSERT_EQ(twice.size(), merged.size());
  for (std::size_t i = 0; i < merged.size(); ++i) {
    EXPECT_TRUE(twice[i].same_shape(merged[i]));
    EXPECT_EQ(twice[i].coeff, merged[i].coeff);
  }
  Expansion a, b;
  a.terms = raw;
  b.terms = merged;
  for (Complex z : {Complex(30.0, 0.0), Complex(1e4, 2e3)}) {
    const Complex va = evaluate_expansion(a, z), vb = evaluate_expansion(b, z);
    EXPECT_LE(std::abs(va - vb), 1e-14 * std::abs(va)) << z;
  }
}

TEST(ExpansionTerms, DominanceOrder) {
  auto term = [](Complex s, Complex p) {
    ExpansionTerm t;
    t.z_exp = s;
    t.log_pow = p;
    return t;
  };
  EXPECT_TRUE(dominates(term(0.0, 0.0), term(-1.0, 5.0)));
  EXPECT_TRUE(dominates(term(-1.0, 1.0), term(-1.0, 0.0)));
  EXPECT_FALSE(dominates(term(-1.0, 0.0), term(-1.0, 0.5)));
  std::vector<ExpansionTerm> v = {term(-2.0, 0.0), term(0.0, -1.0), term(-1.0, 2.0), term(0.0, 0.0)};
  sort_by_dominance(v);
  EXPECT_EQ(v[0].log_pow, Complex(0.0, 0.0));
  EXPECT_EQ(v[1].log_pow, Complex(-1.0, 0.0));
  EXPECT_EQ(v[3].z_exp, Complex(-2.0, 0.0));
}

TEST(ExpansionTerms, VariableMismatch) {
  Expansion e;
  ExpansionTerm t;
  t.variable = Variable::OnePlusZAtMinusOne;
  e.terms = {t, ExpansionTerm{}};
  EXPECT_EQ(code_of([&] { evaluate_expansion(e, 10.0); }), Errc::VariableMismatch);
}
