#include <gtest/gtest.h>

#include <algorithm>
#include <cmath>
#include <numbers>

#include <boost/math/special_functions/gamma.hpp>

#include "lindelof/coeff_functions.hpp"
#include "lindelof/errors.hpp"
#include "lindelof/numerics.hpp"

using namespace lindelof;
using std::numbers::pi;

namespace {

std::vector<std::string> contour_builtins() {
  return {"exp:1,0.5",  "exp:-1,0.5", "exp:1,-1",  "exp:-1,-1",    "exp:1,-0.5", "exp:2,0.75",
          "exp:0.5,1",  "recipgamma", "reciptwopow", "gammaratio", "recipzeta",  "power:1",
          "power:0.5", "power:-2",   "const:1",    "const:-3",     "identity"};
}

Errc code_of(const std::function<void()>& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.code();
  }
  return static_cast<Errc>(-1);
}

}  // namespace

TEST(Builtins, ExpPowerCatalog) {
  const auto f = make_builtin(BuiltinKind::ExpPower, {1.0, 0.5});
  ASSERT_EQ(f.catalog.size(), 1u);
  const auto* a = std::get_if<AlgebraicSingularity>(&f.catalog[0]);
  ASSERT_NE(a, nullptr);
  EXPECT_EQ(a->location, Complex(0.0, 0.0));
  EXPECT_EQ(a->lambda, Complex(0.0, 0.0));
  EXPECT_EQ(a->theta, Complex(0.5, 0.0));
  double fact = 1.0;
  for (std::size_t k = 0; k < 10; ++k) {
    if (k > 0) fact *= double(k);
    EXPECT_NEAR(a->psi_coeffs[k].real(), 1.0 / fact, 1e-15);
  }
  EXPECT_GT(a->cut_angle, 0.0);
  EXPECT_LT(a->cut_angle, pi / 2);
}

TEST(Builtins, RecipTwoPowLattice) {
  const auto f = make_builtin(BuiltinKind::RecipTwoPow);
  ASSERT_EQ(f.catalog.size(), 1u);
  const auto* l = std::get_if<PoleLattice>(&f.catalog[0]);
  ASSERT_NE(l, nullptr);
  EXPECT_EQ(l->base, Complex(0.0, 0.0));
  EXPECT_NEAR(l->step.imag(), 2.0 * pi / std::log(2.0), 1e-13);
  EXPECT_EQ(l->step.real(), 0.0);
  EXPECT_FALSE(l->count.has_value());
  EXPECT_TRUE(l->two_sided);
}

TEST(Builtins, ConstantIsEmpty) {
  const auto f = make_builtin(BuiltinKind::Constant, {1.0});
  EXPECT_TRUE(f.catalog.empty());
  EXPECT_LT(f.growth_A, 0.05);
  EXPECT_EQ(evaluate(f, Complex(3.0, 4.0)), Complex(1.0, 0.0));
}

TEST(Builtins, GrowthBelowPi) {
  for (const auto& spec : contour_builtins()) EXPECT_LT(parse_builtin_spec(spec).growth_A, pi) << spec;
}

TEST(Builtins, UnsupportedParameters) {
  EXPECT_EQ(code_of([] { make_builtin(BuiltinKind::ExpPower, {1.0, 1.5}); }), Errc::UnsupportedParameter);
  EXPECT_EQ(code_of([] { make_builtin(BuiltinKind::ExpPower, {1.0}); }), Errc::InvalidArgument);
  EXPECT_EQ(code_of([] { parse_builtin_spec("nosuch:1"); }), Errc::InvalidArgument);
  EXPECT_EQ(code_of([] { parse_builtin_spec("exp:1,x"); }), Errc::InvalidArgument);
}

TEST(Builtins, NamesRoundTrip) {
  for (auto k : {BuiltinKind::ExpPower, BuiltinKind::RecipGammaPlusOne, BuiltinKind::RecipTwoPow,
                 BuiltinKind::GammaRatioNormalized, BuiltinKind::GammaSqrt2, BuiltinKind::RecipZetaShift,
                 BuiltinKind::PowerLaw, BuiltinKind::Constant, BuiltinKind::Identity})
    EXPECT_EQ(builtin_from_name(builtin_name(k)), k);
}

TEST(Evaluate, Examples) {
  EXPECT_NEAR(evaluate(parse_builtin_spec("exp:1,-1"), 1.0).real(), std::numbers::e, 1e-15);
  EXPECT_NEAR(evaluate(parse_builtin_spec("recipgamma"), 1.0).real(), 0.5, 1e-15);
  const double g = boost::math::tgamma(2.0 * std::numbers::sqrt2);
  EXPECT_NEAR(evaluate(parse_builtin_spec("gammaratio"), 2.0).real(), g, 1e-13 * g);
  EXPECT_NEAR(evaluate(parse_builtin_spec("reciptwopow"), 3.0).real(), 1.0 / 7.0, 1e-15);
  EXPECT_NEAR(evaluate(parse_builtin_spec("recipzeta"), 2.0).real(), 90.0 / std::pow(pi, 4), 1e-14);
  EXPECT_NEAR(evaluate(parse_builtin_spec("power:2"), 4.0).real(), 1.0 / 16.0, 1e-16);
  EXPECT_EQ(evaluate(parse_builtin_spec("identity"), Complex(2.0, 1.0)), Complex(2.0, 1.0));
}

TEST(Evaluate, SequenceMatchesEvaluator) {
  ScopedPrecision p(128);
  for (const auto& spec : contour_builtins()) {
    const auto f = parse_builtin_spec(spec);
    for (long n : {1L, 2L, 7L, 30L}) {
      const double a = static_cast<double>(f.sequence_mp(n));
      const double b = evaluate(f, double(n)).real();
      EXPECT_NEAR(a, b, 1e-13 * std::max(1.0, std::abs(b))) << spec << " n=" << n;
    }
  }
}

TEST(Evaluate, SingularityHit) {
  const auto f = parse_builtin_spec("recipgamma");
  const double root = gamma_plus_one_eq_minus_one_roots(1).front();
  EXPECT_EQ(code_of([&] { evaluate(f, root); }), Errc::SingularityHit);
  EXPECT_EQ(code_of([&] { evaluate(parse_builtin_spec("reciptwopow"), Complex(0.0, 2.0 * pi / std::log(2.0))); }),
            Errc::SingularityHit);
  EXPECT_EQ(code_of([&] { evaluate(parse_builtin_spec("exp:1,-1"), 0.0); }), Errc::SingularityHit);
}

TEST(Evaluate, GrowthBoundOnContour) {
  for (const auto& spec : contour_builtins()) {
    const auto f = parse_builtin_spec(spec);
    ASSERT_TRUE(f.lindelof_guarantee) << spec;
    for (double t = -50.0; t <= 50.0; t += 0.125) {
      const Complex s(0.5, t);
      const double bound = f.growth_C * std::exp(f.growth_A * std::abs(s));
      EXPECT_LE(std::abs(evaluate(f, s)), bound) << spec << " t=" << t;
    }
  }
  EXPECT_FALSE(make_builtin(BuiltinKind::GammaSqrt2).lindelof_guarantee);
}

TEST(Evaluate, CauchyRiemannOnRightHalfPlane) {
  for (const auto& spec : contour_builtins()) {
    const auto f = parse_builtin_spec(spec);
    for (Complex s : {Complex(0.5, 0.3), Complex(1.7, -4.0), Complex(3.2, 11.0)}) {
      const double h = 1e-5;
      const Complex dx = (evaluate(f, s + h) - evaluate(f, s - h)) / (2.0 * h);
      const Complex dy = (evaluate(f, s + Complex(0, h)) - evaluate(f, s - Complex(0, h))) / Complex(0.0, 2.0 * h);
      EXPECT_LT(std::abs(dx - dy), 1e-6 * std::max(1.0, std::abs(dx))) << spec << ' ' << s;
    }
  }
}

TEST(Catalog, PolesBlowUpFromFourDirections) {
  for (const auto& spec : {"recipgamma", "reciptwopow", "gammaratio", "power:2", "recipzeta"}) {
    const auto f = parse_builtin_spec(spec);
    std::vector<Complex> poles;
    for (const auto& s : f.catalog) {
      if (const auto* p = std::get_if<PoleSingularity>(&s)) poles.push_back(p->location);
      if (const auto* l = std::get_if<PoleLattice>(&s))
        for (int m = 0; m < 3; ++m) poles.push_back(l->base + double(m) * l->step);
      if (poles.size() > 6) break;
    }
    ASSERT_FALSE(poles.empty()) << spec;
    for (Complex p : poles) {
      // zeros of phi (e.g. at integers for recipgamma) may sit close to a pole
      double iso = 1.0;
      const double to_int = std::abs(p - std::round(p.real()));
      if (to_int > 1e-9) iso = std::min(iso, to_int);
      for (Complex q : poles)
        if (q != p) iso = std::min(iso, std::abs(q - p));
      for (Complex d : {Complex(1, 0), Complex(-1, 0), Complex(0, 1), Complex(0, -1)}) {
        const double far = std::abs(evaluate(f, p + 1e-1 * iso * d));
        const double near = std::abs(evaluate(f, p + 1e-4 * iso * d));
        EXPECT_GT(near, 50.0 * far) << spec << " pole " << p << " dir " << d;
      }
    }
  }
}

TEST(Catalog, AlgebraicWithNonPositiveLambdaStaysBounded) {
  for (const auto& spec : {"exp:1,0.5", "exp:-1,0.5", "exp:2,0.75", "power:-0.5"}) {
    const auto f = parse_builtin_spec(spec);
    for (const auto& s : f.catalog)
      if (const auto* a = std::get_if<AlgebraicSingularity>(&s)) {
        ASSERT_LE(a->lambda.real(), 0.0);
        for (Complex d : {Complex(1, 0), Complex(0, 1), Complex(0, -1), Complex(1, 1) / std::sqrt(2.0)})
          for (double eps : {1e-2, 1e-5, 1e-8}) EXPECT_LT(std::abs(evaluate(f, a->location + eps * d)), 10.0) << spec;
      }
  }
}

TEST(Roots, ReferenceDigits) {
  const auto r = gamma_eq_minus_one_roots(8);
  const double expect[] = {-2.457024, -2.747682, -4.039361, -4.991544, -6.001385, -6.999801, -8.000024, -8.999997};
  for (int i = 0; i < 8; ++i) EXPECT_NEAR(r[i], expect[i], 1e-5) << i;
}

TEST(Roots, SolveTheEquation) {
  const auto r = gamma_eq_minus_one_roots(14);
  for (std::size_t i = 0; i < r.size(); ++i) {
    // oracle: boost's real gamma at the root, and the residual in log form near integers
    if (i < 8) EXPECT_NEAR(boost::math::tgamma(r[i]), -1.0, 1e-7) << i;
    if (i > 0) EXPECT_LT(r[i], r[i - 1]);
  }
  const auto shifted = gamma_plus_one_eq_minus_one_roots(5);
  for (int i = 0; i < 5; ++i) EXPECT_DOUBLE_EQ(shifted[i], r[i] - 1.0);
}

TEST(Roots, InterlacingNearIntegers) {
  const auto r = gamma_eq_minus_one_roots(30);
  for (std::size_t i = 2; i < r.size(); ++i) {
    const int k = static_cast<int>(i) + 2;
    const double tol = 2.0 / boost::math::factorial<double>(k);
    EXPECT_LE(std::abs(r[i] + k), tol) << k;
    // sign pattern (-1)^{k-1}
    if (k <= 15) EXPECT_EQ(r[i] + k > 0, k % 2 == 1) << k;
  }
}

namespace {

// Winding number of Gamma(w) + 1 around the rectangle [x0, x1] x [y0, y1].
int zeros_of_gamma_plus_one(double x0, double x1, double y0, double y1) {
  const Complex c[5] = {{x0, y0}, {x1, y0}, {x1, y1}, {x0, y1}, {x0, y0}};
  double total = 0.0;
  for (int e = 0; e < 4; ++e) {
    const Complex a = c[e], b = c[e + 1];
    const double len = std::abs(b - a);
    double t = 0.0, h = 1e-3;
    Complex fa = gamma(a) + 1.0;
    while (t < 1.0) {
      const double tn = std::min(1.0, t + h / len);
      const Complex fb = gamma(a + (b - a) * tn) + 1.0;
      const double d = std::arg(fb / fa);
      if (std::abs(d) > 0.3 && h > 1e-9) {
        h /= 2;
        continue;
      }
      total += d;
      t = tn;
      fa = fb;
      if (std::abs(d) < 0.05) h *= 1.5;
    }
  }
  return static_cast<int>(std::lround(total / (2 * pi)));
}

}  // namespace

TEST(Roots, ComplexRootsMatchArgumentPrinciple) {
  const auto right = gamma_plus_one_eq_minus_one_right_roots(120);
  for (Complex s : right) EXPECT_LT(std::abs(lindelof::gamma(s + 1.0) + 1.0), 1e-11) << s;
  // boxes in w = s + 1, upper half-plane
  for (auto [x1, y1] : {std::pair{10.0, 30.0}, std::pair{60.0, 120.0}}) {
    const long found = std::count_if(right.begin(), right.end(),
                                     [&](Complex s) { return s.real() + 1.0 < x1 && s.imag() < y1; });
    EXPECT_EQ(zeros_of_gamma_plus_one(0.0, x1, 1e-3, y1), found) << x1 << ' ' << y1;
  }
  EXPECT_EQ(zeros_of_gamma_plus_one(-12.0, 0.0, 1e-3, 30.0), 1);
  EXPECT_EQ(zeros_of_gamma_plus_one(-30.5, -12.5, 1e-4, 30.0), 0);
  const Complex left = gamma_plus_one_eq_minus_one_left_root();
  EXPECT_LT(std::abs(left - Complex(-1.526209881918, 0.683240401059)), 1e-9);
  EXPECT_LT(std::abs(lindelof::gamma(left + 1.0) + 1.0), 1e-13);
}

TEST(Catalog, RightPolesCarryTheirResidues) {
  const auto f = parse_builtin_spec("recipgamma");
  ASSERT_TRUE(f.right_pole);
  for (std::size_t k = 0; k < 8; ++k) {
    const auto p = f.right_pole(k);
    ASSERT_TRUE(p.has_value());
    EXPECT_GT(p->location.real(), 0.0);
    if (k % 2 == 1) EXPECT_EQ(p->location, std::conj(f.right_pole(k - 1)->location));
    // oracle: trapezoid rule for (1/2 pi i) * contour integral on a small circle
    const int m = 64;
    const double r = 1e-2;
    Complex acc = 0.0;
    for (int j = 0; j < m; ++j) {
      const Complex u = std::polar(r, 2 * pi * j / m);
      acc += evaluate(f, p->location + u) * u;
    }
    EXPECT_LT(std::abs(acc / double(m) - p->residue), 1e-10) << k;
  }
  for (const auto& spec : {"const:1", "exp:1,-1", "reciptwopow", "gammaratio", "recipzeta"})
    EXPECT_FALSE(parse_builtin_spec(spec).right_pole) << spec;
}
