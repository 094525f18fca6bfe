#include <gtest/gtest.h>

#include <cmath>
#include <numbers>

#include "lindelof/coeff_functions.hpp"
#include "lindelof/continuation.hpp"
#include "lindelof/errors.hpp"
#include "lindelof/numerics.hpp"

using namespace lindelof;
using std::numbers::pi;

namespace {

const std::vector<std::string> kOracleBuiltins = {"const:1",   "identity",   "power:1",    "power:0.5",
                                                  "exp:1,0.5", "exp:-1,0.5", "exp:1,-1",   "exp:-1,-1",
                                                  "exp:1,-0.5", "recipgamma", "reciptwopow", "gammaratio",
                                                  "recipzeta"};

const std::vector<Complex> kOraclePoints = {0.1, 0.3, 0.5, std::polar(0.3, pi / 3)};

Errc code_of(const std::function<void()>& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.code();
  }
  return static_cast<Errc>(-1);
}

}  // namespace

TEST(DirectSum, ClosedForms) {
  const double tol = PrecisionContext{}.tol;
  auto check = [&](const std::string& spec, Complex z, Complex exact) {
    const Complex d = direct_sum(parse_builtin_spec(spec), z).value.value();
    EXPECT_LE(std::abs(d - exact), tol * std::abs(exact)) << spec << " z=" << z;
  };
  check("const:1", 0.5, -1.0 / 3.0);
  check("identity", 0.5, -2.0 / 9.0);
  check("power:1", 0.5, -std::log(1.5));
  const Complex z(0.2, -0.6);
  check("const:2", z, -2.0 * z / (1.0 + z));
}

TEST(DirectSum, MultiprecisionPinsDoubleResult) {
  const auto f = parse_builtin_spec("exp:1,-1");
  const PrecisionContext lo_ctx;
  const auto lo = direct_sum(f, 0.5, lo_ctx);
  const auto hi = direct_sum(f, 0.5, PrecisionContext{200, 1e-40});
  const Complex h = hi.value.value();
  EXPECT_LE(std::abs(lo.value.value() - h), lo_ctx.tol * std::abs(h));
  EXPECT_LT(hi.tail_bound, 1e-40);
  EXPECT_GT(hi.terms, lo.terms);
}

TEST(DirectSum, Errors) {
  EXPECT_EQ(code_of([] { direct_sum(parse_builtin_spec("const:1"), 1.5); }), Errc::Divergence);
  EXPECT_EQ(code_of([] { direct_sum(parse_builtin_spec("exp:1,0.5"), -0.99999999, {}, 1000); }),
            Errc::SlowConvergence);
}

TEST(Continuation, OracleAgreement) {
  for (const auto& spec : kOracleBuiltins) {
    const auto f = parse_builtin_spec(spec);
    for (Complex z : kOraclePoints) {
      const Complex d = direct_sum(f, z).value.value();
      const Complex c = continue_gf(f, z).unscaled();
      EXPECT_LE(std::abs(c - d), 1e-9 * (1.0 + std::abs(d))) << spec << " z=" << z;
    }
  }
}

// Sum of (-z)^n / (1 + n!); entire, so valid for every z. Terms reach e^|z|, hence the bits.
Complex recip_gamma_series(Complex z) {
  ScopedPrecision p(200 + static_cast<int>(2.0 * std::abs(z)));
  const MpComplex mz(Mp(-z.real()), Mp(-z.imag()));
  MpComplex power(Mp(1), Mp(0)), sum(Mp(0), Mp(0));
  Mp fact = 1;
  const long terms = 200 + static_cast<long>(8.0 * std::abs(z));
  for (long n = 1; n < terms; ++n) {
    fact *= n;
    power *= mz;
    sum += power / (1 + fact);
  }
  return to_complex(sum);
}

TEST(Continuation, PolesRightOfTheContour) {
  const auto f = parse_builtin_spec("recipgamma");
  ASSERT_TRUE(f.right_pole);
  for (Complex z : {Complex(2.0, 0.0), Complex(5.0, 0.0), Complex(10.0, 0.0), Complex(30.0, 0.0), Complex(100.0, 0.0),
                    Complex(300.0, 0.0), Complex(4.0, 7.0), Complex(0.0, 20.0), Complex(-3.0, 3.0), Complex(-1.5, 0.5)}) {
    const Complex exact = recip_gamma_series(z);
    const auto r = continue_gf(f, z);
    EXPECT_LE(std::abs(r.unscaled() - exact), 1e-10 * (1.0 + std::abs(exact))) << z;
    EXPECT_LE(std::abs(r.unscaled() - exact), 10.0 * r.error_estimate * std::exp(r.value.log_scale) + 1e-15) << z;
  }
  // Near the negative axis the residue terms dwarf the result.
  EXPECT_EQ(code_of([&] { continue_gf(f, Complex(-6.0, 2.0)); }), Errc::PrecisionCap);
}

TEST(Continuation, ClosedFormsOutsideDisc) {
  const auto one = parse_builtin_spec("const:1");
  const auto id = parse_builtin_spec("identity");
  for (Complex z : {Complex(2.0, 0.0), Complex(10.0, 0.0), Complex(0.0, 5.0)}) {
    EXPECT_LT(std::abs(continue_gf(one, z).unscaled() + z / (1.0 + z)), 1e-10) << z;
    EXPECT_LT(std::abs(continue_gf(id, z).unscaled() + z / ((1.0 + z) * (1.0 + z))), 1e-10) << z;
  }
  EXPECT_NEAR(continue_gf(parse_builtin_spec("power:1"), 0.5).unscaled().real(), -std::log(1.5), 1e-12);
  // -log(1+z) continued to z = 20
  EXPECT_NEAR(continue_gf(parse_builtin_spec("power:1"), 20.0).unscaled().real(), -std::log(21.0), 1e-11);
}

TEST(Continuation, ContourIndependence) {
  for (const auto& spec : kOracleBuiltins) {
    const auto f = parse_builtin_spec(spec);
    for (Complex z : {Complex(0.5, 0.0), Complex(3.0, 1.0), Complex(40.0, 0.0)}) {
      QuadratureConfig a, b;
      a.shift = 0.4;
      b.shift = 0.6;
      const auto ra = continue_gf(f, z, a), rb = continue_gf(f, z, b);
      const double scale = 1.0 + std::abs(ra.unscaled());
      EXPECT_LE(std::abs(ra.unscaled() - rb.unscaled()), 10.0 * a.ctx.tol * scale) << spec << " z=" << z;
    }
  }
}

TEST(Continuation, ConjugateSymmetry) {
  for (const auto& spec : kOracleBuiltins) {
    const auto f = parse_builtin_spec(spec);
    ASSERT_TRUE(f.real_on_real_axis);
    // gammaratio has A ~ 0.93, so every point keeps |arg z| < pi - A with room to spare
    for (Complex z : {Complex(0.3, 0.4), Complex(-1.0, 2.0), Complex(15.0, -2.0)}) {
      const Complex a = continue_gf(f, z).unscaled();
      const Complex b = continue_gf(f, std::conj(z)).unscaled();
      EXPECT_LE(std::abs(a - std::conj(b)), 1e-12 * (1.0 + std::abs(a))) << spec << " z=" << z;
    }
  }
}

TEST(Continuation, RefinementWithinErrorEstimate) {
  for (const auto& spec : kOracleBuiltins) {
    const auto f = parse_builtin_spec(spec);
    QuadratureConfig coarse, fine;
    coarse.ctx.tol = 1e-8;
    fine.ctx.tol = 1e-13;
    const Complex z(7.0, 2.0);
    const auto rc = continue_gf(f, z, coarse);
    const auto rf = continue_gf(f, z, fine);
    EXPECT_GE(rf.evaluations, rc.evaluations) << spec;
    EXPECT_LE(std::abs(rc.unscaled() - rf.unscaled()), rc.error_estimate) << spec;
  }
}

TEST(Continuation, RichardsonRuleAgrees) {
  const auto f = parse_builtin_spec("exp:1,-1");
  QuadratureConfig r;
  r.rule = QuadratureRule::FixedStepRichardson;
  for (Complex z : {Complex(0.3, 0.0), Complex(25.0, 0.0)}) {
    const Complex a = continue_gf(f, z).unscaled();
    EXPECT_LE(std::abs(continue_gf(f, z, r).unscaled() - a), 1e-10 * (1.0 + std::abs(a))) << z;
  }
}

TEST(Continuation, HugeArgumentsStayScaled) {
  const auto f = parse_builtin_spec("exp:1,-1");
  const auto r = continue_gf_log(f, 1e4);
  EXPECT_TRUE(std::isfinite(r.value.mantissa.real()));
  EXPECT_GT(r.value.log_scale, 100.0);
  EXPECT_LT(r.relative_error(), 1e-9);
}

TEST(TruncationHeight, Examples) {
  const auto one = parse_builtin_spec("const:1");
  const PrecisionContext ctx{53, 1e-12};
  const double t0 = truncation_height(one, 0.0, ctx);
  EXPECT_GT(t0, 8.5);
  EXPECT_LT(t0, 11.0);
  const double t1 = truncation_height(one, pi / 2, ctx);
  EXPECT_NEAR(t1 / t0, 2.0, 0.1);
  const auto e = parse_builtin_spec("exp:0.5,1");
  EXPECT_EQ(code_of([&] { truncation_height(e, pi - e.growth_A - 1e-5, ctx); }), Errc::CapExceeded);
}

TEST(Continuation, SectorViolation) {
  const auto e = parse_builtin_spec("exp:0.5,1");
  EXPECT_EQ(code_of([&] { continue_gf(e, std::polar(2.0, 2.9)); }), Errc::SectorViolation);
  EXPECT_EQ(code_of([&] { continue_gf(parse_builtin_spec("const:1"), -2.0); }), Errc::SectorViolation);
  EXPECT_EQ(code_of([&] { continue_gf(parse_builtin_spec("const:1"), 0.0); }), Errc::Domain);
}

TEST(QuadratureConfig, Validation) {
  QuadratureConfig c;
  c.shift = 1.0;
  EXPECT_THROW(c.validate(), Error);
  c.shift = 0.5;
  c.max_height = 0.0;
  EXPECT_THROW(c.validate(), Error);
}
