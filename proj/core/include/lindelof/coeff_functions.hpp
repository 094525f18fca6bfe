#pragma once

#include <functional>
#include <limits>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "lindelof/numerics.hpp"
#include "lindelof/precision.hpp"

namespace lindelof {

// Exactness flag carried by data, never inferred from floating-point values.
enum class Rationality { Unknown, Rational, Irrational };

struct PoleSingularity {
  Complex location;
  int order = 1;
};

// phi(s) ~ (s - s0)^{-lambda} psi((s - s0)^theta) near s0, psi(w) = sum p_k w^k.
struct AlgebraicSingularity {
  Complex location;
  Complex lambda{0.0, 0.0};
  Complex theta{1.0, 0.0};
  std::vector<Complex> psi_coeffs;
  bool psi_exact_polynomial = false;  // psi_coeffs is the full series, not a truncation
  double cut_angle = 0.0;             // must lie in (-pi/2, 0) or (0, pi/2)
};

struct EssentialSingularity {
  Complex location;
  std::string descriptor;
  bool infinitely_many_imaginary_parts = false;
};

// Poles at base + m*step, m = 0, 1, ... (or m in Z when two_sided).
struct PoleLattice {
  Complex base;
  Complex step;
  std::optional<long> count;  // nullopt: unbounded
  bool two_sided = false;
  Rationality step_rationality = Rationality::Unknown;
  int order = 1;
};

// Simple pole of phi together with its residue.
struct SimplePole {
  Complex location;
  Complex residue;
};

using Singularity =
    std::variant<PoleSingularity, AlgebraicSingularity, EssentialSingularity, PoleLattice>;

Complex singularity_location(const Singularity& s);

enum class BuiltinKind {
  ExpPower,              // exp(c s^theta)
  RecipGammaPlusOne,     // 1 / (1 + Gamma(s+1))
  RecipTwoPow,           // 1 / (2^s - 1)
  GammaRatioNormalized,  // Gamma(s sqrt 2) / Gamma(s)^2
  GammaSqrt2,            // Gamma(s sqrt 2)
  RecipZetaShift,        // 1 / zeta(s+2)
  PowerLaw,              // s^{-lambda}
  Constant,              // a
  Identity               // s
};

struct CoefficientFunction {
  BuiltinKind kind = BuiltinKind::Constant;
  std::vector<double> params;
  std::string label;

  std::function<Complex(Complex)> evaluator;
  // A branch of log phi(s), continuous along vertical lines in the right half-plane.
  std::function<Complex(Complex)> log_evaluator;
  // phi(n) at the current default MPFR precision.
  std::function<Mp(long)> sequence_mp;

  // |phi(s)| <= growth_C * exp(growth_A |s|) for Re s >= 1/2.
  double growth_A = 0.01;
  double growth_C = 1.0;
  double analytic_halfplane = 0.0;
  bool lindelof_guarantee = true;
  bool real_on_real_axis = true;

  // Singularities with Re s <= 0.
  std::vector<Singularity> catalog;
  // Every singularity with real part in (catalog_complete_above, 0] is in the catalog.
  double catalog_complete_above = -std::numeric_limits<double>::infinity();

  // k-th pole of phi with Re s > 0, conjugate pairs adjacent and |Im| increasing;
  // nullopt past the last one. Unset when phi is analytic for Re s > 0.
  // continue_gf adds their residue terms to the contour integral.
  std::function<std::optional<SimplePole>(std::size_t)> right_pole;
};

CoefficientFunction make_builtin(BuiltinKind kind, const std::vector<double>& params = {});

// phi(s); Errc::SingularityHit within 1e-12 of a cataloged pole.
Complex evaluate(const CoefficientFunction& f, Complex s, const PrecisionContext& ctx = {});

// Real roots of Gamma(s) = -1, sorted descending.
std::vector<double> gamma_eq_minus_one_roots(int count, const PrecisionContext& ctx = {});

// Real roots of Gamma(s+1) = -1, i.e. the roots above shifted by -1.
std::vector<double> gamma_plus_one_eq_minus_one_roots(int count, const PrecisionContext& ctx = {});

// Roots of Gamma(s+1) = -1 with Re s > 0 and Im s > 0, by increasing Im s.
// Errc::CapExceeded beyond kMaxRightRoots.
std::vector<Complex> gamma_plus_one_eq_minus_one_right_roots(std::size_t count);
inline constexpr std::size_t kMaxRightRoots = 200000;

// The non-real root of Gamma(s+1) = -1 with Re s < 0 and Im s > 0 (s ~ -1.526 + 0.683i).
Complex gamma_plus_one_eq_minus_one_left_root();

std::string builtin_name(BuiltinKind kind);
BuiltinKind builtin_from_name(const std::string& name);

// Parses "kind[:p1,p2,...]", e.g. "exp:1,-0.5", "const:1", "recipgamma".
CoefficientFunction parse_builtin_spec(const std::string& spec);

}  // namespace lindelof
