#pragma once

#include <optional>

#include "lindelof/coeff_functions.hpp"
#include "lindelof/precision.hpp"

namespace lindelof {

enum class QuadratureRule { AdaptiveSegment, FixedStepRichardson };

struct QuadratureConfig {
  PrecisionContext ctx;
  double max_height = 200.0;
  QuadratureRule rule = QuadratureRule::AdaptiveSegment;
  // Contour abscissa in (0, 1). Unset: 1/2 unless a smaller abscissa lowers the
  // integrand's peak magnitude by more than e^2 (large |z|).
  std::optional<double> shift;
  long max_segments = 400000;

  void validate() const;
};

struct ContinuationResult {
  ScaledComplex value;
  double error_estimate = 0.0;  // absolute, in the same scale as value.mantissa * exp(log_scale)
  double shift = 0.5;
  double height = 0.0;
  long evaluations = 0;

  Complex unscaled() const { return value.value(); }
  double relative_error() const;
};

struct DirectSumResult {
  ScaledComplex value;
  long terms = 0;
  double tail_bound = 0.0;  // relative to |value|
};

// sum_{n>=1} phi(n) (-z)^n with a geometric tail majorant. Above 53 bits the terms
// come from f.sequence_mp and the sum runs in MPFR.
DirectSumResult direct_sum(const CoefficientFunction& f, Complex z, const PrecisionContext& ctx = {},
                           long term_cap = 10'000'000);

// Analytic continuation through the Lindelof integral along Re s = shift.
ContinuationResult continue_gf(const CoefficientFunction& f, Complex z, const QuadratureConfig& cfg = {});

// Same, with log z supplied directly so that |z| may exceed the binary64 range.
ContinuationResult continue_gf_log(const CoefficientFunction& f, Complex log_z,
                                   const QuadratureConfig& cfg = {});

// Height T beyond which the integrand bound C e^{A|s|} e^{-(pi - |arg z|)|t|} (x 100)
// falls below tol.
double truncation_height(const CoefficientFunction& f, double arg_z, const PrecisionContext& ctx = {},
                         double max_height = 200.0);

// Abscissa chosen when QuadratureConfig::shift is unset.
double auto_shift(const CoefficientFunction& f, Complex log_z);

}  // namespace lindelof
