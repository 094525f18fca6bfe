#pragma once

#include <optional>

#include "lindelof/expansion.hpp"
#include "lindelof/precision.hpp"

namespace lindelof {

// Constants below refer to E(z; c, theta) = sum_{n>=1} exp(c n^theta) (-z)^n.

struct SaddleConstants {  // c > 0, theta < 0
  double K1 = 0, K2 = 0, mu = 0, eps = 0.05;
};

struct TwoSaddleConstants {  // c < 0, theta < 0
  double A1 = 0, A2 = 0, A3 = 0, A4 = 0, mu = 0, eps = 0.05;
};

struct LaplaceConstants {  // c > 0, 0 < theta < 1
  double C1 = 0, C2 = 0, C3 = 0, mu = 0, eps = 0.05;
};

SaddleConstants saddle_constants(double c, double theta, double eps = 0.05);
TwoSaddleConstants two_saddle_constants(double c, double theta, double eps = 0.05);
LaplaceConstants laplace_constants(double c, double theta, double eps = 0.05);

// One-term expansion of E at infinity for theta < 0 (c > 0: growing exponential;
// c < 0: oscillating).
Expansion infinity_expansion(double c, double theta, double eps = 0.05);

struct InfinityApprox {
  ScaledComplex value;
  Expansion expansion;
};

// The leading approximant at log z; log z is passed directly so that huge |z| work.
InfinityApprox approx_infinity(double c, double theta, Complex log_z, double eps = 0.05);

// sum_{k>=0} c^k/k! Li_{-k theta}(-z) for theta < 0, |z| < 1.
Complex polylog_sum(double c, double theta, Complex z, const PrecisionContext& ctx = {});

// (-1)^k sum_{n>=1} C(n, k) exp(c n^theta), c < 0, 0 < theta < 1.
double abel_taylor_coeff(double c, double theta, int k, const PrecisionContext& ctx = {});

struct MinusOneApprox {
  double value = 0;  // c > 0: the v-form; c < 0: the Taylor polynomial
  std::optional<double> log_value;  // c > 0 only; finite where value overflows
  std::optional<double> one_plus_z_form;  // c > 0 only
  Expansion expansion;                    // v-form (c > 0) or Taylor terms (c < 0)
  std::optional<Expansion> one_plus_z_expansion;  // c > 0 and theta <= 1/2
};

// Approximant of E(z; c, theta) as z -> -1 from the right, 0 < theta < 1.
// c > 0: C1 (1+z)^{(2-theta)/(2(theta-1))} exp(C2 v^{theta/(theta-1)}), v = -log|z|,
// plus its rewrite in powers of 1+z. c < 0: sum_{k<=taylor_order} u_k (1+z)^k.
MinusOneApprox approx_minus_one(double c, double theta, double z, double eps = 0.05, int taylor_order = 2,
                                const PrecisionContext& ctx = {});

// Coefficients a_m of (v/h)^beta = sum a_m h^m, v = -log(1-h), m = 0..count-1.
std::vector<double> neg_log_ratio_power_series(double beta, int count);

}  // namespace lindelof
