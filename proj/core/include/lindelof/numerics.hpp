#pragma once

#include <functional>
#include <vector>

#include "lindelof/precision.hpp"

namespace lindelof {

// ---- Gamma family ---------------------------------------------------------

// Gamma(s). Reflection for Re s < 1/2, shifted Stirling series otherwise.
// Contexts up to 64 bits run in extended (x87) precision; wider contexts
// run in MPFR. Non-positive integers raise Errc::Pole; results whose
// magnitude exceeds the binary64 range come back as (inf, inf).
Complex gamma(Complex s, const PrecisionContext& ctx = {});

// A branch of log Gamma(s) with exp(log_gamma(s)) == gamma(s).
Complex log_gamma(Complex s);

// 1/Gamma(s); entire, exactly zero at the non-positive integers.
Complex rgamma(Complex s);

// Gamma'(s)/Gamma(s).
Complex digamma(Complex s);

MpComplex gamma_mp(const MpComplex& s, int bits);

// ---- pi / sin(pi s) --------------------------------------------------------

// pi/sin(pi s). The real part is reduced mod 2 first, so the result is
// periodic up to rounding of the argument itself. For |Im s| > 20 the
// exponentially small closed form is used.
Complex recip_sin_pi(Complex s, double pole_threshold = 1e-12);

// Coefficients b_{-1}, b_0, ..., b_{j_max} of pi/sin(pi s) around s0;
// element i of the result is b_{i-1}.
std::vector<Complex> sin_expansion_coeffs(Complex s0, int j_max, const PrecisionContext& ctx = {});

// ---- Zeta --------------------------------------------------------------------

double zeta_int(int k);                 // zeta(k), k >= 2
Mp zeta_int_mp(int k, int bits);        // zeta(k) at the requested precision
double zeta_nonpositive_int(int m);     // zeta(-m), m >= 0
Complex zeta(Complex w);                // Euler-Maclaurin, any w != 1, moderate |Im w|

// ---- Polylogarithm -------------------------------------------------------------

enum class PolylogMethod { Auto, Series, LogExpansion };

// Li_alpha(z) = sum_{n>=1} z^n / n^alpha for |z| < 1.
// LogExpansion is the expansion in w = -log z, available for integer alpha >= 1.
Complex polylog(double alpha, Complex z, const PrecisionContext& ctx = {},
                PolylogMethod method = PolylogMethod::Auto);

// ---- Contour Taylor/Laurent coefficients ------------------------------------------

using AnalyticFunction = std::function<Complex(Complex)>;

// Coefficients a_{-laurent_order}, ..., a_{count-laurent_order-1} of f around s0
// by the trapezoidal rule on |s - s0| = radius. The node count is doubled until
// two successive estimates agree to ctx.tol; Errc::NonConvergence otherwise.
std::vector<Complex> taylor_coeffs_numeric(const AnalyticFunction& f, Complex s0, double radius,
                                           int count, const PrecisionContext& ctx = {},
                                           int laurent_order = 0);

}  // namespace lindelof
