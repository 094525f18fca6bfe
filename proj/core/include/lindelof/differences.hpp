#pragma once

#include <functional>
#include <string>

#include "lindelof/coeff_functions.hpp"
#include "lindelof/precision.hpp"

namespace lindelof {

// f_k for the built-in sequences. ExpInv* start at f_0 = 0, ExpSqrt* at f_0 = 1.
enum class SequenceKind {
  ExpSqrtPlus,   // e^{sqrt k}
  ExpSqrtMinus,  // e^{-sqrt k}
  ExpInvPlus,    // e^{1/k}
  ExpInvMinus,   // e^{-1/k}
  Custom
};

struct DifferenceRequest {
  SequenceKind kind = SequenceKind::ExpInvPlus;
  long n = 1;
  PrecisionContext ctx;
  // f_k for k >= 0 at the current default MPFR precision; used when kind == Custom.
  std::function<Mp(long)> custom;
};

struct DifferenceResult {
  double value = 0.0;
  int bits = 0;  // working precision actually used
};

// Working precision needed for an alternating binomial sum of length n.
int difference_bits(long n, int requested_bits);

// D_n[f] = sum_{k=0}^n C(n, k) (-1)^k f_k with exact binomials.
DifferenceResult differences_exact(const DifferenceRequest& req);

// Leading asymptotic form of D_n for the built-in kinds (n >= 3).
double differences_asymptotic(SequenceKind kind, long n);

// |sum g_n z^n - (f_0 + F(z/(1-z)))/(1-z)| with g_n = D_n[f], f_k = phi(k) for k >= 1.
double euler_transform_check(const CoefficientFunction& f, Complex z, double f0, const PrecisionContext& ctx = {});

// C(n, x) sum_{j=0}^{n-x} C(n-x, j) (-1)^j pi_{x+j}, pi_k = exp(log(p) k^a), pi_0 = 1.
double madsen_pmf(long n, long x, double p, double a, const PrecisionContext& ctx = {});

// Leading large-n form of madsen_pmf for 0 < a < 1.
double madsen_pmf_asymptotic(long n, long x, double p, double a);

std::string sequence_kind_name(SequenceKind kind);
SequenceKind sequence_kind_from_name(const std::string& name);

}  // namespace lindelof
