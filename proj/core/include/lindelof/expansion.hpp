#pragma once

#include <optional>
#include <string>
#include <vector>

#include "lindelof/coeff_functions.hpp"
#include "lindelof/precision.hpp"

namespace lindelof {

// Asymptotic scale in which a term is written.
//  LogZAtInfinity:        L = log z,            z -> infinity
//  OnePlusZAtMinusOne:    x = 1 + z, l = -log x, and the exp/osc argument is x
//  NegLogAbsZAtMinusOne:  x = 1 + z, l = -log x, and the exp/osc argument is v = -log|z|
enum class Variable { LogZAtInfinity, OnePlusZAtMinusOne, NegLogAbsZAtMinusOne };

struct ExpFactor {
  Complex q;
  double beta = 0.0;
};

struct OscFactor {
  Complex r;
  double phase0 = 0.0;
  double beta = 0.0;
};

// coeff * base^{z_exp} * log^{log_pow} * exp(q arg^beta) * cos(r arg^beta + phase0), where
// base is z (infinity) or 1+z, log is log z or -log(1+z), and arg is log z, 1+z or -log|z|.
struct ExpansionTerm {
  Complex coeff{1.0, 0.0};
  Complex z_exp{0.0, 0.0};
  Complex log_pow{0.0, 0.0};
  std::optional<ExpFactor> exp;
  std::optional<OscFactor> osc;
  Variable variable = Variable::LogZAtInfinity;

  Complex evaluate(Complex z) const;
  bool same_shape(const ExpansionTerm& other, double tol = 1e-13) const;
};

struct Expansion {
  std::vector<ExpansionTerm> terms;        // most dominant first
  std::optional<ExpansionTerm> error_order;  // coefficient ignored
  std::string source;                      // engine that produced it
  std::vector<PoleLattice> lattices;       // lattices kept symbolically
  std::string note;
  bool unbounded_log_degree = false;       // set by engines that know the log degree is unbounded

  Variable variable() const;
};

// Sum of the first n_terms terms (all when n_terms < 0).
Complex evaluate_expansion(const Expansion& e, Complex z, int n_terms = -1);

// true when a dominates b as the variable tends to its limit.
bool dominates(const ExpansionTerm& a, const ExpansionTerm& b);

// Stable sort by dominance, most dominant first.
void sort_by_dominance(std::vector<ExpansionTerm>& terms);

// Sums coefficients of terms with identical shape and drops zero coefficients.
std::vector<ExpansionTerm> merge_terms(const std::vector<ExpansionTerm>& terms);

std::string render_term(const ExpansionTerm& t, int digits = 10);
std::string render_expansion(const Expansion& e, int digits = 10);

std::string variable_name(Variable v);
Variable variable_from_name(const std::string& name);

}  // namespace lindelof
