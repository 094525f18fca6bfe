#pragma once

#include <optional>
#include <string>
#include <vector>

#include "lindelof/coeff_functions.hpp"
#include "lindelof/expansion.hpp"

namespace lindelof {

enum class VerdictStatus { Consistent, Violation };

enum class Clause {
  None,
  NonIntegerLogPower,
  ExpOfLogPower,
  IrrationalProgressionStep,
  InfinitelyManyImaginaryParts,
  UnboundedLogDegree,
  NotInFiniteProgressionUnion
};

// A finite set of real exponents (e.g. pole locations) with its exactness data.
struct ExponentSet {
  std::vector<double> values;
  bool exact = false;  // the doubles are the exact values
  // Structural declaration that no finite union of rational-step progressions covers
  // the full (infinite) family these values sample.
  bool declared_progression_free = false;
  std::string descriptor;
};

struct CatalogSummary {
  std::string label;
  std::vector<PoleLattice> lattices;
  std::vector<EssentialSingularity> essentials;
  std::optional<ExponentSet> exponents;
};

struct Verdict {
  VerdictStatus status = VerdictStatus::Consistent;
  Clause clause = Clause::None;
  std::optional<ExpansionTerm> witness_term;
  std::optional<PoleLattice> witness_lattice;
  std::optional<std::string> witness_descriptor;
  std::string note;
};

struct CoverBudget {
  int progressions = 8;
  int max_denominator = 64;
};

// Expansion in the infinity variable. Priority: ExpOfLogPower, NonIntegerLogPower,
// UnboundedLogDegree, then the lattice clauses of e.lattices.
Verdict classify(const Expansion& e);

// Priority: InfinitelyManyImaginaryParts, IrrationalProgressionStep,
// NotInFiniteProgressionUnion.
Verdict classify(const CatalogSummary& s, const CoverBudget& budget = {});

CatalogSummary summarize(const CoefficientFunction& f);

// Dispatches on the catalog: algebraic expansion, saddle approximant, or catalog
// summary followed by the polar expansion.
Verdict classify_function(const CoefficientFunction& f, const PrecisionContext& ctx = {});

std::string clause_name(Clause c);
Clause clause_from_name(const std::string& name);
std::string status_name(VerdictStatus s);

}  // namespace lindelof
