#pragma once

#ifdef LINDELOF_VENDORED_JSON
#include "json.hpp"
#else
#include <nlohmann/json.hpp>
#endif

#include "lindelof/coeff_functions.hpp"
#include "lindelof/continuation.hpp"
#include "lindelof/expansion.hpp"
#include "lindelof/holonomy.hpp"

namespace lindelof {

using Json = nlohmann::json;

inline constexpr int kSchemaVersion = 1;

// Complex numbers serialize as {"re": x, "im": y}; a bare number is accepted on input.
Json to_json(Complex z);
Complex complex_from_json(const Json& j);

Json to_json(const ScaledComplex& v);
Json to_json(const ExpansionTerm& t);
Json to_json(const Expansion& e);
Json to_json(const PoleLattice& l);
Json to_json(const Singularity& s);
Json to_json(const Verdict& v);
Json to_json(const CatalogSummary& s);
Json to_json(const ContinuationResult& r);
Json to_json(const DirectSumResult& r);
Json catalog_to_json(const CoefficientFunction& f);

ExpansionTerm term_from_json(const Json& j);
Expansion expansion_from_json(const Json& j);
PoleLattice lattice_from_json(const Json& j);
CatalogSummary summary_from_json(const Json& j);

std::string rationality_name(Rationality r);
Rationality rationality_from_name(const std::string& name);

}  // namespace lindelof
