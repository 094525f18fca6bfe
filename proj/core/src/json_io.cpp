#include "lindelof/json_io.hpp"

#include <cmath>

#include "lindelof/errors.hpp"

namespace lindelof {
namespace {

Json real_or_null(double x) { return std::isfinite(x) ? Json(x) : Json(nullptr); }

template <class T>
T require(const Json& j, const char* key) {
  if (!j.is_object() || !j.contains(key)) raise(Errc::InvalidArgument, std::string("missing JSON field '") + key + "'");
  try {
    return j.at(key).get<T>();
  } catch (const nlohmann::json::exception& e) {
    raise(Errc::InvalidArgument, std::string("bad JSON field '") + key + "': " + e.what());
  }
}

}  // namespace

Json to_json(Complex z) { return {{"re", real_or_null(z.real())}, {"im", real_or_null(z.imag())}}; }

Complex complex_from_json(const Json& j) {
  if (j.is_number()) return {j.get<double>(), 0.0};
  if (j.is_array() && j.size() == 2 && j[0].is_number() && j[1].is_number())
    return {j[0].get<double>(), j[1].get<double>()};
  return {require<double>(j, "re"), j.contains("im") ? require<double>(j, "im") : 0.0};
}

Json to_json(const ScaledComplex& v) {
  Json j = {{"mantissa", to_json(v.mantissa)}, {"log_scale", v.log_scale}};
  const Complex plain = v.value();
  if (std::isfinite(plain.real()) && std::isfinite(plain.imag())) j["value"] = to_json(plain);
  return j;
}

Json to_json(const ExpansionTerm& t) {
  Json j = {{"coeff_re", t.coeff.real()},
            {"coeff_im", t.coeff.imag()},
            {"s0", to_json(t.z_exp)},
            {"log_pow", to_json(t.log_pow)},
            {"variable", variable_name(t.variable)}};
  if (t.exp) j["exp"] = {{"q", to_json(t.exp->q)}, {"beta", t.exp->beta}};
  if (t.osc) j["osc"] = {{"r", to_json(t.osc->r)}, {"phase0", t.osc->phase0}, {"beta", t.osc->beta}};
  return j;
}

ExpansionTerm term_from_json(const Json& j) {
  ExpansionTerm t;
  if (!j.is_object()) raise(Errc::InvalidArgument, "expansion term must be a JSON object");
  if (j.contains("coeff")) t.coeff = complex_from_json(j["coeff"]);
  if (j.contains("coeff_re") || j.contains("coeff_im"))
    t.coeff = {j.contains("coeff_re") ? require<double>(j, "coeff_re") : 0.0,
               j.contains("coeff_im") ? require<double>(j, "coeff_im") : 0.0};
  if (j.contains("s0")) t.z_exp = complex_from_json(j["s0"]);
  if (j.contains("z_exp")) t.z_exp = complex_from_json(j["z_exp"]);
  if (j.contains("log_pow")) t.log_pow = complex_from_json(j["log_pow"]);
  if (j.contains("variable")) t.variable = variable_from_name(require<std::string>(j, "variable"));
  if (j.contains("exp")) t.exp = ExpFactor{complex_from_json(j["exp"].at("q")), require<double>(j["exp"], "beta")};
  if (j.contains("osc")) {
    const Json& o = j["osc"];
    t.osc = OscFactor{complex_from_json(o.at("r")), o.contains("phase0") ? require<double>(o, "phase0") : 0.0,
                      require<double>(o, "beta")};
  }
  return t;
}

Json to_json(const Expansion& e) {
  Json terms = Json::array();
  for (const auto& t : e.terms) terms.push_back(to_json(t));
  Json lattices = Json::array();
  for (const auto& l : e.lattices) lattices.push_back(to_json(l));
  Json j = {{"terms", terms},
            {"source", e.source},
            {"lattices", lattices},
            {"note", e.note},
            {"unbounded_log_degree", e.unbounded_log_degree},
            {"rendered", render_expansion(e)}};
  j["error_order"] = e.error_order ? to_json(*e.error_order) : Json(nullptr);
  if (!e.terms.empty()) j["variable"] = variable_name(e.variable());
  return j;
}

Expansion expansion_from_json(const Json& j) {
  if (!j.is_object() || !j.contains("terms") || !j["terms"].is_array())
    raise(Errc::InvalidArgument, "expansion JSON needs a 'terms' array");
  Expansion e;
  for (const auto& t : j["terms"]) e.terms.push_back(term_from_json(t));
  if (j.contains("error_order") && !j["error_order"].is_null()) e.error_order = term_from_json(j["error_order"]);
  if (j.contains("lattices"))
    for (const auto& l : j["lattices"]) e.lattices.push_back(lattice_from_json(l));
  if (j.contains("source")) e.source = require<std::string>(j, "source");
  if (j.contains("note")) e.note = require<std::string>(j, "note");
  if (j.contains("unbounded_log_degree")) e.unbounded_log_degree = require<bool>(j, "unbounded_log_degree");
  return e;
}

std::string rationality_name(Rationality r) {
  switch (r) {
    case Rationality::Rational: return "rational";
    case Rationality::Irrational: return "irrational";
    case Rationality::Unknown: break;
  }
  return "unknown";
}

Rationality rationality_from_name(const std::string& name) {
  if (name == "rational") return Rationality::Rational;
  if (name == "irrational") return Rationality::Irrational;
  if (name == "unknown") return Rationality::Unknown;
  raise(Errc::InvalidArgument, "unknown rationality '" + name + "'");
}

Json to_json(const PoleLattice& l) {
  return {{"type", "lattice"},
          {"base", to_json(l.base)},
          {"step", to_json(l.step)},
          {"count", l.count ? Json(*l.count) : Json(nullptr)},
          {"two_sided", l.two_sided},
          {"step_rationality", rationality_name(l.step_rationality)},
          {"order", l.order}};
}

PoleLattice lattice_from_json(const Json& j) {
  PoleLattice l;
  l.base = complex_from_json(j.at("base"));
  l.step = complex_from_json(j.at("step"));
  if (j.contains("count") && !j["count"].is_null()) l.count = require<long>(j, "count");
  if (j.contains("two_sided")) l.two_sided = require<bool>(j, "two_sided");
  if (j.contains("step_rationality")) l.step_rationality = rationality_from_name(require<std::string>(j, "step_rationality"));
  if (j.contains("order")) l.order = require<int>(j, "order");
  return l;
}

Json to_json(const Singularity& s) {
  return std::visit(
      [](const auto& x) -> Json {
        using T = std::decay_t<decltype(x)>;
        if constexpr (std::is_same_v<T, PoleSingularity>) {
          return {{"type", "pole"}, {"location", to_json(x.location)}, {"order", x.order}};
        } else if constexpr (std::is_same_v<T, AlgebraicSingularity>) {
          Json psi = Json::array();
          for (const auto& p : x.psi_coeffs) psi.push_back(to_json(p));
          return {{"type", "algebraic"},
                  {"location", to_json(x.location)},
                  {"lambda", to_json(x.lambda)},
                  {"theta", to_json(x.theta)},
                  {"psi_coeffs", psi},
                  {"psi_exact_polynomial", x.psi_exact_polynomial},
                  {"cut_angle", x.cut_angle}};
        } else if constexpr (std::is_same_v<T, EssentialSingularity>) {
          return {{"type", "essential"},
                  {"location", to_json(x.location)},
                  {"descriptor", x.descriptor},
                  {"infinitely_many_imaginary_parts", x.infinitely_many_imaginary_parts}};
        } else {
          return to_json(x);
        }
      },
      s);
}

Json catalog_to_json(const CoefficientFunction& f) {
  Json params = Json::array();
  for (double p : f.params) params.push_back(p);
  Json cat = Json::array();
  for (const auto& s : f.catalog) cat.push_back(to_json(s));
  return {{"kind", builtin_name(f.kind)},
          {"params", params},
          {"label", f.label},
          {"growth_A", f.growth_A},
          {"growth_C", f.growth_C},
          {"lindelof_guarantee", f.lindelof_guarantee},
          {"catalog", cat},
          {"catalog_complete_above", real_or_null(f.catalog_complete_above)}};
}

Json to_json(const Verdict& v) {
  Json witness = nullptr;
  if (v.witness_term)
    witness = {{"term", to_json(*v.witness_term)}, {"rendered", render_term(*v.witness_term)}};
  else if (v.witness_lattice)
    witness = {{"lattice", to_json(*v.witness_lattice)}};
  else if (v.witness_descriptor)
    witness = {{"descriptor", *v.witness_descriptor}};
  Json j = {{"status", status_name(v.status)}, {"witness", witness}, {"note", v.note}};
  j["clause"] = v.clause == Clause::None ? Json(nullptr) : Json(clause_name(v.clause));
  return j;
}

Json to_json(const CatalogSummary& s) {
  Json lattices = Json::array();
  for (const auto& l : s.lattices) lattices.push_back(to_json(l));
  Json essentials = Json::array();
  for (const auto& e : s.essentials) essentials.push_back(to_json(Singularity{e}));
  Json j = {{"label", s.label}, {"lattices", lattices}, {"essentials", essentials}};
  if (s.exponents)
    j["exponents"] = {{"values", s.exponents->values},
                      {"exact", s.exponents->exact},
                      {"declared_progression_free", s.exponents->declared_progression_free},
                      {"descriptor", s.exponents->descriptor}};
  return j;
}

CatalogSummary summary_from_json(const Json& j) {
  if (!j.is_object()) raise(Errc::InvalidArgument, "catalog summary must be a JSON object");
  CatalogSummary s;
  if (j.contains("label")) s.label = require<std::string>(j, "label");
  if (j.contains("lattices"))
    for (const auto& l : j["lattices"]) s.lattices.push_back(lattice_from_json(l));
  if (j.contains("essentials"))
    for (const auto& e : j["essentials"]) {
      EssentialSingularity es;
      es.location = complex_from_json(e.at("location"));
      if (e.contains("descriptor")) es.descriptor = require<std::string>(e, "descriptor");
      if (e.contains("infinitely_many_imaginary_parts"))
        es.infinitely_many_imaginary_parts = require<bool>(e, "infinitely_many_imaginary_parts");
      s.essentials.push_back(es);
    }
  if (j.contains("exponents")) {
    const Json& x = j["exponents"];
    ExponentSet set;
    set.values = require<std::vector<double>>(x, "values");
    if (x.contains("exact")) set.exact = require<bool>(x, "exact");
    if (x.contains("declared_progression_free")) set.declared_progression_free = require<bool>(x, "declared_progression_free");
    if (x.contains("descriptor")) set.descriptor = require<std::string>(x, "descriptor");
    s.exponents = set;
  }
  return s;
}

Json to_json(const ContinuationResult& r) {
  return {{"value", to_json(r.value)},
          {"error_estimate", real_or_null(r.error_estimate)},
          {"relative_error", real_or_null(r.relative_error())},
          {"shift", r.shift},
          {"height", r.height},
          {"evaluations", r.evaluations}};
}

Json to_json(const DirectSumResult& r) {
  return {{"value", to_json(r.value)}, {"terms", r.terms}, {"tail_bound", real_or_null(r.tail_bound)}};
}

}  // namespace lindelof
