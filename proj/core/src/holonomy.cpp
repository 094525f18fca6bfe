#include "lindelof/holonomy.hpp"

#include <algorithm>
#include <cmath>
#include <tuple>

#include "lindelof/errors.hpp"
#include "lindelof/expansions.hpp"
#include "lindelof/saddle_boundary.hpp"

namespace lindelof {
namespace {

constexpr double kIntTol = 1e-9;

bool is_integer(double x) { return std::abs(x - std::round(x)) <= kIntTol * std::max(1.0, std::abs(x)); }

bool is_integer(Complex x) { return std::abs(x.imag()) <= kIntTol && is_integer(x.real()); }

Verdict violation(Clause c, std::string note) {
  Verdict v;
  v.status = VerdictStatus::Violation;
  v.clause = c;
  v.note = std::move(note);
  return v;
}

bool vertical_unbounded(const PoleLattice& l) { return !l.count && std::abs(l.step.imag()) > kIntTol; }

bool real_unbounded(const PoleLattice& l) { return !l.count && std::abs(l.step.imag()) <= kIntTol; }

std::optional<Verdict> classify_lattices(const std::vector<PoleLattice>& lattices) {
  for (const auto& l : lattices)
    if (vertical_unbounded(l)) {
      auto v = violation(Clause::InfinitelyManyImaginaryParts, "unbounded lattice with a non-real step");
      v.witness_lattice = l;
      return v;
    }
  for (const auto& l : lattices) {
    if (!real_unbounded(l)) continue;
    if (l.step_rationality == Rationality::Irrational) {
      auto v = violation(Clause::IrrationalProgressionStep, "unbounded real lattice with an irrational step");
      v.witness_lattice = l;
      return v;
    }
    if (l.step_rationality == Rationality::Unknown)
      raise(Errc::UnanchoredExactness, "lattice step rationality is unknown; declare it explicitly");
  }
  return std::nullopt;
}

// Number of progressions k/q + anchor (q <= max_denominator) needed to cover the set,
// chosen greedily; stops counting once it exceeds the budget.
int greedy_cover(std::vector<double> values, const CoverBudget& budget) {
  int used = 0;
  while (!values.empty() && used <= budget.progressions) {
    const double anchor = values.front();
    std::size_t best_count = 0;
    int best_q = 1;
    for (int q = 1; q <= budget.max_denominator; ++q) {
      std::size_t n = 0;
      for (double v : values)
        if (is_integer((v - anchor) * q)) ++n;
      if (n > best_count) {
        best_count = n;
        best_q = q;
      }
    }
    std::erase_if(values, [&](double v) { return is_integer((v - anchor) * best_q); });
    ++used;
  }
  return values.empty() ? used : budget.progressions + 1;
}

}  // namespace

Verdict classify(const Expansion& e) {
  if (e.variable() != Variable::LogZAtInfinity)
    raise(Errc::InvalidArgument, "classification needs an expansion in the variable at infinity");
  // Fixed scan order so that the witness does not depend on the input order.
  std::vector<ExpansionTerm> terms = e.terms;
  auto key = [](const ExpansionTerm& t) {
    const double eb = t.exp ? t.exp->beta : 0.0, ob = t.osc ? t.osc->beta : 0.0;
    return std::tuple(-t.z_exp.real(), -t.log_pow.real(), -eb, -ob, t.z_exp.imag(), t.log_pow.imag(),
                      t.coeff.real(), t.coeff.imag());
  };
  std::sort(terms.begin(), terms.end(), [&](const auto& a, const auto& b) { return key(a) < key(b); });
  for (const auto& t : terms) {
    const bool exp_bad = t.exp && t.exp->q != Complex(0.0, 0.0) && !is_integer(t.exp->beta);
    const bool osc_bad = t.osc && t.osc->r != Complex(0.0, 0.0) && !is_integer(t.osc->beta);
    if (exp_bad || osc_bad) {
      auto v = violation(Clause::ExpOfLogPower, "exponential of a non-integer power of log z");
      v.witness_term = t;
      return v;
    }
  }
  for (const auto& t : terms)
    if (!is_integer(t.log_pow)) {
      auto v = violation(Clause::NonIntegerLogPower, "non-integer power of log z");
      v.witness_term = t;
      return v;
    }
  if (e.unbounded_log_degree) return violation(Clause::UnboundedLogDegree, "log degree is unbounded");
  if (auto v = classify_lattices(e.lattices)) return *v;
  Verdict ok;
  ok.note = "no clause violated by the supplied terms";
  return ok;
}

Verdict classify(const CatalogSummary& s, const CoverBudget& budget) {
  if (budget.progressions < 1 || budget.max_denominator < 1)
    raise(Errc::InvalidArgument, "cover budget must be positive");
  for (const auto& e : s.essentials)
    if (e.infinitely_many_imaginary_parts) {
      auto v = violation(Clause::InfinitelyManyImaginaryParts, "singular exponents with infinitely many imaginary parts");
      v.witness_descriptor = e.descriptor;
      return v;
    }
  if (auto v = classify_lattices(s.lattices)) return *v;
  if (s.exponents) {
    const auto& x = *s.exponents;
    if (x.declared_progression_free) {
      auto v = violation(Clause::NotInFiniteProgressionUnion, "exponent family declared free of finite progression covers");
      v.witness_descriptor = x.descriptor;
      return v;
    }
    if (x.values.size() > static_cast<std::size_t>(budget.progressions)) {
      if (!x.exact) raise(Errc::UnanchoredExactness, "exponent values are floating-point only");
      if (greedy_cover(x.values, budget) > budget.progressions) {
        auto v = violation(Clause::NotInFiniteProgressionUnion, "no cover within the progression budget");
        v.witness_descriptor = x.descriptor;
        return v;
      }
    }
  }
  Verdict ok;
  ok.note = "catalog summary violates no clause";
  return ok;
}

CatalogSummary summarize(const CoefficientFunction& f) {
  CatalogSummary s;
  s.label = f.label;
  ExponentSet poles;
  for (const auto& sing : f.catalog) {
    if (const auto* l = std::get_if<PoleLattice>(&sing))
      s.lattices.push_back(*l);
    else if (const auto* e = std::get_if<EssentialSingularity>(&sing))
      s.essentials.push_back(*e);
    else if (const auto* p = std::get_if<PoleSingularity>(&sing))
      if (std::abs(p->location.imag()) <= kIntTol) poles.values.push_back(p->location.real());
  }
  if (f.kind == BuiltinKind::RecipGammaPlusOne) {
    poles.declared_progression_free = true;
    poles.descriptor = "roots of Gamma(s+1) = -1";
  }
  if (!poles.values.empty() || poles.declared_progression_free) s.exponents = poles;
  return s;
}

Verdict classify_function(const CoefficientFunction& f, const PrecisionContext& ctx) {
  ctx.validate();
  const bool algebraic = std::any_of(f.catalog.begin(), f.catalog.end(),
                                     [](const Singularity& s) { return std::holds_alternative<AlgebraicSingularity>(s); });
  if (algebraic) return classify(algebraic_expansion(f, 1.5, ctx));
  if (f.kind == BuiltinKind::ExpPower && f.params.size() >= 2 && f.params[1] < 0.0)
    return classify(infinity_expansion(f.params[0], f.params[1], 0.0));
  const Verdict summary = classify(summarize(f));
  if (summary.status == VerdictStatus::Violation) return summary;
  try {
    return classify(polar_expansion(f, 2.5, ctx));
  } catch (const Error& err) {
    if (err.code() != Errc::HypothesisViolation && err.code() != Errc::CatalogIncomplete) throw;
    Verdict v = summary;
    v.note += "; polar expansion unavailable: " + std::string(err.what());
    return v;
  }
}

std::string clause_name(Clause c) {
  switch (c) {
    case Clause::None: return "none";
    case Clause::NonIntegerLogPower: return "non_integer_log_power";
    case Clause::ExpOfLogPower: return "exp_of_log_power";
    case Clause::IrrationalProgressionStep: return "irrational_progression_step";
    case Clause::InfinitelyManyImaginaryParts: return "infinitely_many_imaginary_parts";
    case Clause::UnboundedLogDegree: return "unbounded_log_degree";
    case Clause::NotInFiniteProgressionUnion: return "not_in_finite_progression_union";
  }
  return "unknown";
}

Clause clause_from_name(const std::string& name) {
  for (Clause c : {Clause::None, Clause::NonIntegerLogPower, Clause::ExpOfLogPower, Clause::IrrationalProgressionStep,
                   Clause::InfinitelyManyImaginaryParts, Clause::UnboundedLogDegree,
                   Clause::NotInFiniteProgressionUnion})
    if (clause_name(c) == name) return c;
  raise(Errc::InvalidArgument, "unknown clause '" + name + "'");
}

std::string status_name(VerdictStatus s) { return s == VerdictStatus::Violation ? "violation" : "consistent"; }

}  // namespace lindelof
