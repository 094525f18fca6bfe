#include "lindelof/expansions.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "lindelof/errors.hpp"

namespace lindelof {
namespace {

constexpr double kSame = 1e-9;

bool is_integer_point(Complex s) {
  return std::abs(s.imag()) < 1e-14 && std::abs(s.real() - std::round(s.real())) < 1e-12;
}

// Distance from s0 to the nearest singular point of phi(s) pi/sin(pi s) other than s0.
double isolation_distance(const CoefficientFunction& f, Complex s0) {
  double d = std::numeric_limits<double>::infinity();
  auto consider = [&](Complex p) {
    const double dist = std::abs(p - s0);
    if (dist > kSame) d = std::min(d, dist);
  };
  const double n = std::round(s0.real());
  for (double m : {n - 1.0, n, n + 1.0}) consider(Complex(m, 0.0));
  for (const auto& sing : f.catalog) {
    if (const auto* l = std::get_if<PoleLattice>(&sing)) {
      const Complex u = (s0 - l->base) / l->step;
      const double m0 = std::round(u.real());
      for (double m = m0 - 1; m <= m0 + 1; ++m) {
        if (!l->two_sided && (m < 0 || (l->count && m >= double(*l->count)))) continue;
        consider(l->base + m * l->step);
      }
    } else {
      consider(singularity_location(sing));
    }
  }
  return d;
}

// Index range of lattice members with lo < Re s < hi and |Im s| <= cap (empty: first > second).
std::pair<long, long> lattice_index_range(const PoleLattice& l, double lo, double hi, double cap,
                                          bool enforce_limit = true) {
  constexpr double kBig = 1e7;
  double m_lo = l.two_sided ? -kBig : 0.0;
  double m_hi = l.count ? double(*l.count - 1) : kBig;
  auto clip = [&](double b, double step, double a_lo, double a_hi, bool open) {
    if (step == 0.0) {
      const bool inside = open ? (b > a_lo && b < a_hi) : (b >= a_lo && b <= a_hi);
      if (!inside) m_hi = m_lo - 1;
      return;
    }
    double x = (a_lo - b) / step, y = (a_hi - b) / step;
    if (x > y) std::swap(x, y);
    if (std::isfinite(x)) m_lo = std::max(m_lo, open ? std::floor(x) + 1.0 : std::ceil(x));
    if (std::isfinite(y)) m_hi = std::min(m_hi, open ? std::ceil(y) - 1.0 : std::floor(y));
  };
  clip(l.base.real(), l.step.real(), lo, hi, true);
  clip(l.base.imag(), l.step.imag(), -cap, cap, false);
  if (enforce_limit && m_hi - m_lo > 1e6) raise(Errc::CapExceeded, "too many lattice poles in the strip");
  return {static_cast<long>(m_lo), static_cast<long>(m_hi)};
}

struct StripPole {
  Complex location;
  int phi_order;
};

void add_pole(std::vector<StripPole>& poles, Complex loc, int order) {
  for (auto& p : poles) {
    if (std::abs(p.location - loc) < kSame) {
      p.phi_order = std::max(p.phi_order, order);
      return;
    }
  }
  poles.push_back({loc, order});
}

// Rounding leaves tiny imaginary parts on terms that are real for real-valued phi.
void snap_real_coefficients(const CoefficientFunction& f, std::vector<ExpansionTerm>& terms) {
  if (!f.real_on_real_axis) return;
  for (auto& t : terms)
    if (t.z_exp.imag() == 0.0 && t.log_pow.imag() == 0.0 && std::abs(t.coeff.imag()) <= 1e-12 * std::abs(t.coeff))
      t.coeff.imag(0.0);
}

}  // namespace

std::vector<ExpansionTerm> residue_terms(const CoefficientFunction& f, const PoleSingularity& pole,
                                         const PrecisionContext& ctx, std::optional<double> radius) {
  ctx.validate();
  if (pole.order < 0) raise(Errc::InvalidArgument, "pole order must be non-negative");
  const Complex s0 = pole.location;
  const bool sine_pole = is_integer_point(s0);
  const int order = pole.order + (sine_pole ? 1 : 0);
  if (order == 0) return {};

  if (pole.order == 0 && !radius) {
    // Simple sine pole at an integer m with phi regular: residue (-1)^m phi(m) z^m.
    const double m = std::round(s0.real());
    const Complex phi = evaluate(f, Complex(m, 0.0), ctx);
    const double sign = std::fmod(std::abs(m), 2.0) == 0.0 ? 1.0 : -1.0;
    ExpansionTerm t;
    t.coeff = -sign * phi;
    t.z_exp = Complex(m, 0.0);
    return {t};
  }

  const double r = radius ? *radius : 0.5 * std::min(isolation_distance(f, s0), 1.0);
  if (!(r > 0.0)) raise(Errc::InvalidArgument, "Laurent radius must be positive");
  auto g = [&f](Complex s) { return f.evaluator(s) * recip_sin_pi(s, 0.0); };
  const auto laurent = taylor_coeffs_numeric(g, s0, r, order, ctx, order);  // a_{-order} .. a_{-1}
  std::vector<ExpansionTerm> out;
  double fact = 1.0;
  for (int j = 0; j < order; ++j) {
    if (j > 0) fact *= j;
    ExpansionTerm t;
    t.coeff = -laurent[static_cast<std::size_t>(order - 1 - j)] / fact;
    t.z_exp = s0;
    t.log_pow = double(j);
    out.push_back(t);
  }
  return out;
}

Expansion polar_expansion(const CoefficientFunction& f, double B, const PrecisionContext& ctx,
                          double lattice_height_cap) {
  ctx.validate();
  if (!std::isfinite(B)) raise(Errc::InvalidArgument, "B must be finite");
  if (!(lattice_height_cap > 0)) raise(Errc::InvalidArgument, "lattice height cap must be positive");
  if (f.catalog_complete_above > -B)
    raise(Errc::CatalogIncomplete, "singularity catalog of " + f.label + " does not reach Re s = -B");
  const double lo = -B, hi = 0.5;
  auto on_line = [&](Complex s) { return std::abs(s.real() - lo) < 1e-9; };
  auto in_strip = [&](Complex s) { return s.real() > lo && s.real() < hi; };

  Expansion e;
  e.source = "polar";
  std::vector<StripPole> poles;
  for (const auto& sing : f.catalog) {
    if (const auto* p = std::get_if<PoleSingularity>(&sing)) {
      if (on_line(p->location)) raise(Errc::HypothesisViolation, "a pole lies on Re s = -B");
      if (in_strip(p->location)) add_pole(poles, p->location, p->order);
    } else if (const auto* l = std::get_if<PoleLattice>(&sing)) {
      const auto all = lattice_index_range(*l, lo, hi, std::numeric_limits<double>::infinity(), false);
      const auto kept = lattice_index_range(*l, lo, hi, lattice_height_cap);
      for (long m = kept.first; m <= kept.second; ++m) {
        const Complex s = l->base + double(m) * l->step;
        if (on_line(s)) raise(Errc::HypothesisViolation, "a lattice pole lies on Re s = -B");
        add_pole(poles, s, l->order);
      }
      auto size = [](std::pair<long, long> r) { return std::max(0L, r.second - r.first + 1); };
      const bool truncated = size(all) > size(kept);
      if (kept.first <= kept.second || truncated) e.lattices.push_back(*l);
      if (truncated) e.note = "lattice truncated at |Im s| <= " + std::to_string(lattice_height_cap);
    } else {
      const Complex loc = singularity_location(sing);
      if (loc.real() > lo) {
        if (std::holds_alternative<AlgebraicSingularity>(sing))
          raise(Errc::HypothesisViolation, "algebraic singularity in the strip; use the algebraic expansion");
        raise(Errc::CatalogIncomplete, "essential singularity in the strip: " +
                                           std::get<EssentialSingularity>(sing).descriptor);
      }
    }
  }
  for (double n = 0.0; n > lo; n -= 1.0) {
    if (on_line(Complex(n, 0.0))) raise(Errc::HypothesisViolation, "an integer lies on Re s = -B");
    add_pole(poles, Complex(n, 0.0), 0);
  }
  if (std::abs(lo - std::round(lo)) < 1e-9) raise(Errc::HypothesisViolation, "an integer lies on Re s = -B");

  std::vector<ExpansionTerm> terms;
  for (const auto& p : poles) {
    auto t = residue_terms(f, PoleSingularity{p.location, p.phi_order}, ctx);
    terms.insert(terms.end(), t.begin(), t.end());
  }
  snap_real_coefficients(f, terms);
  e.terms = merge_terms(terms);
  sort_by_dominance(e.terms);
  ExpansionTerm err;
  err.z_exp = Complex(-B, 0.0);
  e.error_order = err;
  if (f.right_pole) {
    if (!e.note.empty()) e.note += "; ";
    e.note += "contour integral only: poles with Re s > 0 add -residue * z^p * pi/sin(pi p)";
  }
  return e;
}

int regular_sum_upper_index(const std::vector<Complex>& dominant_locations) {
  if (dominant_locations.empty()) raise(Errc::InvalidArgument, "no dominant singularity");
  const double re = dominant_locations.front().real();
  const bool re_integer = std::abs(re - std::round(re)) < 1e-12;
  const bool any_integer = std::any_of(dominant_locations.begin(), dominant_locations.end(), is_integer_point);
  if (re_integer && !any_integer) return static_cast<int>(std::round(-re));
  return static_cast<int>(std::ceil(-re - 1e-12)) - 1;
}

Expansion algebraic_expansion(const CoefficientFunction& f, double K, const PrecisionContext& ctx) {
  ctx.validate();
  if (!std::isfinite(K)) raise(Errc::InvalidArgument, "K must be finite");
  if (!f.lindelof_guarantee) raise(Errc::HypothesisViolation, f.label + " does not satisfy the growth condition");
  std::vector<const AlgebraicSingularity*> alg;
  double top = -std::numeric_limits<double>::infinity();
  for (const auto& sing : f.catalog) {
    if (const auto* a = std::get_if<AlgebraicSingularity>(&sing)) {
      const double w = a->cut_angle;
      if (!(std::abs(w) < M_PI / 2 && w != 0.0))
        raise(Errc::HypothesisViolation, "cut angle must lie in (-pi/2, 0) or (0, pi/2)");
      if (!(a->theta.real() > 0.0)) raise(Errc::HypothesisViolation, "algebraic singularity needs Re theta > 0");
      alg.push_back(a);
      top = std::max(top, a->location.real());
    }
  }
  if (alg.empty()) raise(Errc::HypothesisViolation, f.label + " has no algebraic-type singularity");
  for (const auto& sing : f.catalog) {
    if (std::holds_alternative<AlgebraicSingularity>(sing)) continue;
    if (singularity_location(sing).real() >= top - 1e-12)
      raise(Errc::HypothesisViolation, "a non-algebraic singularity dominates or ties the algebraic one");
  }

  std::vector<const AlgebraicSingularity*> dominant;
  std::vector<Complex> locations;
  for (const auto* a : alg) {
    if (std::abs(a->location.real() - top) < 1e-12) {
      dominant.push_back(a);
      locations.push_back(a->location);
    }
  }

  std::vector<ExpansionTerm> terms;
  const int n_max = regular_sum_upper_index(locations);
  for (int n = 0; n <= n_max; ++n) {
    ExpansionTerm t;
    t.coeff = (n % 2 == 0 ? -1.0 : 1.0) * evaluate(f, Complex(-double(n), 0.0), ctx);
    t.z_exp = Complex(-double(n), 0.0);
    terms.push_back(t);
  }

  const int j_max = static_cast<int>(std::ceil(K)) + 1;
  for (const auto* a : dominant) {
    const auto b = sin_expansion_coeffs(a->location, j_max, ctx);  // b[i] = b_{i-1}
    const double theta_re = a->theta.real();
    if (!a->psi_exact_polynomial && theta_re * double(a->psi_coeffs.size()) < K + 1.0)
      raise(Errc::HypothesisViolation, "stored psi coefficients are too few for the requested order");
    for (std::size_t k = 0; k < a->psi_coeffs.size(); ++k) {
      const Complex tk = a->theta * double(k);
      if (tk.real() - 1.0 >= K) break;
      for (int j = -1; tk.real() + j < K; ++j) {
        const Complex bj = b[static_cast<std::size_t>(j + 1)];
        if (bj == Complex(0.0, 0.0) || a->psi_coeffs[k] == Complex(0.0, 0.0)) continue;
        const Complex g_arg = -tk - double(j) + a->lambda;
        ExpansionTerm t;
        t.coeff = -a->psi_coeffs[k] * bj * rgamma(g_arg);
        t.z_exp = a->location;
        t.log_pow = g_arg - 1.0;
        terms.push_back(t);
      }
    }
  }

  snap_real_coefficients(f, terms);

  Expansion e;
  e.source = "algebraic";
  e.terms = merge_terms(terms);
  sort_by_dominance(e.terms);
  ExpansionTerm err;
  err.z_exp = Complex(top, 0.0);
  err.log_pow = Complex(-K + dominant.front()->lambda.real() - 1.0, 0.0);
  e.error_order = err;
  return e;
}

}  // namespace lindelof
