#include "cli.hpp"

#include <chrono>
#include <cmath>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <numbers>
#include <sstream>

#include "CLI11.hpp"
#include "lindelof/continuation.hpp"
#include "lindelof/differences.hpp"
#include "lindelof/errors.hpp"
#include "lindelof/expansions.hpp"
#include "lindelof/holonomy.hpp"
#include "lindelof/saddle_boundary.hpp"

namespace lindelof::cli {
namespace {

struct Common {
  bool json = false;
  bool csv = false;
  bool verbose = false;
  std::optional<int> prec;
  std::optional<double> tol;
  std::optional<int> seed_precision;
  unsigned threads = std::max(1u, std::thread::hardware_concurrency());
};

void add_common(CLI::App* sub, Common& c) {
  sub->add_flag("--json", c.json, "Emit a JSON run record");
  sub->add_flag("--csv", c.csv, "Emit CSV rows (tabular commands only)");
  sub->add_flag("-v,--verbose", c.verbose, "Log timing to standard error");
  sub->add_option("--prec", c.prec, "Working precision in bits")->check(CLI::Range(53, 1 << 24));
  sub->add_option("--tol", c.tol, "Target relative accuracy")->check(CLI::PositiveNumber);
  sub->add_option("--seed-precision", c.seed_precision,
                  "Pin the working precision (ignores LINDELOF_PRECISION_BITS) and report wall_time as null")
      ->check(CLI::Range(53, 1 << 24));
  sub->add_option("--threads", c.threads, "Worker threads for grid sweeps")->check(CLI::PositiveNumber);
}

PrecisionContext make_ctx(const Common& c) {
  PrecisionContext ctx = c.seed_precision ? PrecisionContext{} : PrecisionContext::from_env();
  if (c.seed_precision) ctx.bits = *c.seed_precision;
  if (c.prec) ctx.bits = *c.prec;
  if (c.tol) ctx.tol = *c.tol;
  ctx.validate();
  return ctx;
}

Json ctx_json(const PrecisionContext& ctx) { return {{"bits", ctx.bits}, {"tol", ctx.tol}}; }

std::string fmt(double x, int digits = 12) {
  std::ostringstream s;
  s << std::setprecision(digits) << x;
  return s.str();
}

std::string fmt(Complex z, int digits = 12) {
  if (z.imag() == 0.0) return fmt(z.real(), digits);
  std::ostringstream s;
  s << std::setprecision(digits) << z.real() << (z.imag() < 0 ? " - " : " + ") << std::abs(z.imag()) << "i";
  return s.str();
}

std::string fmt(const ScaledComplex& v, int digits = 12) {
  const Complex plain = v.value();
  if (std::isfinite(plain.real()) && std::isfinite(plain.imag())) return fmt(plain, digits);
  return "(" + fmt(v.mantissa, digits) + ") * exp(" + fmt(v.log_scale, digits) + ")";
}

Complex scaled_ratio(const ScaledComplex& a, const ScaledComplex& b) {
  return a.mantissa / b.mantissa * std::exp(a.log_scale - b.log_scale);
}

// ---- continue ---------------------------------------------------------------

struct ContinueOpts {
  std::string phi;
  std::optional<std::string> z, log_z, grid;
  std::optional<double> shift;
  double max_height = 200.0;
  std::string rule = "adaptive";
};

QuadratureConfig quad_config(const ContinueOpts& o, const PrecisionContext& ctx) {
  QuadratureConfig cfg;
  cfg.ctx = ctx;
  cfg.max_height = o.max_height;
  cfg.shift = o.shift;
  if (o.rule == "richardson")
    cfg.rule = QuadratureRule::FixedStepRichardson;
  else if (o.rule != "adaptive")
    raise(Errc::InvalidArgument, "unknown quadrature rule '" + o.rule + "'");
  cfg.validate();
  return cfg;
}

RunRecord cmd_continue(const ContinueOpts& o, const Common& c, std::ostream& out) {
  const auto ctx = make_ctx(c);
  const auto f = parse_builtin_spec(o.phi);
  const auto cfg = quad_config(o, ctx);
  const int given = int(bool(o.z)) + int(bool(o.log_z)) + int(bool(o.grid));
  if (given != 1) raise(Errc::InvalidArgument, "give exactly one of --z, --log-z, --z-grid");

  RunRecord rec;
  rec.command = "continue";
  rec.inputs = {{"phi", o.phi}, {"rule", o.rule}, {"max_height", o.max_height}, {"precision", ctx_json(ctx)}};
  if (o.shift) rec.inputs["shift"] = *o.shift;

  std::vector<Complex> log_zs;
  if (o.grid) {
    rec.inputs["z_grid"] = *o.grid;
    for (double l : parse_grid(*o.grid)) log_zs.emplace_back(l, 0.0);
  } else if (o.log_z) {
    log_zs.push_back(parse_complex(*o.log_z));
    rec.inputs["log_z"] = to_json(log_zs.back());
  }

  if (o.z) {
    const Complex z = parse_complex(*o.z);
    rec.inputs["z"] = to_json(z);
    const auto r = continue_gf(f, z, cfg);
    rec.outputs = to_json(r);
    rec.error_estimate = r.relative_error();
    if (c.csv) out << "z_re,z_im,value_re,value_im,log_scale,error_estimate\n"
                   << std::setprecision(17) << z.real() << ',' << z.imag() << ',' << r.value.mantissa.real() << ','
                   << r.value.mantissa.imag() << ',' << r.value.log_scale << ',' << r.error_estimate << '\n';
    else if (!c.json)
      out << "F(z) = " << fmt(r.value) << "\nerror estimate " << fmt(r.error_estimate, 3) << ", shift "
          << fmt(r.shift, 6) << ", height " << fmt(r.height, 6) << ", evaluations " << r.evaluations << '\n';
    return rec;
  }

  const auto results = fan_out<ContinuationResult>(log_zs.size(), c.threads, [&](std::size_t i) {
    return continue_gf_log(f, log_zs[i], cfg);
  });
  Json points = Json::array();
  for (std::size_t i = 0; i < results.size(); ++i) {
    Json p = to_json(results[i]);
    p["log_z"] = to_json(log_zs[i]);
    points.push_back(p);
    rec.error_estimate = std::max(rec.error_estimate, results[i].relative_error());
  }
  rec.outputs = log_zs.size() == 1 && !o.grid ? points[0] : Json{{"points", points}};
  if (c.csv) {
    out << "log_z_re,log_z_im,mantissa_re,mantissa_im,log_scale,error_estimate\n" << std::setprecision(17);
    for (std::size_t i = 0; i < results.size(); ++i)
      out << log_zs[i].real() << ',' << log_zs[i].imag() << ',' << results[i].value.mantissa.real() << ','
          << results[i].value.mantissa.imag() << ',' << results[i].value.log_scale << ','
          << results[i].error_estimate << '\n';
  } else if (!c.json) {
    out << std::left << std::setw(16) << "log z" << std::setw(44) << "F(z)" << "rel. error\n";
    for (std::size_t i = 0; i < results.size(); ++i)
      out << std::setw(16) << fmt(log_zs[i], 8) << std::setw(44) << fmt(results[i].value)
          << fmt(results[i].relative_error(), 3) << '\n';
  }
  return rec;
}

// ---- sum --------------------------------------------------------------------

struct SumOpts {
  std::string phi;
  std::string z;
  long cap = 10'000'000;
};

RunRecord cmd_sum(const SumOpts& o, const Common& c, std::ostream& out) {
  const auto ctx = make_ctx(c);
  const auto f = parse_builtin_spec(o.phi);
  const Complex z = parse_complex(o.z);
  const auto r = direct_sum(f, z, ctx, o.cap);
  RunRecord rec;
  rec.command = "sum";
  rec.inputs = {{"phi", o.phi}, {"z", to_json(z)}, {"term_cap", o.cap}, {"precision", ctx_json(ctx)}};
  rec.outputs = to_json(r);
  rec.error_estimate = r.tail_bound;
  if (c.csv) raise(Errc::InvalidArgument, "--csv is not available for 'sum'");
  if (!c.json)
    out << "F(z) = " << fmt(r.value) << "\nterms " << r.terms << ", relative tail bound " << fmt(r.tail_bound, 3)
        << '\n';
  return rec;
}

// ---- expand -----------------------------------------------------------------

struct ExpandOpts {
  std::string phi;
  std::string at = "infinity";
  double order = 1.0;
  double z = -0.99;
  double eps = 0.05;
};

bool has_algebraic(const CoefficientFunction& f) {
  for (const auto& s : f.catalog)
    if (std::holds_alternative<AlgebraicSingularity>(s)) return true;
  return false;
}

RunRecord cmd_expand(const ExpandOpts& o, const Common& c, std::ostream& out) {
  const auto ctx = make_ctx(c);
  const auto f = parse_builtin_spec(o.phi);
  RunRecord rec;
  rec.command = "expand";
  rec.inputs = {{"phi", o.phi}, {"at", o.at}, {"order", o.order}, {"eps", o.eps}, {"precision", ctx_json(ctx)}};
  if (c.csv) raise(Errc::InvalidArgument, "--csv is not available for 'expand'");
  const bool exp_power = f.kind == BuiltinKind::ExpPower;
  if (o.at == "infinity") {
    Expansion e;
    if (has_algebraic(f))
      e = algebraic_expansion(f, o.order, ctx);
    else if (exp_power && f.params[1] < 0.0)
      e = infinity_expansion(f.params[0], f.params[1], o.eps);
    else
      e = polar_expansion(f, o.order, ctx);
    rec.outputs = {{"expansion", to_json(e)}, {"rendered", render_expansion(e)}};
    if (!c.json) {
      out << render_expansion(e) << '\n';
      if (!e.note.empty()) out << "note: " << e.note << '\n';
    }
    return rec;
  }
  if (o.at != "minus-one") raise(Errc::InvalidArgument, "--at must be 'infinity' or 'minus-one'");
  if (!exp_power || !(f.params[1] > 0.0 && f.params[1] < 1.0))
    raise(Errc::UnsupportedKind, "expansions at -1 are available for exp:c,theta with 0 < theta < 1");
  const double order = std::round(o.order);
  if (f.params[0] < 0.0 && (order < 0.0 || std::abs(order - o.order) > 1e-12))
    raise(Errc::InvalidArgument, "--order must be a non-negative integer Taylor order at -1");
  rec.inputs["z"] = o.z;
  const auto a = approx_minus_one(f.params[0], f.params[1], o.z, o.eps, static_cast<int>(order), ctx);
  rec.outputs = {{"expansion", to_json(a.expansion)}, {"rendered", render_expansion(a.expansion)}, {"value", a.value}};
  if (a.log_value) rec.outputs["log_value"] = *a.log_value;
  if (a.one_plus_z_form) rec.outputs["one_plus_z_form"] = *a.one_plus_z_form;
  if (a.one_plus_z_expansion) {
    rec.outputs["one_plus_z_expansion"] = to_json(*a.one_plus_z_expansion);
    rec.outputs["one_plus_z_rendered"] = render_expansion(*a.one_plus_z_expansion);
  }
  if (!c.json) {
    out << render_expansion(a.expansion) << '\n';
    if (a.one_plus_z_expansion) out << render_expansion(*a.one_plus_z_expansion) << '\n';
    out << "value at z = " << fmt(o.z) << ": " << fmt(a.value) << '\n';
  }
  return rec;
}

// ---- diff -------------------------------------------------------------------

struct DiffOpts {
  std::string kind = "expinv+";
  std::vector<long> n{1};
  bool asymptotic = false;
};

RunRecord cmd_diff(const DiffOpts& o, const Common& c, std::ostream& out) {
  const auto ctx = make_ctx(c);
  const auto kind = sequence_kind_from_name(o.kind);
  RunRecord rec;
  rec.command = "diff";
  rec.inputs = {{"kind", o.kind}, {"n", o.n}, {"asymptotic", o.asymptotic}, {"precision", ctx_json(ctx)}};
  const auto rows = fan_out<Json>(o.n.size(), c.threads, [&](std::size_t i) {
    DifferenceRequest req;
    req.kind = kind;
    req.n = o.n[i];
    req.ctx = ctx;
    const auto r = differences_exact(req);
    Json row = {{"n", o.n[i]}, {"exact", r.value}, {"bits", r.bits}};
    if (o.asymptotic && o.n[i] >= 3) {
      const double a = differences_asymptotic(kind, o.n[i]);
      row["asymptotic"] = a;
      row["ratio"] = r.value / a;
    }
    return row;
  });
  rec.outputs = {{"rows", rows}};
  if (c.csv) {
    out << "n,exact,asymptotic,ratio\n" << std::setprecision(17);
    for (const auto& r : rows)
      out << r["n"].get<long>() << ',' << r["exact"].get<double>() << ','
          << (r.contains("asymptotic") ? fmt(r["asymptotic"].get<double>(), 17) : "") << ','
          << (r.contains("ratio") ? fmt(r["ratio"].get<double>(), 17) : "") << '\n';
  } else if (!c.json) {
    out << std::left << std::setw(10) << "n" << std::setw(22) << "D_n" << std::setw(22) << "asymptotic" << "ratio\n";
    for (const auto& r : rows)
      out << std::setw(10) << r["n"].get<long>() << std::setw(22) << fmt(r["exact"].get<double>())
          << std::setw(22) << (r.contains("asymptotic") ? fmt(r["asymptotic"].get<double>()) : "-")
          << (r.contains("ratio") ? fmt(r["ratio"].get<double>(), 8) : "-") << '\n';
  }
  return rec;
}

// ---- roots ------------------------------------------------------------------

struct RootsOpts {
  int count = 8;
  bool shifted = false;
};

RunRecord cmd_roots(const RootsOpts& o, const Common& c, std::ostream& out) {
  const auto ctx = make_ctx(c);
  const auto roots = o.shifted ? gamma_plus_one_eq_minus_one_roots(o.count, ctx) : gamma_eq_minus_one_roots(o.count, ctx);
  RunRecord rec;
  rec.command = "roots";
  rec.inputs = {{"count", o.count}, {"shifted", o.shifted}, {"precision", ctx_json(ctx)}};
  rec.outputs = {{"equation", o.shifted ? "Gamma(s+1) = -1" : "Gamma(s) = -1"}, {"roots", roots}};
  if (c.csv) {
    out << "index,root\n" << std::setprecision(17);
    for (std::size_t i = 0; i < roots.size(); ++i) out << i + 1 << ',' << roots[i] << '\n';
  } else if (!c.json) {
    for (std::size_t i = 0; i < roots.size(); ++i) out << std::setw(4) << i + 1 << "  " << fmt(roots[i], 15) << '\n';
  }
  return rec;
}

// ---- classify ---------------------------------------------------------------

struct ClassifyOpts {
  std::optional<std::string> phi;
  std::optional<std::string> expansion_file;
  CoverBudget budget;
};

RunRecord cmd_classify(const ClassifyOpts& o, const Common& c, std::ostream& out) {
  const auto ctx = make_ctx(c);
  if (bool(o.phi) == bool(o.expansion_file)) raise(Errc::InvalidArgument, "give exactly one of --phi, --expansion");
  if (c.csv) raise(Errc::InvalidArgument, "--csv is not available for 'classify'");
  RunRecord rec;
  rec.command = "classify";
  Verdict v;
  if (o.phi) {
    rec.inputs = {{"phi", *o.phi}, {"precision", ctx_json(ctx)}};
    v = classify_function(parse_builtin_spec(*o.phi), ctx);
  } else {
    std::ifstream in(*o.expansion_file);
    if (!in) raise(Errc::InvalidArgument, "cannot open '" + *o.expansion_file + "'");
    Json j;
    try {
      j = Json::parse(in);
    } catch (const nlohmann::json::exception& e) {
      raise(Errc::InvalidArgument, std::string("invalid JSON: ") + e.what());
    }
    if (j.contains("expansion") && j["expansion"].is_object()) j = j["expansion"];
    rec.inputs = {{"expansion_file", *o.expansion_file},
                  {"budget", {{"progressions", o.budget.progressions}, {"max_denominator", o.budget.max_denominator}}}};
    v = j.contains("terms") ? classify(expansion_from_json(j)) : classify(summary_from_json(j), o.budget);
  }
  rec.outputs = to_json(v);
  if (!c.json) {
    out << status_name(v.status);
    if (v.clause != Clause::None) out << " (" << clause_name(v.clause) << ")";
    out << '\n';
    if (v.witness_term) out << "witness: " << render_term(*v.witness_term) << '\n';
    if (v.witness_lattice)
      out << "witness: lattice " << fmt(v.witness_lattice->base) << " + m*(" << fmt(v.witness_lattice->step) << ")\n";
    if (v.witness_descriptor) out << "witness: " << *v.witness_descriptor << '\n';
    if (!v.note.empty()) out << v.note << '\n';
  }
  return rec;
}

// ---- table ------------------------------------------------------------------

struct TableOpts {
  std::string figure = "asympt";
  double log_z = 1e4;
  double log_z_algebraic = 100.0;
  double z_minus_one = -0.999;
};

struct TableCell {
  std::string form;
  std::string check;
  double ratio = 0.0;
};

struct TableRow {
  std::string coefficients;
  double c = 0.0, theta = 0.0;
  TableCell infinity, minus_one;
};

TableRow table_row(const std::string& label, double c, double theta, const TableOpts& o, const PrecisionContext& ctx) {
  TableRow row;
  row.coefficients = label;
  row.c = c;
  row.theta = theta;
  const auto f = make_builtin(BuiltinKind::ExpPower, {c, theta});
  const double h = 1.0 + o.z_minus_one;
  const double F_m1 = direct_sum(f, o.z_minus_one, ctx).value.value().real();
  if (theta < 0.0) {
    double L = o.log_z;
    if (c < 0.0) {
      // nearest extremum of the cosine factor
      const double k = std::round((2.0 * std::sqrt(L) - std::numbers::pi / 4) / std::numbers::pi);
      L = std::pow((k + 0.25) * std::numbers::pi / 2.0, 2);
    }
    const auto a = approx_infinity(c, theta, L);
    const auto r = continue_gf_log(f, L);
    row.infinity = {render_expansion(a.expansion), "log z = " + fmt(L, 8), scaled_ratio(r.value, a.value).real()};
    row.minus_one = {"1/(1+z)", "z = " + fmt(o.z_minus_one), F_m1 * h};
    return row;
  }
  const double L = o.log_z_algebraic;
  const auto e = algebraic_expansion(f, 0.5, ctx);
  const auto r = continue_gf_log(f, L);
  const Complex approx = evaluate_expansion(e, std::exp(L));
  row.infinity = {render_expansion(e), "log z = " + fmt(L, 8), (r.unscaled() / approx).real()};
  const auto m = approx_minus_one(c, theta, o.z_minus_one, 0.05, 1, ctx);
  if (c > 0.0) {
    const std::string form = m.one_plus_z_expansion ? render_expansion(*m.one_plus_z_expansion) : render_expansion(m.expansion);
    row.minus_one = {form, "z = " + fmt(o.z_minus_one), F_m1 / m.one_plus_z_form.value_or(m.value)};
  } else {
    row.minus_one = {render_expansion(m.expansion), "z = " + fmt(o.z_minus_one), F_m1 / m.value};
  }
  return row;
}

RunRecord cmd_table(const TableOpts& o, const Common& c, std::ostream& out) {
  if (o.figure != "asympt") raise(Errc::InvalidArgument, "only --figure asympt is available");
  if (c.csv) raise(Errc::InvalidArgument, "--csv is not available for 'table'");
  const auto ctx = make_ctx(c);
  struct Spec {
    const char* label;
    double c, theta;
  };
  const std::vector<Spec> specs = {{"e^(1/n)", 1.0, -1.0}, {"e^(-1/n)", -1.0, -1.0}, {"e^(sqrt n)", 1.0, 0.5},
                                   {"e^(-sqrt n)", -1.0, 0.5}};
  const auto rows = fan_out<TableRow>(specs.size(), c.threads, [&](std::size_t i) {
    return table_row(specs[i].label, specs[i].c, specs[i].theta, o, ctx);
  });
  RunRecord rec;
  rec.command = "table";
  rec.inputs = {{"figure", o.figure},
                {"log_z", o.log_z},
                {"log_z_algebraic", o.log_z_algebraic},
                {"z_minus_one", o.z_minus_one},
                {"precision", ctx_json(ctx)}};
  Json jrows = Json::array();
  for (const auto& r : rows) {
    auto cell = [](const TableCell& t) { return Json{{"form", t.form}, {"check", t.check}, {"ratio", t.ratio}}; };
    jrows.push_back({{"coefficients", r.coefficients},
                     {"c", r.c},
                     {"theta", r.theta},
                     {"infinity", cell(r.infinity)},
                     {"minus_one", cell(r.minus_one)}});
    rec.error_estimate = std::max({rec.error_estimate, std::abs(r.infinity.ratio - 1.0), std::abs(r.minus_one.ratio - 1.0)});
  }
  rec.outputs = {{"rows", jrows}};
  if (!c.json) {
    for (const auto& r : rows) {
      out << r.coefficients << '\n'
          << "  z -> infinity: " << r.infinity.form << "\n    ratio " << fmt(r.infinity.ratio, 8) << " at "
          << r.infinity.check << '\n'
          << "  z -> -1:       " << r.minus_one.form << "\n    ratio " << fmt(r.minus_one.ratio, 8) << " at "
          << r.minus_one.check << '\n';
    }
  }
  return rec;
}

}  // namespace

Json RunRecord::to_json() const {
  Json j = {{"schema_version", kSchemaVersion},
            {"command", command},
            {"inputs", inputs},
            {"outputs", outputs},
            {"error_estimate", std::isfinite(error_estimate) ? Json(error_estimate) : Json(nullptr)}};
  j["wall_time"] = wall_time_s ? Json(*wall_time_s) : Json(nullptr);
  return j;
}

Complex parse_complex(const std::string& text) {
  auto parse_real = [&](const std::string& s) {
    std::size_t used = 0;
    double v = 0.0;
    try {
      v = std::stod(s, &used);
    } catch (const std::exception&) {
      used = 0;
    }
    if (used == 0 || used != s.size()) raise(Errc::InvalidArgument, "cannot parse number '" + text + "'");
    return v;
  };
  const auto comma = text.find(',');
  if (comma == std::string::npos) return {parse_real(text), 0.0};
  return {parse_real(text.substr(0, comma)), parse_real(text.substr(comma + 1))};
}

std::vector<double> parse_grid(const std::string& text) {
  std::vector<std::string> parts;
  std::stringstream ss(text);
  for (std::string p; std::getline(ss, p, ':');) parts.push_back(p);
  if (parts.size() != 4 || parts[0] != "log") raise(Errc::InvalidArgument, "grid must look like log:A:B:N");
  const double a = parse_complex(parts[1]).real();
  const double b = parse_complex(parts[2]).real();
  const double n = parse_complex(parts[3]).real();
  if (!(a > 0.0 && b >= a) || !(n >= 1.0) || n != std::floor(n) || n > 1e6)
    raise(Errc::InvalidArgument, "grid needs 0 < A <= B and a positive integer N");
  std::vector<double> out;
  const int count = static_cast<int>(n);
  for (int i = 0; i < count; ++i)
    out.push_back(count == 1 ? a : a * std::pow(b / a, double(i) / double(count - 1)));
  return out;
}

int exit_code_for(const Error& e) {
  switch (e.category()) {
    case ErrorCategory::Domain: return kDomainError;
    case ErrorCategory::Convergence: return kConvergenceError;
    case ErrorCategory::BadArgument: return kBadArguments;
  }
  return kBadArguments;
}

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Analytic continuation and asymptotics of generating functions with analytic coefficient laws",
               "lindelof"};
  app.require_subcommand(1);
  Common common;

  ContinueOpts cont;
  auto* s_cont = app.add_subcommand("continue", "Continue sum phi(n)(-z)^n beyond the unit disc");
  s_cont->add_option("--phi", cont.phi, "Coefficient law, kind[:p1,p2,...]")->required();
  s_cont->add_option("--z", cont.z, "Point z as re or re,im");
  s_cont->add_option("--log-z", cont.log_z, "log z as re or re,im (for huge |z|)");
  s_cont->add_option("--z-grid", cont.grid, "Sweep log z over log:A:B:N");
  s_cont->add_option("--shift", cont.shift, "Contour abscissa in (0,1)");
  s_cont->add_option("--max-height", cont.max_height, "Truncation height cap");
  s_cont->add_option("--rule", cont.rule, "adaptive or richardson");
  add_common(s_cont, common);

  SumOpts sum;
  auto* s_sum = app.add_subcommand("sum", "Direct summation inside the unit disc");
  s_sum->add_option("--phi", sum.phi, "Coefficient law")->required();
  s_sum->add_option("--z", sum.z, "Point z as re or re,im")->required();
  s_sum->add_option("--cap", sum.cap, "Maximum number of terms")->check(CLI::PositiveNumber);
  add_common(s_sum, common);

  ExpandOpts exp;
  auto* s_exp = app.add_subcommand("expand", "Asymptotic expansion at infinity or at -1");
  s_exp->add_option("--phi", exp.phi, "Coefficient law")->required();
  s_exp->add_option("--at", exp.at, "infinity or minus-one");
  s_exp->add_option("--order", exp.order, "Order K (strip width, log order, or Taylor order)");
  s_exp->add_option("--z", exp.z, "Evaluation point for the approximant at -1");
  s_exp->add_option("--eps", exp.eps, "Error-exponent slack");
  add_common(s_exp, common);

  DiffOpts diff;
  auto* s_diff = app.add_subcommand("diff", "Alternating binomial differences");
  s_diff->add_option("--kind", diff.kind, "expinv+, expinv-, expsqrt+ or expsqrt-");
  s_diff->add_option("--n", diff.n, "One or more orders n")->expected(1, -1);
  s_diff->add_flag("--asymptotic", diff.asymptotic, "Include the leading asymptotic form and the ratio");
  add_common(s_diff, common);

  RootsOpts roots;
  auto* s_roots = app.add_subcommand("roots", "Real roots of Gamma(s) = -1");
  s_roots->add_option("--count", roots.count, "Number of roots")->check(CLI::Range(1, 170));
  s_roots->add_flag("--shifted", roots.shifted, "Roots of Gamma(s+1) = -1 instead");
  add_common(s_roots, common);

  ClassifyOpts cls;
  auto* s_cls = app.add_subcommand("classify", "Check an expansion or catalog against the holonomic local shape");
  s_cls->add_option("--phi", cls.phi, "Coefficient law");
  s_cls->add_option("--expansion", cls.expansion_file, "JSON file with an expansion or catalog summary");
  s_cls->add_option("--budget-progressions", cls.budget.progressions, "Progression budget")->check(CLI::PositiveNumber);
  s_cls->add_option("--budget-denominator", cls.budget.max_denominator, "Largest step denominator")
      ->check(CLI::PositiveNumber);
  add_common(s_cls, common);

  TableOpts table;
  auto* s_table = app.add_subcommand("table", "Asymptotic forms of E(z; c, theta) with numeric checks");
  s_table->add_option("--figure", table.figure, "Table to reproduce (asympt)");
  s_table->add_option("--log-z", table.log_z, "log z for the theta < 0 rows");
  s_table->add_option("--log-z-algebraic", table.log_z_algebraic, "log z for the theta = 1/2 rows");
  s_table->add_option("--z-minus-one", table.z_minus_one, "Point near -1");
  add_common(s_table, common);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::ParseError& e) {
    app.exit(e, out, err);
    return kBadArguments;
  }

  const auto start = std::chrono::steady_clock::now();
  std::ostringstream body;
  std::string command = "unknown";
  try {
    RunRecord rec;
    if (*s_cont) rec = cmd_continue(cont, common, body);
    else if (*s_sum) rec = cmd_sum(sum, common, body);
    else if (*s_exp) rec = cmd_expand(exp, common, body);
    else if (*s_diff) rec = cmd_diff(diff, common, body);
    else if (*s_roots) rec = cmd_roots(roots, common, body);
    else if (*s_cls) rec = cmd_classify(cls, common, body);
    else if (*s_table) rec = cmd_table(table, common, body);
    command = rec.command;
    const double wall = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (!common.seed_precision) rec.wall_time_s = wall;
    if (common.verbose) err << "[lindelof] " << rec.command << " finished in " << fmt(wall, 4) << " s\n";
    if (common.json && !common.csv)
      out << rec.to_json().dump(2) << '\n';
    else
      out << body.str();
    return kOk;
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    if (common.json)
      out << Json{{"schema_version", kSchemaVersion},
                  {"command", app.get_subcommands().front()->get_name()},
                  {"error", {{"code", std::string(to_string(e.code()))}, {"message", e.what()}}}}
                 .dump(2)
          << '\n';
    return exit_code_for(e);
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kConvergenceError;
  }
}

}  // namespace lindelof::cli
