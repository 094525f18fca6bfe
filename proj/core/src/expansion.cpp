#include "lindelof/expansion.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <sstream>

#include "lindelof/errors.hpp"

namespace lindelof {
namespace {

constexpr double kTie = 1e-12;

std::string fmt_real(double x, int digits) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.*g", digits, x);
  return buf;
}

std::string fmt_complex(Complex c, int digits) {
  if (c.imag() == 0.0) return fmt_real(c.real(), digits);
  if (c.real() == 0.0) return fmt_real(c.imag(), digits) + "i";
  std::string im = fmt_real(std::abs(c.imag()), digits);
  return "(" + fmt_real(c.real(), digits) + (c.imag() < 0 ? " - " : " + ") + im + "i)";
}

bool is_zero(Complex c) { return c == Complex(0.0, 0.0); }

Complex cpow_pos(Complex base_log, Complex exponent) { return std::exp(exponent * base_log); }

// Growth rank of the exponential factor as the variable reaches its limit.
double exp_rank(const ExpansionTerm& t) {
  if (!t.exp || t.exp->q.real() == 0.0) return 0.0;
  const double sign = t.exp->q.real() > 0 ? 1.0 : -1.0;
  if (t.variable == Variable::LogZAtInfinity) return t.exp->beta > 0 ? sign * t.exp->beta : 0.0;
  return t.exp->beta < 0 ? -sign * t.exp->beta : 0.0;
}

int compare_dominance(const ExpansionTerm& a, const ExpansionTerm& b) {
  const bool at_infinity = a.variable == Variable::LogZAtInfinity;
  const double za = a.z_exp.real(), zb = b.z_exp.real();
  if (std::abs(za - zb) > kTie) {
    if (at_infinity) return za > zb ? 1 : -1;
    return za < zb ? 1 : -1;
  }
  const double ra = exp_rank(a), rb = exp_rank(b);
  if (std::abs(ra - rb) > kTie) return ra > rb ? 1 : -1;
  const double qa = a.exp ? a.exp->q.real() : 0.0, qb = b.exp ? b.exp->q.real() : 0.0;
  if (std::abs(ra) > kTie && std::abs(qa - qb) > kTie) return qa > qb ? 1 : -1;
  const double pa = a.log_pow.real(), pb = b.log_pow.real();
  if (std::abs(pa - pb) > kTie) return pa > pb ? 1 : -1;
  return 0;
}

std::string power_str(const std::string& base, Complex p, int digits) {
  if (p == Complex(1.0, 0.0)) return base;
  return base + "^(" + fmt_complex(p, digits) + ")";
}

}  // namespace

Complex ExpansionTerm::evaluate(Complex z) const {
  Complex base_log, log_var, exp_arg_log;
  switch (variable) {
    case Variable::LogZAtInfinity: {
      base_log = std::log(z);
      log_var = base_log;
      exp_arg_log = std::log(base_log);
      break;
    }
    case Variable::OnePlusZAtMinusOne:
    case Variable::NegLogAbsZAtMinusOne: {
      base_log = std::log(1.0 + z);
      log_var = -base_log;
      exp_arg_log = variable == Variable::OnePlusZAtMinusOne ? base_log
                                                             : std::log(Complex(-std::log(std::abs(z)), 0.0));
      break;
    }
  }
  Complex v = coeff;
  if (!is_zero(z_exp)) v *= cpow_pos(base_log, z_exp);
  if (!is_zero(log_pow)) v *= cpow_pos(std::log(log_var), log_pow);
  if (exp) v *= std::exp(exp->q * std::exp(exp->beta * exp_arg_log));
  if (osc) v *= std::cos(osc->r * std::exp(osc->beta * exp_arg_log) + osc->phase0);
  return v;
}

bool ExpansionTerm::same_shape(const ExpansionTerm& o, double tol) const {
  auto close = [tol](Complex a, Complex b) { return std::abs(a - b) <= tol * std::max(1.0, std::abs(a)); };
  if (variable != o.variable || !close(z_exp, o.z_exp) || !close(log_pow, o.log_pow)) return false;
  if (exp.has_value() != o.exp.has_value() || osc.has_value() != o.osc.has_value()) return false;
  if (exp && (!close(exp->q, o.exp->q) || std::abs(exp->beta - o.exp->beta) > tol)) return false;
  if (osc && (!close(osc->r, o.osc->r) || std::abs(osc->beta - o.osc->beta) > tol ||
              std::abs(osc->phase0 - o.osc->phase0) > tol))
    return false;
  return true;
}

Variable Expansion::variable() const {
  if (!terms.empty()) return terms.front().variable;
  if (error_order) return error_order->variable;
  return Variable::LogZAtInfinity;
}

Complex evaluate_expansion(const Expansion& e, Complex z, int n_terms) {
  const Variable var = e.variable();
  if (var == Variable::LogZAtInfinity) {
    if (!(std::abs(z) > std::exp(1.0))) raise(Errc::VariableMismatch, "expansion at infinity needs |z| > e");
  } else if (!(std::abs(1.0 + z) < 0.5)) {
    raise(Errc::VariableMismatch, "expansion at -1 needs |1 + z| < 1/2");
  }
  const std::size_t n = n_terms < 0 ? e.terms.size() : std::min<std::size_t>(n_terms, e.terms.size());
  CompensatedSum<Complex> acc;
  for (std::size_t i = 0; i < n; ++i) {
    if (e.terms[i].variable != var) raise(Errc::VariableMismatch, "expansion mixes variables");
    acc.add(e.terms[i].evaluate(z));
  }
  return acc.value();
}

bool dominates(const ExpansionTerm& a, const ExpansionTerm& b) { return compare_dominance(a, b) > 0; }

void sort_by_dominance(std::vector<ExpansionTerm>& terms) {
  std::stable_sort(terms.begin(), terms.end(),
                   [](const ExpansionTerm& a, const ExpansionTerm& b) { return compare_dominance(a, b) > 0; });
}

std::vector<ExpansionTerm> merge_terms(const std::vector<ExpansionTerm>& terms) {
  std::vector<ExpansionTerm> out;
  for (const auto& t : terms) {
    auto it = std::find_if(out.begin(), out.end(), [&](const ExpansionTerm& o) { return o.same_shape(t); });
    if (it == out.end())
      out.push_back(t);
    else
      it->coeff += t.coeff;
  }
  out.erase(std::remove_if(out.begin(), out.end(), [](const ExpansionTerm& t) { return is_zero(t.coeff); }),
            out.end());
  return out;
}

std::string render_term(const ExpansionTerm& t, int digits) {
  const bool inf = t.variable == Variable::LogZAtInfinity;
  const std::string base = inf ? "z" : "(1+z)";
  const std::string logv = inf ? "(log z)" : "log(1/(1+z))";
  const std::string arg = inf ? "(log z)" : (t.variable == Variable::OnePlusZAtMinusOne ? "(1+z)" : "v");
  std::vector<std::string> factors;
  if (!is_zero(t.z_exp)) factors.push_back(power_str(base, t.z_exp, digits));
  if (!is_zero(t.log_pow)) factors.push_back(power_str(logv, t.log_pow, digits));
  if (t.exp) factors.push_back("exp(" + fmt_complex(t.exp->q, digits) + "*" + arg + "^(" + fmt_real(t.exp->beta, digits) + "))");
  if (t.osc) {
    std::string s = "cos(" + fmt_complex(t.osc->r, digits) + "*" + arg + "^(" + fmt_real(t.osc->beta, digits) + ")";
    if (t.osc->phase0 != 0.0) s += (t.osc->phase0 < 0 ? " - " : " + ") + fmt_real(std::abs(t.osc->phase0), digits);
    factors.push_back(s + ")");
  }
  std::string body;
  for (std::size_t i = 0; i < factors.size(); ++i) body += (i ? "*" : "") + factors[i];
  if (body.empty()) return fmt_complex(t.coeff, digits);
  if (t.coeff == Complex(1.0, 0.0)) return body;
  if (t.coeff == Complex(-1.0, 0.0)) return "-" + body;
  return fmt_complex(t.coeff, digits) + "*" + body;
}

std::string render_expansion(const Expansion& e, int digits) {
  std::string out;
  for (const auto& t : e.terms) {
    std::string s = render_term(t, digits);
    if (out.empty()) {
      out = s;
    } else if (!s.empty() && s[0] == '-') {
      out += " - " + s.substr(1);
    } else {
      out += " + " + s;
    }
  }
  if (e.error_order) {
    ExpansionTerm shape = *e.error_order;
    shape.coeff = 1.0;
    const std::string s = render_term(shape, digits);
    out += (out.empty() ? "O(" : " + O(") + s + ")";
  }
  return out.empty() ? "0" : out;
}

std::string variable_name(Variable v) {
  switch (v) {
    case Variable::LogZAtInfinity: return "log_z_at_infinity";
    case Variable::OnePlusZAtMinusOne: return "one_plus_z_at_minus_one";
    case Variable::NegLogAbsZAtMinusOne: return "neg_log_abs_z_at_minus_one";
  }
  return "unknown";
}

Variable variable_from_name(const std::string& name) {
  for (Variable v : {Variable::LogZAtInfinity, Variable::OnePlusZAtMinusOne, Variable::NegLogAbsZAtMinusOne})
    if (variable_name(v) == name) return v;
  raise(Errc::InvalidArgument, "unknown expansion variable '" + name + "'");
}

}  // namespace lindelof
