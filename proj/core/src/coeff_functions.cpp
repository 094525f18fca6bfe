#include "lindelof/coeff_functions.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <mutex>
#include <numbers>
#include <sstream>

#include <boost/math/special_functions/gamma.hpp>

#include "lindelof/errors.hpp"

namespace lindelof {
namespace {

constexpr double kPi = std::numbers::pi;
constexpr double kSqrt2 = std::numbers::sqrt2;
constexpr int kCatalogRoots = 40;

bool near_nonpositive_integer(Complex s, double tol = 0.0) {
  if (std::abs(s.imag()) > tol || s.real() > tol) return false;
  return std::abs(s.real() - std::round(s.real())) <= tol;
}

double newton_gamma_root(double s) {
  for (int it = 0; it < 100; ++it) {
    const double g = gamma(Complex(s, 0.0)).real();
    const double dg = g * digamma(Complex(s, 0.0)).real();
    const double step = (g + 1.0) / dg;
    s -= step;
    if (std::abs(step) < 1e-15 * std::max(1.0, std::abs(s))) return s;
  }
  raise(Errc::NonConvergence, "Newton iteration for Gamma(s) = -1 did not converge");
}

// Root of Gamma(-k + delta) = -1 near delta ~ (-1)^{k-1}/k!, solved in u = log|delta| on
// log|sin(pi delta)| + log Gamma(k + 1 - delta) - log pi = 0.
double gamma_root_near_integer(int k) {
  const double sigma = (k % 2 == 0) ? -1.0 : 1.0;
  long double u = -std::lgamma(static_cast<long double>(k) + 1.0L);
  for (int it = 0; it < 100; ++it) {
    const long double delta = sigma * std::exp(u);
    const long double ad = std::exp(u);
    const long double h = std::log(std::sin(kPi * ad)) +
                          std::lgamma(static_cast<long double>(k) + 1.0L - delta) -
                          std::log(static_cast<long double>(kPi));
    const long double psi = digamma(Complex(double(k + 1 - delta), 0.0)).real();
    const long double dh = ad * (kPi / std::tan(kPi * ad) - sigma * psi);
    const long double step = h / dh;
    u -= step;
    if (std::abs(step) < 1e-17L) return static_cast<double>(-static_cast<long double>(k) + sigma * std::exp(u));
  }
  raise(Errc::NonConvergence, "Newton iteration for Gamma(s) = -1 did not converge");
}

const std::vector<double>& cached_shifted_roots() {
  static const std::vector<double> roots = gamma_plus_one_eq_minus_one_roots(kCatalogRoots);
  return roots;
}

// log Gamma(w) on the branch continuous in Im w > 0, Re w > 0.
Complex log_gamma_upper(Complex w) {
  Complex acc = 0.0;
  while (std::abs(w) < 17.0) {
    acc -= std::log(w);
    w += 1.0;
  }
  return acc + log_gamma(w);
}

// Solves log Gamma(s+1) = i pi (2m+1) on that branch.
Complex newton_right_root(Complex s, long m) {
  const Complex target(0.0, kPi * double(2 * m + 1));
  for (int it = 0; it < 60; ++it) {
    const Complex step = (log_gamma_upper(s + 1.0) - target) / digamma(s + 1.0);
    s -= step;
    if (std::abs(step) < 1e-15 * std::abs(s)) return s;
  }
  raise(Errc::NonConvergence, "Newton iteration for Gamma(s+1) = -1 did not converge");
}

// i-th upper right root, from a cache grown on demand.
Complex right_root_at(std::size_t i) {
  if (i >= kMaxRightRoots) raise(Errc::CapExceeded, "too many roots of Gamma(s+1) = -1 requested");
  static std::mutex mutex;
  static std::vector<Complex> roots;
  std::lock_guard lock(mutex);
  while (roots.size() <= i) {
    const std::size_t n = roots.size();
    const Complex seed = n == 0 ? Complex(2.39, 2.66) : n == 1 ? Complex(3.87, 5.64) : 2.0 * roots[n - 1] - roots[n - 2];
    const Complex s = newton_right_root(seed, static_cast<long>(n));
    if (!(s.real() > 0.0) || (n > 0 && !(s.imag() > roots[n - 1].imag())))
      raise(Errc::NonConvergence, "root sequence of Gamma(s+1) = -1 lost its ordering");
    roots.push_back(s);
  }
  return roots[i];
}

std::optional<SimplePole> recip_gamma_right_pole(std::size_t k) {
  const Complex root = right_root_at(k / 2);
  const Complex s = k % 2 == 0 ? root : std::conj(root);
  return SimplePole{s, -1.0 / digamma(s + 1.0)};
}

CoefficientFunction make_exp_power(double c, double theta) {
  if (!std::isfinite(c) || !std::isfinite(theta))
    raise(Errc::UnsupportedParameter, "ExpPower parameters must be finite");
  if (theta > 1.0) raise(Errc::UnsupportedParameter, "ExpPower with theta > 1 has no Lindelof representation");
  CoefficientFunction f;
  f.kind = BuiltinKind::ExpPower;
  f.params = {c, theta};
  std::ostringstream os;
  os << "exp(" << c << "*s^" << theta << ")";
  f.label = os.str();
  f.log_evaluator = [c, theta](Complex s) { return c * std::pow(s, theta); };
  f.evaluator = [c, theta](Complex s) { return std::exp(c * std::pow(s, theta)); };
  f.sequence_mp = [c, theta](long n) {
    if (n == 0) return theta > 0 ? Mp(1) : (theta == 0 ? exp(Mp(c)) : Mp(0));
    return exp(Mp(c) * pow(Mp(n), Mp(theta)));
  };
  const double ac = std::abs(c);
  if (theta < 0.0) {
    f.growth_A = 0.01;
    f.growth_C = std::exp(ac * std::pow(2.0, -theta));
    f.catalog.push_back(EssentialSingularity{Complex(0.0, 0.0), "essential singularity of exp(c s^theta)", false});
  } else if (theta == 0.0) {
    f.growth_C = std::exp(c);
  } else if (theta < 1.0) {
    f.growth_A = 0.25;
    const double r = std::pow(ac * theta / f.growth_A, 1.0 / (1.0 - theta));
    f.growth_C = std::exp(ac * (1.0 - theta) * std::pow(r, theta)) * 1.01;
    AlgebraicSingularity alg;
    alg.location = 0.0;
    alg.lambda = 0.0;
    alg.theta = theta;
    alg.cut_angle = kPi / 4;
    double coef = 1.0;
    for (int k = 0; k < 64; ++k) {
      if (k > 0) coef *= c / k;
      alg.psi_coeffs.emplace_back(coef, 0.0);
    }
    f.catalog.push_back(alg);
  } else {
    f.growth_A = ac + 0.01;
    f.growth_C = 1.0;
  }
  return f;
}

CoefficientFunction make_power_law(double lambda) {
  CoefficientFunction f;
  f.kind = BuiltinKind::PowerLaw;
  f.params = {lambda};
  std::ostringstream os;
  os << "s^(" << -lambda << ")";
  f.label = os.str();
  f.evaluator = [lambda](Complex s) { return std::exp(-lambda * std::log(s)); };
  f.log_evaluator = [lambda](Complex s) { return -lambda * std::log(s); };
  f.sequence_mp = [lambda](long n) { return pow(Mp(n), Mp(-lambda)); };
  f.growth_A = 0.01;
  if (lambda >= 0.0) {
    f.growth_C = std::pow(2.0, lambda);
  } else {
    const double m = -lambda;
    f.growth_C = std::max(1.0, std::pow(m / (f.growth_A * std::numbers::e), m));
  }
  const bool integer = lambda == std::round(lambda);
  if (integer && lambda > 0) {
    f.catalog.push_back(PoleSingularity{Complex(0.0, 0.0), static_cast<int>(lambda)});
  } else if (!integer) {
    AlgebraicSingularity alg;
    alg.location = 0.0;
    alg.lambda = lambda;
    alg.theta = 1.0;
    alg.psi_coeffs = {Complex(1.0, 0.0)};
    alg.psi_exact_polynomial = true;
    alg.cut_angle = kPi / 4;
    f.catalog.push_back(alg);
  }
  return f;
}

}  // namespace

Complex singularity_location(const Singularity& s) {
  return std::visit(
      [](const auto& v) -> Complex {
        using T = std::decay_t<decltype(v)>;
        if constexpr (std::is_same_v<T, PoleLattice>)
          return v.base;
        else
          return v.location;
      },
      s);
}

std::vector<double> gamma_eq_minus_one_roots(int count, const PrecisionContext& ctx) {
  ctx.validate();
  if (count < 1) raise(Errc::InvalidArgument, "root count must be at least 1");
  std::vector<double> roots;
  // Two roots share (-3, -2); bracket them by a scan, then polish.
  double prev_s = -2.999;
  double prev_v = gamma(Complex(prev_s, 0.0)).real() + 1.0;
  for (int i = 1; i <= 998 && roots.size() < 2; ++i) {
    const double s = -2.999 + 1e-3 * i;
    const double v = gamma(Complex(s, 0.0)).real() + 1.0;
    if ((prev_v < 0) != (v < 0)) roots.push_back(newton_gamma_root(0.5 * (prev_s + s)));
    prev_s = s;
    prev_v = v;
  }
  if (roots.size() != 2) raise(Errc::NonConvergence, "scan on (-3, -2) did not bracket two roots");
  std::sort(roots.rbegin(), roots.rend());
  for (int k = 4; static_cast<int>(roots.size()) < count; ++k) roots.push_back(gamma_root_near_integer(k));
  roots.resize(static_cast<std::size_t>(count));
  return roots;
}

std::vector<double> gamma_plus_one_eq_minus_one_roots(int count, const PrecisionContext& ctx) {
  auto roots = gamma_eq_minus_one_roots(count, ctx);
  for (double& r : roots) r -= 1.0;
  return roots;
}

CoefficientFunction make_builtin(BuiltinKind kind, const std::vector<double>& params) {
  auto need = [&](std::size_t n) {
    if (params.size() != n)
      raise(Errc::InvalidArgument, builtin_name(kind) + " expects " + std::to_string(n) + " parameter(s)");
  };
  CoefficientFunction f;
  f.kind = kind;
  switch (kind) {
    case BuiltinKind::ExpPower:
      need(2);
      return make_exp_power(params[0], params[1]);
    case BuiltinKind::PowerLaw:
      need(1);
      return make_power_law(params[0]);
    case BuiltinKind::Constant: {
      need(1);
      const double a = params[0];
      f.params = params;
      f.label = std::to_string(a);
      f.evaluator = [a](Complex) { return Complex(a, 0.0); };
      f.sequence_mp = [a](long) { return Mp(a); };
      f.growth_A = 0.01;
      f.growth_C = std::max(std::abs(a), 1e-300);
      break;
    }
    case BuiltinKind::Identity:
      need(0);
      f.label = "s";
      f.evaluator = [](Complex s) { return s; };
      f.sequence_mp = [](long n) { return Mp(n); };
      f.growth_A = 0.01;
      f.growth_C = 1.0 / (0.01 * std::numbers::e);
      break;
    case BuiltinKind::RecipGammaPlusOne: {
      need(0);
      f.label = "1/(1+Gamma(s+1))";
      f.evaluator = [](Complex s) {
        if (near_nonpositive_integer(s + 1.0)) return Complex(0.0, 0.0);
        const Complex g = gamma(s + 1.0);
        if (!std::isfinite(g.real())) return Complex(0.0, 0.0);
        return 1.0 / (1.0 + g);
      };
      f.sequence_mp = [](long n) { return 1 / (1 + boost::math::tgamma(Mp(n + 1))); };
      f.growth_A = 0.01;
      f.growth_C = 1.0;
      const auto& roots = cached_shifted_roots();
      const Complex left = gamma_plus_one_eq_minus_one_left_root();
      f.catalog.push_back(PoleSingularity{left, 1});
      f.catalog.push_back(PoleSingularity{std::conj(left), 1});
      for (double r : roots) f.catalog.push_back(PoleSingularity{Complex(r, 0.0), 1});
      f.catalog_complete_above = roots.back() - 0.5;
      f.right_pole = recip_gamma_right_pole;
      break;
    }
    case BuiltinKind::RecipTwoPow:
      need(0);
      f.label = "1/(2^s-1)";
      f.evaluator = [](Complex s) { return 1.0 / (std::exp(s * std::numbers::ln2) - 1.0); };
      f.sequence_mp = [](long n) { return 1 / (pow(Mp(2), Mp(n)) - 1); };
      f.growth_A = 0.01;
      f.growth_C = 1.0 / (std::numbers::sqrt2 - 1.0);
      f.catalog.push_back(PoleLattice{Complex(0.0, 0.0), Complex(0.0, 2.0 * kPi / std::numbers::ln2),
                                      std::nullopt, true, Rationality::Unknown, 1});
      f.catalog_complete_above = -std::numeric_limits<double>::infinity();
      break;
    case BuiltinKind::GammaRatioNormalized:
      need(0);
      f.label = "Gamma(s*sqrt2)/Gamma(s)^2";
      f.evaluator = [](Complex s) {
        if (near_nonpositive_integer(s)) return Complex(0.0, 0.0);
        const Complex r = rgamma(s);
        return gamma(s * kSqrt2) * r * r;
      };
      f.log_evaluator = [](Complex s) { return log_gamma(s * kSqrt2) - 2.0 * log_gamma(s); };
      f.sequence_mp = [](long n) {
        const Mp g = boost::math::tgamma(Mp(n));
        return boost::math::tgamma(Mp(n) * sqrt(Mp(2))) / (g * g);
      };
      f.growth_A = kPi * (1.0 - 1.0 / kSqrt2) + 0.01;
      f.growth_C = 3.0;
      f.catalog.push_back(PoleLattice{Complex(-1.0 / kSqrt2, 0.0), Complex(-1.0 / kSqrt2, 0.0),
                                      std::nullopt, false, Rationality::Irrational, 1});
      break;
    case BuiltinKind::GammaSqrt2:
      need(0);
      f.label = "Gamma(s*sqrt2)";
      f.evaluator = [](Complex s) { return gamma(s * kSqrt2); };
      f.log_evaluator = [](Complex s) { return log_gamma(s * kSqrt2); };
      f.sequence_mp = [](long n) { return boost::math::tgamma(Mp(n) * sqrt(Mp(2))); };
      f.lindelof_guarantee = false;
      f.growth_A = std::numeric_limits<double>::infinity();
      f.growth_C = std::numeric_limits<double>::infinity();
      f.catalog.push_back(PoleLattice{Complex(0.0, 0.0), Complex(-1.0 / kSqrt2, 0.0), std::nullopt,
                                      false, Rationality::Irrational, 1});
      break;
    case BuiltinKind::RecipZetaShift:
      need(0);
      f.label = "1/zeta(s+2)";
      f.evaluator = [](Complex s) {
        if (s == Complex(-1.0, 0.0)) return Complex(0.0, 0.0);
        return 1.0 / zeta(s + 2.0);
      };
      f.sequence_mp = [](long n) { return Mp(1.0 / zeta_int(static_cast<int>(std::min(n + 2, 400L)))); };
      f.growth_A = 0.01;
      f.growth_C = 1.3;
      f.catalog.push_back(EssentialSingularity{Complex(-1.5, 0.0), "nontrivial zeta zeros", true});
      f.catalog.push_back(PoleLattice{Complex(-4.0, 0.0), Complex(-2.0, 0.0), std::nullopt, false,
                                      Rationality::Rational, 1});
      break;
  }
  if (!f.log_evaluator) {
    auto ev = f.evaluator;
    f.log_evaluator = [ev](Complex s) { return std::log(ev(s)); };
  }
  return f;
}

Complex evaluate(const CoefficientFunction& f, Complex s, const PrecisionContext& ctx) {
  ctx.validate();
  constexpr double kHit = 1e-12;
  for (const auto& sing : f.catalog) {
    if (const auto* p = std::get_if<PoleSingularity>(&sing)) {
      if (std::abs(s - p->location) < kHit) raise(Errc::SingularityHit, "evaluation at a cataloged pole");
    } else if (const auto* l = std::get_if<PoleLattice>(&sing)) {
      const Complex d = (s - l->base) / l->step;
      const double m = std::round(d.real());
      const bool in_range = l->two_sided || (m >= 0 && (!l->count || m < double(*l->count)));
      if (in_range && std::abs(s - (l->base + m * l->step)) < kHit)
        raise(Errc::SingularityHit, "evaluation at a lattice pole");
    } else if (const auto* e = std::get_if<EssentialSingularity>(&sing)) {
      if (std::abs(s - e->location) < kHit && !e->infinitely_many_imaginary_parts)
        raise(Errc::SingularityHit, "evaluation at an essential singularity");
    } else if (const auto* a = std::get_if<AlgebraicSingularity>(&sing)) {
      if (std::abs(s - a->location) < kHit && a->lambda.real() > 0)
        raise(Errc::SingularityHit, "evaluation at an algebraic singularity");
    }
  }
  try {
    return f.evaluator(s);
  } catch (const Error& e) {
    if (e.code() == Errc::Pole) raise(Errc::SingularityHit, e.what());
    throw;
  }
}

std::vector<Complex> gamma_plus_one_eq_minus_one_right_roots(std::size_t count) {
  std::vector<Complex> out;
  out.reserve(count);
  for (std::size_t i = 0; i < count; ++i) out.push_back(right_root_at(i));
  return out;
}

Complex gamma_plus_one_eq_minus_one_left_root() {
  static const Complex root = [] {
    Complex w(-0.526, 0.683);
    for (int it = 0; it < 60; ++it) {
      const Complex g = gamma(w);
      const Complex step = (g + 1.0) / (g * digamma(w));
      w -= step;
      if (std::abs(step) < 1e-16) break;
    }
    return w - 1.0;
  }();
  return root;
}

std::string builtin_name(BuiltinKind kind) {
  switch (kind) {
    case BuiltinKind::ExpPower: return "exp";
    case BuiltinKind::RecipGammaPlusOne: return "recipgamma";
    case BuiltinKind::RecipTwoPow: return "reciptwopow";
    case BuiltinKind::GammaRatioNormalized: return "gammaratio";
    case BuiltinKind::GammaSqrt2: return "gammasqrt2";
    case BuiltinKind::RecipZetaShift: return "recipzeta";
    case BuiltinKind::PowerLaw: return "power";
    case BuiltinKind::Constant: return "const";
    case BuiltinKind::Identity: return "identity";
  }
  return "unknown";
}

BuiltinKind builtin_from_name(const std::string& name) {
  for (BuiltinKind k : {BuiltinKind::ExpPower, BuiltinKind::RecipGammaPlusOne, BuiltinKind::RecipTwoPow,
                        BuiltinKind::GammaRatioNormalized, BuiltinKind::GammaSqrt2,
                        BuiltinKind::RecipZetaShift, BuiltinKind::PowerLaw, BuiltinKind::Constant,
                        BuiltinKind::Identity})
    if (builtin_name(k) == name) return k;
  raise(Errc::InvalidArgument, "unknown coefficient function '" + name + "'");
}

CoefficientFunction parse_builtin_spec(const std::string& spec) {
  const auto colon = spec.find(':');
  std::string name = spec.substr(0, colon);
  std::transform(name.begin(), name.end(), name.begin(), [](unsigned char ch) { return std::tolower(ch); });
  std::vector<double> params;
  if (colon != std::string::npos) {
    std::stringstream ss(spec.substr(colon + 1));
    std::string item;
    while (std::getline(ss, item, ',')) {
      try {
        std::size_t used = 0;
        params.push_back(std::stod(item, &used));
        if (used != item.size()) throw std::invalid_argument(item);
      } catch (const std::exception&) {
        raise(Errc::InvalidArgument, "bad parameter '" + item + "' in '" + spec + "'");
      }
    }
  }
  return make_builtin(builtin_from_name(name), params);
}

}  // namespace lindelof
