#include "lindelof/continuation.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <queue>

#include <boost/math/quadrature/gauss.hpp>
#include <boost/math/quadrature/gauss_kronrod.hpp>

#include "lindelof/errors.hpp"

namespace lindelof {
namespace {

constexpr double kPi = std::numbers::pi;
constexpr double kEps = std::numeric_limits<double>::epsilon();

void check_sector(const CoefficientFunction& f, double arg_z) {
  if (!f.lindelof_guarantee)
    raise(Errc::HypothesisViolation, f.label + " does not satisfy the growth condition");
  if (!(std::abs(arg_z) < kPi - f.growth_A))
    raise(Errc::SectorViolation, "|arg z| must be below pi - A for " + f.label);
}

// log(pi / sin(pi s)), without underflow for large |Im s|.
Complex log_recip_sin_pi(Complex s) {
  const Complex i(0.0, 1.0);
  if (s.imag() > 20.0)
    return std::log(2.0 * kPi) - i * (kPi / 2) + i * kPi * s - std::log(1.0 - std::exp(2.0 * i * kPi * s));
  if (s.imag() < -20.0)
    return std::log(2.0 * kPi) + i * (kPi / 2) - i * kPi * s - std::log(1.0 - std::exp(-2.0 * i * kPi * s));
  return std::log(recip_sin_pi(s, 0.0));
}

// log |integrand| at a few abscissae on Re s = sigma.
double peak_log_magnitude(const CoefficientFunction& f, double sigma, Complex log_z) {
  double peak = -std::numeric_limits<double>::infinity();
  auto probe = [&](double t) {
    const Complex s(sigma, t);
    const double v = (f.log_evaluator(s) + s * log_z + log_recip_sin_pi(s)).real();
    if (std::isfinite(v)) peak = std::max(peak, v);
  };
  probe(0.0);
  for (double t = sigma; t < 40.0; t *= 1.5) {
    probe(t);
    probe(-t);
  }
  return peak;
}

class Integrand {
 public:
  Integrand(const CoefficientFunction& f, Complex log_z, double sigma, double log_scale)
      : f_(f), log_z_(log_z), sigma_(sigma), log_scale_(log_scale) {}

  Complex operator()(double t) const {
    ++calls;
    const Complex s(sigma_, t);
    const Complex e = f_.log_evaluator(s) + s * log_z_ + log_recip_sin_pi(s) - log_scale_;
    if (e.real() < -745.0) return 0.0;
    return std::exp(e);
  }

  mutable long calls = 0;

 private:
  const CoefficientFunction& f_;
  Complex log_z_;
  double sigma_;
  double log_scale_;
};

struct Segment {
  double a, b;
  Complex value;
  double error;
  double l1;
  bool operator<(const Segment& o) const { return error < o.error; }
};

Segment kronrod_segment(const Integrand& g, double a, double b) {
  using GK = boost::math::quadrature::gauss_kronrod<double, 15>;
  using G = boost::math::quadrature::gauss<double, 7>;
  const auto& x = GK::abscissa();
  const auto& wk = GK::weights();
  const auto& wg = G::weights();
  const double c = 0.5 * (a + b);
  const double h = 0.5 * (b - a);
  const Complex f0 = g(c);
  Complex k = wk[0] * f0;
  Complex gs = wg[0] * f0;
  double l1 = wk[0] * std::abs(f0);
  for (std::size_t i = 1; i < x.size(); ++i) {
    const Complex fp = g(c + h * x[i]);
    const Complex fm = g(c - h * x[i]);
    k += wk[i] * (fp + fm);
    l1 += wk[i] * (std::abs(fp) + std::abs(fm));
    if (i % 2 == 0) gs += wg[i / 2] * (fp + fm);
  }
  return {a, b, k * h, std::abs((k - gs) * h), l1 * std::abs(h)};
}

struct RawIntegral {
  Complex value;
  double error;
  double l1;
};

RawIntegral adaptive_integral(const Integrand& g, double sigma, double T, double freq, double tol,
                              double abs_floor, long max_segments) {
  std::vector<double> cuts{0.0};
  for (double t = sigma; t < T; t *= 2.0) cuts.push_back(t);
  cuts.push_back(T);
  // Keep initial pieces short enough to resolve the z^{it} oscillation.
  const double max_len = 3.0 / std::max(1.0, freq);
  std::vector<double> pos;
  for (std::size_t i = 0; i + 1 < cuts.size(); ++i) {
    const double a = cuts[i], b = cuts[i + 1];
    const int pieces = std::max(1, static_cast<int>(std::ceil((b - a) / max_len)));
    for (int p = 0; p < pieces; ++p) pos.push_back(a + (b - a) * p / pieces);
  }
  pos.push_back(T);

  std::priority_queue<Segment> heap;
  CompensatedSum<Complex> total;
  double err = 0.0, l1 = 0.0;
  for (std::size_t i = 0; i + 1 < pos.size(); ++i) {
    for (int side : {1, -1}) {
      Segment s = side > 0 ? kronrod_segment(g, pos[i], pos[i + 1]) : kronrod_segment(g, -pos[i + 1], -pos[i]);
      total.add(s.value);
      err += s.error;
      l1 += s.l1;
      heap.push(s);
    }
  }
  auto target = [&] { return std::max(tol * (std::abs(total.value()) + abs_floor), 50.0 * kEps * l1); };
  while (err > target()) {
    if (static_cast<long>(heap.size()) >= max_segments)
      raise(Errc::NonConvergence, "contour quadrature exceeded its segment budget");
    Segment worst = heap.top();
    heap.pop();
    const double mid = 0.5 * (worst.a + worst.b);
    Segment left = kronrod_segment(g, worst.a, mid);
    Segment right = kronrod_segment(g, mid, worst.b);
    total.add(-worst.value);
    total.add(left.value);
    total.add(right.value);
    err += left.error + right.error - worst.error;
    l1 += left.l1 + right.l1 - worst.l1;
    if (err < 0) {
      err = 0;
      std::priority_queue<Segment> copy = heap;
      while (!copy.empty()) {
        err += copy.top().error;
        copy.pop();
      }
      err += left.error + right.error;
    }
    heap.push(left);
    heap.push(right);
  }
  return {total.value(), err, l1};
}

RawIntegral richardson_integral(const Integrand& g, double T, double tol, double abs_floor) {
  long n = 256;
  auto trapezoid = [&](long m) {
    const double h = 2.0 * T / double(m);
    CompensatedSum<Complex> acc;
    acc.add(0.5 * (g(-T) + g(T)));
    for (long j = 1; j < m; ++j) acc.add(g(-T + h * double(j)));
    return acc.value() * h;
  };
  Complex prev_t = trapezoid(n);
  Complex prev_r = prev_t;
  for (int level = 0; level < 18; ++level) {
    n *= 2;
    const Complex cur_t = trapezoid(n);
    const Complex cur_r = (4.0 * cur_t - prev_t) / 3.0;
    const double diff = std::abs(cur_r - prev_r);
    if (level > 0 && diff <= tol * (std::abs(cur_r) + abs_floor)) return {cur_r, diff, 0.0};
    prev_t = cur_t;
    prev_r = cur_r;
  }
  raise(Errc::NonConvergence, "fixed-step quadrature did not converge");
}

// F = G - sum_p r_p z^p pi/sin(pi p) over the poles p of phi right of the contour.
void add_right_pole_terms(const CoefficientFunction& f, Complex log_z, double tol, ContinuationResult& out) {
  if (!f.right_pole) return;
  std::vector<Complex> logs;
  const double log_g = out.value.log_scale + std::log(std::abs(out.value.mantissa) + out.error_estimate);
  double peak = log_g;
  double prev_pair = std::numeric_limits<double>::infinity();
  int falling = 0;
  for (std::size_t k = 0;; k += 2) {
    double pair = -std::numeric_limits<double>::infinity();
    for (std::size_t j = k; j < k + 2; ++j) {
      const auto pole = f.right_pole(j);
      if (!pole) return;
      const Complex lt = std::log(pole->residue) + pole->location * log_z + log_recip_sin_pi(pole->location);
      logs.push_back(lt);
      pair = std::max(pair, lt.real());
    }
    peak = std::max(peak, pair);
    falling = pair < prev_pair ? falling + 1 : 0;
    prev_pair = pair;
    if (falling >= 4 && pair < peak + std::log(1e-3 * tol)) break;
  }
  const double scale = peak;
  CompensatedSum<Complex> acc;
  double err = 0.0;
  acc.add(out.value.mantissa * std::exp(out.value.log_scale - scale));
  for (Complex lt : logs) {
    const Complex term = std::exp(lt - scale);
    acc.add(-term);
    err += 1e-15 * (1.0 + std::abs(lt)) * std::abs(term);
  }
  out.error_estimate = out.error_estimate * std::exp(out.value.log_scale - scale) + err;
  out.value = {acc.value(), scale};
  if (out.error_estimate > 1e4 * tol * std::abs(out.value.mantissa))
    raise(Errc::PrecisionCap, "residues of poles right of the contour cancel beyond binary64 precision");
}

}  // namespace

void QuadratureConfig::validate() const {
  ctx.validate();
  if (!(max_height > 0.0)) raise(Errc::InvalidArgument, "max_height must be positive");
  if (shift && !(*shift > 0.0 && *shift < 1.0)) raise(Errc::InvalidArgument, "contour shift must lie in (0, 1)");
  if (max_segments < 16) raise(Errc::InvalidArgument, "max_segments too small");
}

double ContinuationResult::relative_error() const {
  const double m = std::abs(value.mantissa);
  return m > 0 ? error_estimate / m : std::numeric_limits<double>::infinity();
}

double truncation_height(const CoefficientFunction& f, double arg_z, const PrecisionContext& ctx,
                         double max_height) {
  ctx.validate();
  check_sector(f, arg_z);
  const double gap = kPi - f.growth_A - std::abs(arg_z);
  if (gap < 1e-3) raise(Errc::CapExceeded, "sector gap too small for a finite truncation height");
  const double T = std::log(std::max(f.growth_C, 1.0) * 100.0 / ctx.tol) / gap;
  if (T > max_height) raise(Errc::CapExceeded, "truncation height exceeds max_height");
  return std::max(T, 1.0);
}

double auto_shift(const CoefficientFunction& f, Complex log_z) {
  const double lo = std::max(1e-7, f.analytic_halfplane + 1e-7);
  const double base = peak_log_magnitude(f, 0.5, log_z);
  double best = base, best_sigma = 0.5;
  const int steps = 80;
  for (int i = 1; i <= steps; ++i) {
    const double sigma = 0.5 * std::pow(lo / 0.5, double(i) / steps);
    if (sigma <= f.analytic_halfplane) break;
    const double p = peak_log_magnitude(f, sigma, log_z);
    if (p < best) {
      best = p;
      best_sigma = sigma;
    }
  }
  return base <= best + 2.0 ? 0.5 : best_sigma;
}

ContinuationResult continue_gf_log(const CoefficientFunction& f, Complex log_z, const QuadratureConfig& cfg) {
  cfg.validate();
  const double arg_z = log_z.imag();
  check_sector(f, arg_z);
  const double sigma = cfg.shift ? *cfg.shift : auto_shift(f, log_z);
  if (sigma <= f.analytic_halfplane)
    raise(Errc::HypothesisViolation, "contour abscissa must lie right of the analytic half-plane");
  double T = truncation_height(f, arg_z, cfg.ctx, cfg.max_height);
  const double M = peak_log_magnitude(f, sigma, log_z);
  const double abs_floor = M < 700.0 ? std::exp(-M) : 0.0;
  const double decay = std::max(kPi - f.growth_A - std::abs(arg_z), 0.1);
  const double freq = std::abs(log_z.real());

  Integrand g(f, log_z, sigma, M);
  for (;;) {
    RawIntegral raw = cfg.rule == QuadratureRule::AdaptiveSegment
                          ? adaptive_integral(g, sigma, T, freq, cfg.ctx.tol, abs_floor, cfg.max_segments)
                          : richardson_integral(g, T, cfg.ctx.tol, abs_floor);
    const double tail = (std::abs(g(T)) + std::abs(g(-T))) / decay;
    const double scale = std::max(std::abs(raw.value) + abs_floor, 1e-8 * raw.l1);
    if (tail <= 0.01 * cfg.ctx.tol * scale) {
      ContinuationResult out;
      out.value = {-raw.value / (2.0 * kPi), M};
      out.error_estimate = (raw.error + tail) / (2.0 * kPi);
      out.shift = sigma;
      out.height = T;
      out.evaluations = g.calls;
      add_right_pole_terms(f, log_z, cfg.ctx.tol, out);
      return out;
    }
    if (T >= cfg.max_height) raise(Errc::CapExceeded, "integrand tail not negligible at max_height");
    T = std::min(T * 1.5, cfg.max_height);
  }
}

ContinuationResult continue_gf(const CoefficientFunction& f, Complex z, const QuadratureConfig& cfg) {
  if (z == Complex(0.0, 0.0)) raise(Errc::Domain, "continuation needs z != 0");
  if (!std::isfinite(z.real()) || !std::isfinite(z.imag())) raise(Errc::InvalidArgument, "z must be finite");
  return continue_gf_log(f, std::log(z), cfg);
}

DirectSumResult direct_sum(const CoefficientFunction& f, Complex z, const PrecisionContext& ctx, long term_cap) {
  ctx.validate();
  const double r = std::abs(z);
  if (!(r < 1.0)) raise(Errc::Divergence, "direct summation needs |z| < 1");
  if (term_cap < 1) raise(Errc::InvalidArgument, "term cap must be positive");
  DirectSumResult out;
  if (r == 0.0) return out;

  if (ctx.bits > 53) {
    ScopedPrecision guard(ctx.bits);
    const MpComplex mz(Mp(-z.real()), Mp(-z.imag()));
    MpComplex power(Mp(1), Mp(0));
    MpComplex sum(Mp(0), Mp(0));
    double prev = 0.0;
    for (long n = 1; n <= term_cap; ++n) {
      power *= mz;
      const MpComplex term = power * f.sequence_mp(n);
      sum += term;
      const double mag = static_cast<double>(abs(term));
      const double q = std::max(prev > 0 ? mag / prev : 1.0, r);
      prev = mag;
      const double tail = q < 1.0 ? mag * q / (1.0 - q) : std::numeric_limits<double>::infinity();
      const double total = static_cast<double>(abs(sum));
      if (n >= 2 && (tail <= 0.1 * ctx.tol * total || tail == 0.0)) {
        out.value = {to_complex(sum), 0.0};
        out.terms = n;
        out.tail_bound = total > 0 ? tail / total : 0.0;
        return out;
      }
    }
    raise(Errc::SlowConvergence, "direct summation needs more terms than the cap");
  }

  // Terms exp(log phi(n) + n log(-z)), accumulated relative to the running maximum.
  const bool real_z = z.imag() == 0.0;
  const Complex log_mz = real_z ? Complex(std::log(r), 0.0) : std::log(-z);
  const double sign_step = real_z && z.real() > 0 ? -1.0 : 1.0;
  CompensatedSum<Complex> acc;
  double M = -std::numeric_limits<double>::infinity();
  double prev_log = std::numeric_limits<double>::quiet_NaN();
  double sign = 1.0;
  for (long n = 1; n <= term_cap; ++n) {
    sign *= sign_step;
    const Complex lt = f.log_evaluator(Complex(double(n), 0.0)) + double(n) * log_mz;
    if (!std::isfinite(lt.real())) {
      if (lt.real() < 0) continue;
      raise(Errc::Overflow, "non-finite term in direct summation");
    }
    if (lt.real() > M) {
      if (std::isfinite(M)) acc.scale(std::exp(M - lt.real()));
      M = lt.real();
    }
    const Complex term = sign * std::exp(lt - M);
    acc.add(term);
    const double q = std::max(std::isnan(prev_log) ? 1.0 : std::exp(lt.real() - prev_log), r);
    prev_log = lt.real();
    if (n >= 2 && q < 1.0) {
      const double tail = std::abs(term) * q / (1.0 - q);
      const double total = std::abs(acc.value());
      if (tail <= 0.1 * ctx.tol * total || tail < 1e-300) {
        out.value = {acc.value(), M};
        out.terms = n;
        out.tail_bound = total > 0 ? tail / total : 0.0;
        return out;
      }
    }
  }
  raise(Errc::SlowConvergence, "direct summation needs more terms than the cap");
}

}  // namespace lindelof
