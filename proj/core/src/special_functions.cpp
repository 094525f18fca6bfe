#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <vector>

#include <boost/math/constants/constants.hpp>
#include <boost/math/special_functions/bernoulli.hpp>

#include "lindelof/errors.hpp"
#include "lindelof/numerics.hpp"

namespace lindelof {
namespace {

using LReal = long double;
using LComplex = std::complex<LReal>;

constexpr LReal kPiL = 3.141592653589793238462643383279502884L;
constexpr LReal kHalfLog2PiL = 0.918938533204672741780329736405617640L;

// B_{2k} / (2k (2k-1)) for the Stirling series, k = 1..
const std::vector<LReal>& stirling_coeffs_ld() {
  static const std::vector<LReal> coeffs = [] {
    std::vector<LReal> c;
    for (int k = 1; k <= 14; ++k)
      c.push_back(boost::math::bernoulli_b2n<LReal>(k) / (LReal(2 * k) * LReal(2 * k - 1)));
    return c;
  }();
  return coeffs;
}

// B_{2k} / (2k) for the digamma asymptotic series.
const std::vector<LReal>& digamma_coeffs_ld() {
  static const std::vector<LReal> coeffs = [] {
    std::vector<LReal> c;
    for (int k = 1; k <= 14; ++k) c.push_back(boost::math::bernoulli_b2n<LReal>(k) / LReal(2 * k));
    return c;
  }();
  return coeffs;
}

bool is_nonpositive_integer(Complex s) {
  return s.imag() == 0.0 && s.real() <= 0.0 && s.real() == std::round(s.real());
}

// sin(pi s) with the real part reduced to [-1/2, 1/2] first.
template <class C>
C sin_pi_reduced(const C& s, const typename C::value_type& pi) {
  using R = typename C::value_type;
  R n = round(s.real());
  C f(s.real() - n, s.imag());
  C v = std::sin(f * pi);
  if (fmod(abs(n), R(2)) != 0) v = -v;
  return v;
}

template <class C>
C cos_pi_reduced(const C& s, const typename C::value_type& pi) {
  using R = typename C::value_type;
  R n = round(s.real());
  C f(s.real() - n, s.imag());
  C v = std::cos(f * pi);
  if (fmod(abs(n), R(2)) != 0) v = -v;
  return v;
}

LComplex stirling_ld(LComplex w) {
  const auto& c = stirling_coeffs_ld();
  LComplex inv = LReal(1) / w;
  LComplex inv2 = inv * inv;
  LComplex p = inv;
  LComplex sum = 0;
  for (LReal ck : c) {
    LComplex term = ck * p;
    sum += term;
    if (std::abs(term) < 1e-21L * std::abs(sum)) break;
    p *= inv2;
  }
  return (w - LReal(0.5)) * std::log(w) - w + kHalfLog2PiL + sum;
}

LComplex log_gamma_ld(LComplex s) {
  if (s.real() < 0.5L) {
    return std::log(kPiL) - std::log(sin_pi_reduced(s, kPiL)) - log_gamma_ld(LReal(1) - s);
  }
  constexpr LReal kMinModulus = 17.0L;
  if (std::abs(s) >= kMinModulus) return stirling_ld(s);
  int shift = static_cast<int>(std::ceil(kMinModulus - s.real()));
  LComplex prod = 1;
  LComplex w = s;
  for (int j = 0; j < shift; ++j) {
    prod *= w;
    w += LReal(1);
  }
  return stirling_ld(w) - std::log(prod);
}

LComplex digamma_ld(LComplex s) {
  if (s.real() < 0.5L) {
    LComplex cot = cos_pi_reduced(s, kPiL) / sin_pi_reduced(s, kPiL);
    return digamma_ld(LReal(1) - s) - kPiL * cot;
  }
  LComplex acc = 0;
  LComplex w = s;
  while (std::abs(w) < 17.0L) {
    acc -= LReal(1) / w;
    w += LReal(1);
  }
  const auto& c = digamma_coeffs_ld();
  LComplex inv2 = LReal(1) / (w * w);
  LComplex p = inv2;
  LComplex sum = std::log(w) - LReal(0.5) / w;
  for (LReal ck : c) {
    LComplex term = ck * p;
    sum -= term;
    if (std::abs(term) < 1e-21L * std::abs(sum)) break;
    p *= inv2;
  }
  return sum + acc;
}

MpComplex log_gamma_mp_impl(const MpComplex& s, int bits) {
  const Mp pi = boost::math::constants::pi<Mp>();
  if (s.real() < Mp(0.5)) {
    MpComplex one(Mp(1), Mp(0));
    return MpComplex(log(pi), Mp(0)) - std::log(sin_pi_reduced(s, pi)) -
           log_gamma_mp_impl(one - s, bits);
  }
  const Mp min_modulus = Mp(0.15 * bits + 10.0);
  MpComplex w = s;
  MpComplex prod(Mp(1), Mp(0));
  if (std::abs(w) < min_modulus) {
    while (w.real() < min_modulus) {
      prod *= w;
      w += Mp(1);
    }
  }
  const Mp eps = ldexp(Mp(1), -bits - 8);
  MpComplex inv = MpComplex(Mp(1), Mp(0)) / w;
  MpComplex inv2 = inv * inv;
  MpComplex p = inv;
  MpComplex sum(Mp(0), Mp(0));
  const int max_terms = static_cast<int>(4 * bits) + 20;
  for (int k = 1; k <= max_terms; ++k) {
    Mp ck = boost::math::bernoulli_b2n<Mp>(k) / (Mp(2 * k) * Mp(2 * k - 1));
    MpComplex term = p * ck;
    sum += term;
    if (std::abs(term) < eps * (std::abs(sum) + Mp(1))) break;
    p *= inv2;
  }
  const Mp half_log_2pi = log(Mp(2) * pi) / 2;
  MpComplex lg = (w - Mp(0.5)) * std::log(w) - w + half_log_2pi + sum;
  return lg - std::log(prod);
}

// zeta(s) by Euler-Maclaurin summation with cutoff N and at most m correction terms.
template <class C>
C zeta_em(C s, int N, int m, const std::vector<typename C::value_type>& b2n_over_fact,
          typename C::value_type eps) {
  using R = typename C::value_type;
  C sum(R(0), R(0));
  for (int n = N - 1; n >= 1; --n) sum += std::exp(-s * log(R(n)));
  const R logN = log(R(N));
  C n_pow = std::exp(-s * logN);  // N^{-s}
  sum += n_pow * R(N) / (s - R(1)) + n_pow / R(2);
  C poch = s;                       // s (s+1) ... (s+2j-2)
  C n_pow_j = n_pow / R(N);         // N^{-s-2j+1}
  for (int j = 1; j <= m && j <= static_cast<int>(b2n_over_fact.size()); ++j) {
    C term = b2n_over_fact[j - 1] * poch * n_pow_j;
    sum += term;
    if (abs(term) < eps * abs(sum)) break;
    poch *= (s + R(2 * j - 1)) * (s + R(2 * j));
    n_pow_j /= R(N) * R(N);
  }
  return sum;
}

const std::vector<LReal>& b2n_over_fact_ld() {
  static const std::vector<LReal> v = [] {
    std::vector<LReal> out;
    LReal fact = 1;
    for (int j = 1; j <= 24; ++j) {
      fact *= LReal(2 * j - 1) * LReal(2 * j);
      out.push_back(boost::math::bernoulli_b2n<LReal>(j) / fact);
    }
    return out;
  }();
  return v;
}

}  // namespace

Complex log_gamma(Complex s) {
  if (is_nonpositive_integer(s)) raise(Errc::Pole, "log_gamma at a non-positive integer");
  LComplex v = log_gamma_ld(LComplex(s.real(), s.imag()));
  return {static_cast<double>(v.real()), static_cast<double>(v.imag())};
}

Complex gamma(Complex s, const PrecisionContext& ctx) {
  ctx.validate();
  if (is_nonpositive_integer(s)) raise(Errc::Pole, "gamma at a non-positive integer");
  if (ctx.bits > 64) {
    ScopedPrecision guard(ctx.bits);
    return to_complex(gamma_mp(MpComplex(Mp(s.real()), Mp(s.imag())), ctx.bits));
  }
  LComplex lg = log_gamma_ld(LComplex(s.real(), s.imag()));
  if (lg.real() > std::log(std::numeric_limits<double>::max())) {
    constexpr double inf = std::numeric_limits<double>::infinity();
    return {inf, inf};
  }
  LComplex v = std::exp(lg);
  return {static_cast<double>(v.real()), static_cast<double>(v.imag())};
}

Complex rgamma(Complex s) {
  if (is_nonpositive_integer(s)) return {0.0, 0.0};
  LComplex v = std::exp(-log_gamma_ld(LComplex(s.real(), s.imag())));
  return {static_cast<double>(v.real()), static_cast<double>(v.imag())};
}

Complex digamma(Complex s) {
  if (is_nonpositive_integer(s)) raise(Errc::Pole, "digamma at a non-positive integer");
  LComplex v = digamma_ld(LComplex(s.real(), s.imag()));
  return {static_cast<double>(v.real()), static_cast<double>(v.imag())};
}

MpComplex gamma_mp(const MpComplex& s, int bits) {
  ScopedPrecision guard(bits + 32);
  MpComplex t(Mp(s.real()), Mp(s.imag()));
  if (t.imag() == 0 && t.real() <= 0 && t.real() == round(t.real()))
    raise(Errc::Pole, "gamma at a non-positive integer");
  return std::exp(log_gamma_mp_impl(t, bits + 32));
}

Complex recip_sin_pi(Complex s, double pole_threshold) {
  const double pi = std::numbers::pi;
  const double x = s.real() - 2.0 * std::round(s.real() / 2.0);
  const double y = s.imag();
  const double dist = std::hypot(x - std::round(x), y);
  if (dist < pole_threshold)
    raise(Errc::Pole, "pi/sin(pi s) evaluated within the pole threshold of an integer");
  const Complex r(x, y);
  const Complex i(0.0, 1.0);
  if (y > 20.0) {
    // -2 pi i e^{i pi s} / (1 - e^{2 i pi s})
    Complex e = std::exp(i * pi * r);
    return -2.0 * pi * i * e / (1.0 - e * e);
  }
  if (y < -20.0) {
    Complex e = std::exp(-i * pi * r);
    return 2.0 * pi * i * e / (1.0 - e * e);
  }
  const double n = std::round(x);
  Complex v = std::sin(pi * Complex(x - n, y));
  if (std::fmod(std::abs(n), 2.0) != 0.0) v = -v;
  return pi / v;
}

std::vector<Complex> sin_expansion_coeffs(Complex s0, int j_max, const PrecisionContext& ctx) {
  if (j_max < -1) raise(Errc::InvalidArgument, "j_max must be >= -1");
  std::vector<Complex> out(static_cast<std::size_t>(j_max + 2), Complex(0.0, 0.0));
  const double n = std::round(s0.real());
  const bool integer = s0.imag() == 0.0 && std::abs(s0.real() - n) < 1e-14 * std::max(1.0, std::abs(n));
  if (integer) {
    const double sign = std::fmod(std::abs(n), 2.0) == 0.0 ? 1.0 : -1.0;
    out[0] = sign;
    for (int j = 1; j <= j_max; j += 2) {
      const int k = (j + 1) / 2;
      out[static_cast<std::size_t>(j + 1)] = sign * (2.0 - std::ldexp(1.0, 2 - 2 * k)) * zeta_int(2 * k);
    }
    return out;
  }
  if (j_max < 0) return out;
  const double radius = 0.5 * std::min(std::hypot(s0.real() - n, s0.imag()), 1.0);
  auto f = [](Complex s) { return recip_sin_pi(s, 0.0); };
  auto coeffs = taylor_coeffs_numeric(f, s0, radius, j_max + 1, ctx);
  std::copy(coeffs.begin(), coeffs.end(), out.begin() + 1);
  return out;
}

double zeta_int(int k) {
  if (k < 2) raise(Errc::Domain, "zeta_int requires k >= 2");
  if (k > 200) return 1.0 + std::ldexp(1.0, -k);
  LComplex v = zeta_em(LComplex(LReal(k), 0), 16, 24, b2n_over_fact_ld(), 1e-22L);
  return static_cast<double>(v.real());
}

Mp zeta_int_mp(int k, int bits) {
  if (k < 2) raise(Errc::Domain, "zeta_int requires k >= 2");
  ScopedPrecision guard(bits + 32);
  const int N = bits / 3 + 16;
  const int m = N;
  std::vector<Mp> b2n;
  Mp fact = 1;
  for (int j = 1; j <= m; ++j) {
    fact *= Mp(2 * j - 1) * Mp(2 * j);
    b2n.push_back(boost::math::bernoulli_b2n<Mp>(j) / fact);
  }
  MpComplex v = zeta_em(MpComplex(Mp(k), Mp(0)), N, m, b2n, ldexp(Mp(1), -bits - 16));
  return v.real();
}

double zeta_nonpositive_int(int m) {
  if (m < 0) raise(Errc::Domain, "zeta_nonpositive_int requires m >= 0");
  if (m == 0) return -0.5;
  if (m % 2 == 0) return 0.0;
  return -boost::math::bernoulli_b2n<double>((m + 1) / 2) / double(m + 1);
}

Complex zeta(Complex w) {
  if (w == Complex(1.0, 0.0)) raise(Errc::Pole, "zeta has a pole at 1");
  const int N = 20 + static_cast<int>(std::ceil(std::abs(w)));
  LComplex v = zeta_em(LComplex(w.real(), w.imag()), N, 24, b2n_over_fact_ld(), 1e-21L);
  return {static_cast<double>(v.real()), static_cast<double>(v.imag())};
}

}  // namespace lindelof
