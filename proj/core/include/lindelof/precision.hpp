#pragma once

#include <cmath>
#include <complex>

#include <boost/multiprecision/gmp.hpp>
#include <boost/multiprecision/mpfr.hpp>

namespace lindelof {

using Complex = std::complex<double>;

// Runtime-precision MPFR real; expression templates off so it composes with std::complex.
using Mp = boost::multiprecision::number<boost::multiprecision::mpfr_float_backend<0>,
                                         boost::multiprecision::et_off>;
using MpComplex = std::complex<Mp>;
using BigInt = boost::multiprecision::mpz_int;

struct PrecisionContext {
  int bits = 53;       // working mantissa precision
  double tol = 1e-12;  // target relative accuracy

  // Throws InvalidArgument unless bits >= 53 and tol >= 2^(1-bits).
  void validate() const;

  // Default context, with bits overridable through LINDELOF_PRECISION_BITS.
  static PrecisionContext from_env();
};

// Sets the default MPFR precision for the current thread and restores it on exit.
class ScopedPrecision {
 public:
  explicit ScopedPrecision(int bits);
  ~ScopedPrecision();
  ScopedPrecision(const ScopedPrecision&) = delete;
  ScopedPrecision& operator=(const ScopedPrecision&) = delete;

 private:
  unsigned saved_digits10_;
};

unsigned bits_to_digits10(int bits);

// mantissa * exp(log_scale); lets results far outside the binary64 range travel intact.
struct ScaledComplex {
  Complex mantissa{0.0, 0.0};
  double log_scale = 0.0;

  Complex value() const { return mantissa * std::exp(log_scale); }
  double log_abs() const { return std::log(std::abs(mantissa)) + log_scale; }
};

// Compensated (Neumaier) accumulator.
template <class T>
class CompensatedSum {
 public:
  void add(T x) {
    T t = sum_ + x;
    if (std::abs(sum_) >= std::abs(x))
      comp_ += (sum_ - t) + x;
    else
      comp_ += (x - t) + sum_;
    sum_ = t;
  }
  T value() const { return sum_ + comp_; }
  void scale(double f) {
    sum_ *= f;
    comp_ *= f;
  }

 private:
  T sum_{};
  T comp_{};
};

template <>
class CompensatedSum<Complex> {
 public:
  void add(Complex x) {
    re_.add(x.real());
    im_.add(x.imag());
  }
  Complex value() const { return {re_.value(), im_.value()}; }
  void scale(double f) {
    re_.scale(f);
    im_.scale(f);
  }

 private:
  CompensatedSum<double> re_;
  CompensatedSum<double> im_;
};

inline Complex to_complex(const MpComplex& z) {
  return {static_cast<double>(z.real()), static_cast<double>(z.imag())};
}

}  // namespace lindelof
