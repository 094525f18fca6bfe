#include "lindelof/precision.hpp"

#include <cstdlib>
#include <string>

#include "lindelof/errors.hpp"

namespace lindelof {

void PrecisionContext::validate() const {
  if (bits < 53) raise(Errc::InvalidArgument, "precision below 53 bits: " + std::to_string(bits));
  if (!(tol > 0.0) || tol < std::ldexp(1.0, 1 - bits))
    raise(Errc::InvalidArgument, "tolerance finer than the working precision allows");
}

PrecisionContext PrecisionContext::from_env() {
  PrecisionContext ctx;
  if (const char* env = std::getenv("LINDELOF_PRECISION_BITS")) {
    try {
      ctx.bits = std::stoi(env);
    } catch (const std::exception&) {
      raise(Errc::InvalidArgument, std::string("LINDELOF_PRECISION_BITS is not an integer: ") + env);
    }
    ctx.validate();
  }
  return ctx;
}

unsigned bits_to_digits10(int bits) {
  return static_cast<unsigned>(std::ceil(bits * 0.30102999566398120)) + 1;
}

ScopedPrecision::ScopedPrecision(int bits) : saved_digits10_(Mp::default_precision()) {
  Mp::default_precision(bits_to_digits10(bits));
}

ScopedPrecision::~ScopedPrecision() { Mp::default_precision(saved_digits10_); }

}  // namespace lindelof
