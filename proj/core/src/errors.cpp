#include "lindelof/errors.hpp"

namespace lindelof {

std::string_view to_string(Errc code) noexcept {
  switch (code) {
    case Errc::InvalidArgument: return "invalid-argument";
    case Errc::Domain: return "domain";
    case Errc::Pole: return "pole";
    case Errc::Overflow: return "overflow";
    case Errc::SectorViolation: return "sector-violation";
    case Errc::SingularityHit: return "singularity-hit";
    case Errc::UnsupportedParameter: return "unsupported-parameter";
    case Errc::UnsupportedKind: return "unsupported-kind";
    case Errc::HypothesisViolation: return "hypothesis-violation";
    case Errc::CatalogIncomplete: return "catalog-incomplete";
    case Errc::VariableMismatch: return "variable-mismatch";
    case Errc::UnanchoredExactness: return "unanchored-exactness";
    case Errc::Divergence: return "divergence";
    case Errc::SlowConvergence: return "slow-convergence";
    case Errc::NonConvergence: return "non-convergence";
    case Errc::CapExceeded: return "cap-exceeded";
    case Errc::PrecisionCap: return "precision-cap";
  }
  return "unknown";
}

ErrorCategory category(Errc code) noexcept {
  switch (code) {
    case Errc::InvalidArgument:
    case Errc::UnanchoredExactness:
      return ErrorCategory::BadArgument;
    case Errc::Divergence:
    case Errc::SlowConvergence:
    case Errc::NonConvergence:
    case Errc::CapExceeded:
    case Errc::PrecisionCap:
      return ErrorCategory::Convergence;
    default:
      return ErrorCategory::Domain;
  }
}

void raise(Errc code, const std::string& what) {
  throw Error(code, std::string(to_string(code)) + ": " + what);
}

}  // namespace lindelof
