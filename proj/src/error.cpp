#include "grhcheck/error.hpp"

namespace grhcheck {

std::string_view to_string(ErrorKind kind) noexcept {
  switch (kind) {
    case ErrorKind::ModulusTooLarge: return "modulus-too-large";
    case ErrorKind::ImproperSubgroup: return "improper-subgroup";
    case ErrorKind::NonUnitCoset: return "non-unit-coset";
    case ErrorKind::NotFoundBelowCeiling: return "not-found-below-ceiling";
    case ErrorKind::Pole: return "pole";
    case ErrorKind::PrincipalCharacter: return "principal-character";
    case ErrorKind::NotFundamental: return "not-fundamental";
    case ErrorKind::RoundingAmbiguous: return "rounding-ambiguous";
    case ErrorKind::Domain: return "domain";
    case ErrorKind::DegenerateWindow: return "degenerate-window";
    case ErrorKind::QuadratureToleranceNotMet: return "quadrature-tolerance-not-met";
    case ErrorKind::NonpositiveDenominator: return "nonpositive-denominator";
    case ErrorKind::NoFeasibleLambda: return "no-feasible-lambda";
    case ErrorKind::InvalidArgument: return "invalid-argument";
  }
  return "unknown";
}

}  // namespace grhcheck
