#include "semidecay/error.hpp"

namespace semidecay {

std::string_view errc_name(Errc code) noexcept {
  switch (code) {
    case Errc::unsupported_group: return "UnsupportedGroup";
    case Errc::unsupported_representation: return "UnsupportedRepresentation";
    case Errc::no_improvement: return "NoImprovement";
    case Errc::malformed_weight_set: return "MalformedWeightSet";
    case Errc::rank_mismatch: return "RankMismatch";
    case Errc::degenerate_representation: return "DegenerateRepresentation";
    case Errc::not_excellent: return "NotExcellent";
    case Errc::unsupported_mechanism: return "UnsupportedMechanism";
    case Errc::unsupported_numeric_field: return "UnsupportedNumericField";
    case Errc::decomposition_failure: return "DecompositionFailure";
    case Errc::invalid_xi: return "InvalidXi";
    case Errc::invalid_input: return "InvalidInput";
    case Errc::trivial_element: return "TrivialElement";
    case Errc::invalid_parameter: return "InvalidParameter";
    case Errc::vacuous_check: return "VacuousCheck";
    case Errc::fit_failure: return "FitFailure";
  }
  return "Unknown";
}

Error::Error(Errc code, const std::string& detail)
    : std::runtime_error(std::string(errc_name(code)) + ": " + detail), code_(code) {}

}  // namespace semidecay
