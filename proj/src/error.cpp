#include "argbelief/error.hpp"

namespace argbelief {

std::string_view to_string(ErrorKind kind) noexcept {
  switch (kind) {
    case ErrorKind::empty_domain: return "EmptyDomain";
    case ErrorKind::duplicate_world: return "DuplicateWorld";
    case ErrorKind::unknown_world: return "UnknownWorld";
    case ErrorKind::empty_evidence_piece: return "EmptyEvidencePiece";
    case ErrorKind::evidence_outside_domain: return "EvidenceOutsideDomain";
    case ErrorKind::missing_unit: return "MissingUnit";
    case ErrorKind::attack_invalid: return "AttackInvalid";
    case ErrorKind::attack_endpoint_invalid: return "AttackEndpointInvalid";
    case ErrorKind::domain_mismatch: return "DomainMismatch";
    case ErrorKind::domain_too_large: return "DomainTooLarge";
    case ErrorKind::search_budget_exceeded: return "SearchBudgetExceeded";
    case ErrorKind::characterization_mismatch: return "CharacterizationMismatch";
    case ErrorKind::syntax_error: return "SyntaxError";
    case ErrorKind::unknown_atom: return "UnknownAtom";
    case ErrorKind::zero_mass_world: return "ZeroMassWorld";
    case ErrorKind::invalid_measure: return "InvalidMeasure";
    case ErrorKind::neighborhood_invalid: return "NeighborhoodInvalid";
    case ErrorKind::generation_retry_exhausted: return "GenerationRetryExhausted";
    case ErrorKind::unknown_property: return "UnknownProperty";
    case ErrorKind::input_error: return "InputError";
  }
  return "Unknown";
}

Error::Error(ErrorKind kind, const std::string& message)
    : std::runtime_error(std::string(to_string(kind)) + ": " + message), kind_(kind) {}

}  // namespace argbelief
