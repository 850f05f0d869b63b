#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace argbelief {

enum class ErrorKind {
  empty_domain,
  duplicate_world,
  unknown_world,
  empty_evidence_piece,
  evidence_outside_domain,
  missing_unit,
  attack_invalid,
  attack_endpoint_invalid,
  domain_mismatch,
  domain_too_large,
  search_budget_exceeded,
  characterization_mismatch,
  syntax_error,
  unknown_atom,
  zero_mass_world,
  invalid_measure,
  neighborhood_invalid,
  generation_retry_exhausted,
  unknown_property,
  input_error,
};

std::string_view to_string(ErrorKind kind) noexcept;

/// Base exception for every failure raised by the library. `kind()` is the
/// stable, machine-readable classification; `what()` carries the witness.
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& message);

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

}  // namespace argbelief
