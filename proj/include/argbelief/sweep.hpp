#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "argbelief/generator.hpp"

namespace argbelief {

enum class PropertyKind {
  /// Must hold on every model.
  required,
  /// Holds only under extra conditions; failures are reported, not fatal.
  sufficient_condition_only,
};

struct PropertyOutcome {
  bool applicable = true;
  bool passed = true;
  std::string detail;

  static PropertyOutcome pass() { return {}; }
  static PropertyOutcome fail(std::string detail) { return {true, false, std::move(detail)}; }
  static PropertyOutcome skip(std::string why) { return {false, true, std::move(why)}; }
};

struct PropertyDef {
  std::string name;
  std::string summary;
  PropertyKind kind = PropertyKind::required;
  std::function<PropertyOutcome(const GeneratedCase&)> check;
};

const std::vector<PropertyDef>& property_registry();
/// Throws `unknown_property`.
const PropertyDef& find_property(const std::string& name);

struct PropertyTally {
  std::string name;
  PropertyKind kind = PropertyKind::required;
  std::size_t runs = 0;
  std::size_t passed = 0;
  std::size_t failed = 0;
  std::size_t not_applicable = 0;
};

struct SweepFailure {
  std::string property;
  GeneratorConfig config;
  std::string detail;
  bool fatal = true;
  /// Self-contained model file reproducing the failure.
  nlohmann::json counterexample;
};

struct SweepReport {
  std::vector<PropertyTally> tallies;
  std::vector<SweepFailure> failures;
  std::uint64_t first_seed = 0;
  std::uint64_t last_seed = 0;
  std::size_t models = 0;
  double seconds = 0.0;

  /// No required property failed.
  bool ok() const;
  nlohmann::json to_json() const;
};

SweepReport run_sweep(const std::vector<std::string>& properties,
                      const std::vector<GeneratorConfig>& configs);

/// Model file for a generated case, including the source neighborhood or
/// measure when present.
nlohmann::json case_to_json(const GeneratedCase& generated);
/// Rebuilds a case from `case_to_json` output (or any model file).
GeneratedCase case_from_json(const nlohmann::json& doc);

}  // namespace argbelief
