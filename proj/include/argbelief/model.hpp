#pragma once

#include <cstddef>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "argbelief/argumentation.hpp"
#include "argbelief/domain.hpp"
#include "argbelief/error.hpp"
#include "argbelief/proposition_set.hpp"
#include "argbelief/rational.hpp"
#include "argbelief/topology.hpp"

namespace argbelief {

enum class AttackMode { explicit_pairs, symmetric, measure };

std::string_view to_string(AttackMode mode) noexcept;

/// How the attack relation is to be materialized over the generated topology.
struct AttackSpec {
  AttackMode mode = AttackMode::symmetric;
  /// explicit_pairs: (attacked, attacker), both non-empty opens.
  std::vector<std::pair<PropositionSet, PropositionSet>> pairs;
  /// measure: one strictly positive weight per world.
  std::vector<Rational> weights;
};

struct ModelOptions {
  std::size_t max_worlds = 16;
  /// Reject evidence that omits the whole domain instead of adding it.
  bool strict = false;
  /// Close explicit pairs downward (condition 2) instead of rejecting them.
  bool close = false;
};

/// Raised when the attack relation breaks one of the three conditions.
class AttackInvalid : public Error {
 public:
  explicit AttackInvalid(AttackViolation violation);
  const AttackViolation& violation() const noexcept { return violation_; }

 private:
  AttackViolation violation_;
};

/// A validated topological argumentation model. Immutable once built; the
/// grounded extension is computed during construction.
class Model {
 public:
  const Domain& domain() const noexcept { return domain_; }
  std::size_t world_count() const noexcept { return domain_.size(); }
  /// E0, canonical order, always containing the whole domain.
  const std::vector<PropositionSet>& evidence() const noexcept { return evidence_; }
  const Topology& topology() const noexcept { return topology_; }
  const AttackGraph& attack() const noexcept { return attack_; }
  const AttackSpec& attack_spec() const noexcept { return spec_; }
  const Valuation& valuation() const noexcept { return valuation_; }
  const ExtensionReport& grounded() const noexcept { return grounded_; }
  std::vector<PropositionSet> grounded_sets() const { return attack_.sets_of(grounded_.grounded); }
  const std::vector<std::string>& warnings() const noexcept { return warnings_; }

  friend Model build_model(Domain, std::vector<PropositionSet>, AttackSpec, Valuation,
                           const ModelOptions&);

 private:
  Model() = default;

  Domain domain_;
  std::vector<PropositionSet> evidence_;
  Topology topology_;
  AttackSpec spec_;
  AttackGraph attack_;
  Valuation valuation_;
  ExtensionReport grounded_;
  std::vector<std::string> warnings_;
};

/// Validates the inputs, generates the topology, materializes the attack
/// relation (adding the empty-set edges) and checks all three conditions.
Model build_model(Domain domain, std::vector<PropositionSet> evidence, AttackSpec attack,
                  Valuation valuation, const ModelOptions& options = {});

/// Label-level input, as read from a model file.
struct ModelInput {
  std::vector<std::string> worlds;
  std::vector<std::vector<std::string>> evidence;
  AttackMode mode = AttackMode::symmetric;
  std::vector<std::pair<std::vector<std::string>, std::vector<std::string>>> pairs;
  std::map<std::string, Rational> weights;
  std::map<std::string, std::vector<std::string>> valuation;
};

Model build_model(const ModelInput& input, const ModelOptions& options = {});

/// Attack edges t1 <- t2 iff t1, t2 disjoint and w(t1) <= w(t2).
std::vector<Attack> measure_attack_edges(const std::vector<PropositionSet>& nodes,
                                         const std::vector<Rational>& weights);
/// Attack edges t1 <- t2 iff disjoint and t2 non-empty, plus the empty-set edges.
std::vector<Attack> symmetric_attack_edges(const std::vector<PropositionSet>& nodes);

Rational weight_of(const PropositionSet& set, const std::vector<Rational>& weights);

}  // namespace argbelief
