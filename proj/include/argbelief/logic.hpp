#pragma once

#include <cstddef>
#include <functional>
#include <optional>
#include <string>
#include <unordered_set>
#include <utility>
#include <vector>

#include "argbelief/domain.hpp"
#include "argbelief/formula.hpp"
#include "argbelief/model.hpp"

namespace argbelief {

/// Whether a proposition is believed. Every semantics in this library is
/// uniform, so belief depends on the proposition alone.
using BeliefTest = std::function<bool(const PropositionSet&)>;

struct EvaluationOptions {
  /// Treat atoms missing from the valuation as false everywhere.
  bool unknown_atoms_empty = false;
};

/// The set of worlds where `formula` holds; [[B phi]] is the whole domain
/// when `believed([[phi]])`, else empty.
PropositionSet evaluate(const Formula& formula, std::size_t width, const Valuation& valuation,
                        const BeliefTest& believed, const EvaluationOptions& options = {});

/// Grounded-belief semantics over a topological argumentation model.
PropositionSet extension(const Model& model, const Formula& formula,
                         const EvaluationOptions& options = {});

BeliefTest grounded_belief_test(const Model& model);

/// A uniform neighborhood model for belief: the family contains the domain,
/// is closed under supersets and holds no set together with its complement.
class NeighborhoodModel {
 public:
  const Domain& domain() const noexcept { return domain_; }
  /// Canonical order.
  const std::vector<PropositionSet>& neighborhood() const noexcept { return members_; }
  const Valuation& valuation() const noexcept { return valuation_; }
  bool contains(const PropositionSet& set) const { return lookup_.count(set.bits()) != 0; }

  friend NeighborhoodModel make_neighborhood_model(Domain, std::vector<PropositionSet>, Valuation);

 private:
  NeighborhoodModel() = default;

  Domain domain_;
  std::vector<PropositionSet> members_;
  std::unordered_set<WorldMask> lookup_;
  Valuation valuation_;
};

/// Violations of the three neighborhood conditions, each naming its witness.
std::vector<std::string> neighborhood_violations(const Domain& domain,
                                                 const std::vector<PropositionSet>& family);

/// Throws `neighborhood_invalid` with the first violation.
NeighborhoodModel make_neighborhood_model(Domain domain, std::vector<PropositionSet> family,
                                          Valuation valuation);

/// N = every superset of a grounded-extension member.
NeighborhoodModel to_neighborhood(const Model& model);

/// Singleton evidence, discrete topology, and t <- t' iff (t' non-empty,
/// disjoint from t, t outside N) or t = t' = {} or (t = {} and t' non-empty).
Model from_neighborhood(const NeighborhoodModel& nmodel, const ModelOptions& options = {});

/// Attack pairs (attacked, attacker) of the construction above, non-empty
/// opens only, over the full powerset.
std::vector<std::pair<PropositionSet, PropositionSet>> neighborhood_attack_pairs(
    const NeighborhoodModel& nmodel);

PropositionSet check_neighborhood_semantics(const NeighborhoodModel& nmodel, const Formula& formula,
                                            const EvaluationOptions& options = {});

BeliefTest neighborhood_belief_test(const NeighborhoodModel& nmodel);

enum class Schema { four, five, d, m, n, re, c };

struct SchemaResult {
  Schema schema;
  std::string name;
  std::string formula;
  /// C is not part of the axiom system and is expected to fail somewhere.
  bool in_axiom_system = true;
  bool valid = false;
  /// First falsifying instantiation in canonical order: {p} or {p, q}.
  std::vector<PropositionSet> witness;
};

struct AxiomReport {
  std::vector<SchemaResult> results;

  /// Every schema of the axiom system holds.
  bool sound() const;
  const SchemaResult& result(Schema schema) const;
};

/// Propositional instantiation is quadratic in 2^|X|; refuse beyond this.
inline constexpr std::size_t kMaxWorldsForAxioms = 8;

/// Instantiates 4, 5, D, M, N, RE and the non-theorem C with every pair of
/// propositions p, q and checks truth at every world.
AxiomReport check_axioms(std::size_t width, const BeliefTest& believed);
AxiomReport check_axioms(const Model& model);
AxiomReport check_axioms(const NeighborhoodModel& nmodel);

/// Pointwise agreement of two belief semantics on every formula of modal
/// depth <= `depth` over the atoms of `valuation`. Formulas are enumerated up
/// to their extensions in both models, which is exact since evaluation is
/// compositional.
bool modally_equivalent(std::size_t width, const Valuation& valuation, const BeliefTest& lhs,
                        const BeliefTest& rhs, std::size_t depth);

}  // namespace argbelief
