#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include <boost/dynamic_bitset.hpp>

#include "argbelief/proposition_set.hpp"

namespace argbelief {

/// A family of opens, as a bit per node of an attack graph.
using OpenFamily = boost::dynamic_bitset<>;

/// One attack edge: `attacker` attacks `attacked` (attacked <- attacker).
struct Attack {
  std::size_t attacked;
  std::size_t attacker;
  friend bool operator==(const Attack&, const Attack&) = default;
};

/// The attack graph over a topology. Nodes are the opens, in the topology's
/// canonical order.
class AttackGraph {
 public:
  AttackGraph() = default;
  AttackGraph(std::vector<PropositionSet> nodes, std::vector<Attack> edges);

  std::size_t size() const noexcept { return nodes_.size(); }
  std::size_t edge_count() const noexcept { return edge_count_; }
  const std::vector<PropositionSet>& nodes() const noexcept { return nodes_; }
  const PropositionSet& node(std::size_t i) const { return nodes_.at(i); }
  std::optional<std::size_t> index_of(const PropositionSet& set) const;

  /// Does `attacker` attack `attacked`?
  bool attacks(std::size_t attacker, std::size_t attacked) const;
  std::span<const std::uint32_t> attackers_of(std::size_t attacked) const { return attackers_[attacked]; }
  std::span<const std::uint32_t> targets_of(std::size_t attacker) const { return targets_[attacker]; }
  std::vector<Attack> edges() const;

  OpenFamily empty_family() const { return OpenFamily(size()); }
  OpenFamily family_of(std::span<const PropositionSet> sets) const;
  std::vector<PropositionSet> sets_of(const OpenFamily& family) const;

 private:
  std::vector<PropositionSet> nodes_;
  std::unordered_map<WorldMask, std::size_t> index_;
  std::vector<std::vector<std::uint32_t>> attackers_;
  std::vector<std::vector<std::uint32_t>> targets_;
  std::size_t edge_count_ = 0;
};

/// A breach of one of the three attack-relation conditions:
///  1. t1 and t2 are disjoint iff one attacks the other;
///  2. whatever t attacks, it also attacks every open subset of it;
///  3. the empty set is attacked by every non-empty open and attacks none.
struct AttackViolation {
  int condition = 0;
  /// Condition 1: {t1, t2}; condition 2: {t1, t1', t}; condition 3: {t}.
  std::vector<PropositionSet> witness;
  std::string description;
};

std::vector<AttackViolation> validate_attack(const AttackGraph& graph);

/// Adds t1' <- t for every t1 <- t and open t1' within t1.
std::vector<Attack> close_downward(const std::vector<PropositionSet>& nodes,
                                   std::span<const Attack> edges);

/// The edges every valid graph carries on the empty set: the empty set is
/// attacked by every open, itself included.
std::vector<Attack> empty_set_edges(const std::vector<PropositionSet>& nodes);

bool defends(const AttackGraph& graph, const OpenFamily& defenders, std::size_t target);

/// d(T): the opens defended by T.
OpenFamily characteristic(const AttackGraph& graph, const OpenFamily& defenders);

struct ExtensionReport {
  OpenFamily grounded;
  /// F0 = {}, F1 = d(F0), ... ending with two equal entries.
  std::vector<OpenFamily> iterations;
};

/// Least fixed point of the characteristic function, by Kleene iteration.
ExtensionReport grounded_extension(const AttackGraph& graph);

struct ExtensionFlags {
  bool conflict_free = false;
  bool admissible = false;
  bool complete = false;
  bool stable = false;
  std::optional<bool> preferred;
};

struct ClassifyOptions {
  bool compute_preferred = true;
  /// Preferred search is exhaustive over supersets; refuse above this many opens.
  std::size_t preferred_node_bound = 14;
};

ExtensionFlags classify_extension(const AttackGraph& graph, const OpenFamily& family,
                                  const ClassifyOptions& options = {});

bool is_conflict_free(const AttackGraph& graph, const OpenFamily& family);
bool is_admissible(const AttackGraph& graph, const OpenFamily& family);

// Shape of the relation. Symmetry and unambiguity range over non-empty opens:
// condition 3 makes both fail trivially once the empty set is included.
bool is_symmetric(const AttackGraph& graph);
bool is_transitive(const AttackGraph& graph);
bool is_unambiguous(const AttackGraph& graph);
/// t1 <- t2, t2 <- t3 and t1, t3 disjoint imply t1 <- t3.
bool is_conditionally_transitive(const AttackGraph& graph);

/// Pairwise intersections of members stay in the family.
bool closed_under_intersection(const AttackGraph& graph, const OpenFamily& family);
/// Members' open supersets stay in the family.
bool closed_upward(const AttackGraph& graph, const OpenFamily& family);

/// Right-hand side of the intersection-closure criterion for a grounded
/// extension: every attacker of f1 & f2 (f1, f2 in the family) is disjoint
/// from some member of the family.
bool attackers_of_meets_are_refuted(const AttackGraph& graph, const OpenFamily& family);

/// DOT rendering, edges drawn attacker -> attacked, empty set omitted.
std::string to_dot(const AttackGraph& graph,
                   const std::vector<std::string>& world_labels);

}  // namespace argbelief
