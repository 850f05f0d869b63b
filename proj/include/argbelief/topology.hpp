#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <unordered_map>
#include <vector>

#include "argbelief/proposition_set.hpp"

namespace argbelief {

class Model;

/// A finite topology, stored as the canonically ordered family of its opens.
/// Downstream code addresses opens by their position in `opens()`.
class Topology {
 public:
  Topology() = default;

  std::size_t width() const noexcept { return width_; }
  std::size_t size() const noexcept { return opens_.size(); }
  const std::vector<PropositionSet>& opens() const noexcept { return opens_; }
  const PropositionSet& open(std::size_t index) const { return opens_.at(index); }
  bool is_open(const PropositionSet& set) const;
  std::optional<std::size_t> index_of(const PropositionSet& set) const;
  /// True when every subset of the domain is open.
  bool is_discrete() const noexcept { return opens_.size() == (std::size_t{1} << width_); }

  friend Topology generate_topology(std::size_t width, std::span<const PropositionSet> evidence);

 private:
  std::size_t width_ = 0;
  std::vector<PropositionSet> opens_;
  std::unordered_map<WorldMask, std::size_t> index_;
};

/// The least topology on a `width`-world domain in which every evidence
/// piece is open. Throws `domain_too_large` past `kMaxRepresentableWorlds`.
Topology generate_topology(std::size_t width, std::span<const PropositionSet> evidence);

/// A subfamily of the evidence with the finite intersection property.
struct BodyOfEvidence {
  std::vector<PropositionSet> members;
  PropositionSet intersection;
};

enum class BodyFilter { all, maximal };

/// Upper bound on |E0| for body enumeration.
inline constexpr std::size_t kMaxEvidenceForBodies = 20;

/// Every non-empty subfamily of the model's evidence with the finite
/// intersection property (or only the maximal ones). Throws
/// `search_budget_exceeded` when |E0| exceeds `kMaxEvidenceForBodies`.
std::vector<BodyOfEvidence> enumerate_bodies(const Model& model, BodyFilter filter);
std::vector<BodyOfEvidence> enumerate_bodies(std::span<const PropositionSet> evidence,
                                             BodyFilter filter);

bool supports(const BodyOfEvidence& body, const PropositionSet& proposition);

/// E: the intersections of all (finite) bodies of evidence, canonical order.
std::vector<PropositionSet> combined_evidence(const Model& model);
std::vector<PropositionSet> combined_evidence(std::span<const PropositionSet> evidence);

}  // namespace argbelief
