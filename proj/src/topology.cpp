#include "argbelief/topology.hpp"

#include <algorithm>
#include <string>
#include <unordered_set>

#include "argbelief/error.hpp"
#include "argbelief/model.hpp"

namespace argbelief {

bool Topology::is_open(const PropositionSet& set) const {
  return set.width() == width_ && index_.count(set.bits()) != 0;
}

std::optional<std::size_t> Topology::index_of(const PropositionSet& set) const {
  if (set.width() != width_) return std::nullopt;
  const auto it = index_.find(set.bits());
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

Topology generate_topology(std::size_t width, std::span<const PropositionSet> evidence) {
  if (width == 0) throw Error(ErrorKind::empty_domain, "a topology needs at least one world");
  if (width > kMaxRepresentableWorlds) {
    throw Error(ErrorKind::domain_too_large, std::to_string(width) + " worlds");
  }
  const WorldMask all = PropositionSet::full_mask(width);

  // In a finite space each world has a least open neighbourhood: the
  // intersection of the evidence containing it. A set is open exactly when it
  // contains the least neighbourhood of each of its worlds.
  std::vector<WorldMask> least(width, all);
  for (const auto& piece : evidence) {
    if (piece.width() != width) {
      throw Error(ErrorKind::domain_mismatch, "evidence piece over another domain");
    }
    for (const auto world : piece.members()) least[world] &= piece.bits();
  }

  Topology out;
  out.width_ = width;
  const std::uint64_t count = std::uint64_t{1} << width;
  for (std::uint64_t candidate = 0; candidate < count; ++candidate) {
    const auto bits = static_cast<WorldMask>(candidate);
    bool open = true;
    for (WorldMask rest = bits; rest != 0 && open; rest &= rest - 1) {
      const auto world = static_cast<std::size_t>(std::countr_zero(rest));
      open = (least[world] & ~bits) == 0;
    }
    if (open) out.opens_.emplace_back(width, bits);
  }
  canonicalize(out.opens_);
  out.index_.reserve(out.opens_.size());
  for (std::size_t i = 0; i < out.opens_.size(); ++i) out.index_.emplace(out.opens_[i].bits(), i);
  return out;
}

std::vector<BodyOfEvidence> enumerate_bodies(const Model& model, BodyFilter filter) {
  return enumerate_bodies(model.evidence(), filter);
}

std::vector<BodyOfEvidence> enumerate_bodies(std::span<const PropositionSet> evidence,
                                             BodyFilter filter) {
  if (evidence.empty()) return {};
  if (evidence.size() > kMaxEvidenceForBodies) {
    throw Error(ErrorKind::search_budget_exceeded,
                std::to_string(evidence.size()) + " evidence pieces exceed the body enumeration bound of " +
                    std::to_string(kMaxEvidenceForBodies));
  }
  const std::size_t width = evidence.front().width();
  const std::size_t n = evidence.size();
  std::vector<BodyOfEvidence> out;

  // Depth-first over inclusion choices; the finite intersection property is
  // hereditary, so an empty running intersection prunes the whole branch.
  std::vector<std::size_t> chosen;
  auto emit = [&](WorldMask meet) {
    if (filter == BodyFilter::maximal) {
      for (std::size_t i = 0; i < n; ++i) {
        const bool in = std::find(chosen.begin(), chosen.end(), i) != chosen.end();
        if (!in && (meet & evidence[i].bits()) != 0) return;
      }
    }
    BodyOfEvidence body;
    for (const auto i : chosen) body.members.push_back(evidence[i]);
    body.intersection = PropositionSet(width, meet);
    out.push_back(std::move(body));
  };
  auto recurse = [&](auto&& self, std::size_t next, WorldMask meet) -> void {
    if (next == n) {
      if (!chosen.empty()) emit(meet);
      return;
    }
    const WorldMask with = meet & evidence[next].bits();
    if (with != 0) {
      chosen.push_back(next);
      self(self, next + 1, with);
      chosen.pop_back();
    }
    self(self, next + 1, meet);
  };
  recurse(recurse, 0, PropositionSet::full_mask(width));
  return out;
}

bool supports(const BodyOfEvidence& body, const PropositionSet& proposition) {
  if (body.members.empty()) return proposition.is_full();
  PropositionSet meet = body.members.front();
  for (const auto& member : body.members) meet = meet & member;
  return meet.subset_of(proposition);
}

std::vector<PropositionSet> combined_evidence(const Model& model) {
  return combined_evidence(model.evidence());
}

std::vector<PropositionSet> combined_evidence(std::span<const PropositionSet> evidence) {
  // Every non-empty finite intersection of evidence is the meet of a body
  // (its pieces have the finite intersection property) and vice versa.
  std::vector<PropositionSet> out;
  if (evidence.empty()) return out;
  std::unordered_set<WorldMask> seen;
  std::vector<PropositionSet> frontier;
  for (const auto& piece : evidence) {
    if (!piece.empty() && seen.insert(piece.bits()).second) frontier.push_back(piece);
  }
  out = frontier;
  while (!frontier.empty()) {
    std::vector<PropositionSet> next;
    for (const auto& a : frontier) {
      for (const auto& b : evidence) {
        const PropositionSet meet = a & b;
        if (!meet.empty() && seen.insert(meet.bits()).second) next.push_back(meet);
      }
    }
    out.insert(out.end(), next.begin(), next.end());
    frontier = std::move(next);
  }
  canonicalize(out);
  return out;
}

}  // namespace argbelief
