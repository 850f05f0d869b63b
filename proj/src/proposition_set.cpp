#include "argbelief/proposition_set.hpp"

#include <algorithm>
#include <string>

#include "argbelief/error.hpp"

namespace argbelief {

PropositionSet::PropositionSet(std::size_t width, WorldMask bits) : width_(width), bits_(bits) {
  if (width > kMaxRepresentableWorlds) {
    throw Error(ErrorKind::domain_too_large,
                std::to_string(width) + " worlds exceed the representable maximum of " +
                    std::to_string(kMaxRepresentableWorlds));
  }
  if ((bits & ~full_mask(width)) != 0) {
    throw Error(ErrorKind::evidence_outside_domain,
                "set has members beyond a domain of " + std::to_string(width) + " worlds");
  }
}

PropositionSet PropositionSet::full(std::size_t width) { return {width, full_mask(width)}; }

PropositionSet PropositionSet::singleton(std::size_t width, std::size_t world) {
  if (world >= width) {
    throw Error(ErrorKind::evidence_outside_domain,
                "world index " + std::to_string(world) + " outside a domain of " +
                    std::to_string(width));
  }
  return {width, WorldMask{1} << world};
}

std::vector<std::size_t> PropositionSet::members() const {
  std::vector<std::size_t> out;
  out.reserve(size());
  for (WorldMask rest = bits_; rest != 0; rest &= rest - 1) {
    out.push_back(static_cast<std::size_t>(std::countr_zero(rest)));
  }
  return out;
}

void PropositionSet::require_same_domain(const PropositionSet& other) const {
  if (width_ != other.width_) {
    throw Error(ErrorKind::domain_mismatch, "sets over domains of " + std::to_string(width_) +
                                                " and " + std::to_string(other.width_) +
                                                " worlds");
  }
}

bool PropositionSet::subset_of(const PropositionSet& other) const {
  require_same_domain(other);
  return (bits_ & ~other.bits_) == 0;
}

bool PropositionSet::intersects(const PropositionSet& other) const {
  require_same_domain(other);
  return (bits_ & other.bits_) != 0;
}

PropositionSet PropositionSet::minus(const PropositionSet& other) const {
  require_same_domain(other);
  return {width_, bits_ & ~other.bits_, Unchecked{}};
}

PropositionSet operator&(const PropositionSet& a, const PropositionSet& b) {
  a.require_same_domain(b);
  return {a.width_, a.bits_ & b.bits_, PropositionSet::Unchecked{}};
}

PropositionSet operator|(const PropositionSet& a, const PropositionSet& b) {
  a.require_same_domain(b);
  return {a.width_, a.bits_ | b.bits_, PropositionSet::Unchecked{}};
}

bool canonical_less(WorldMask a, WorldMask b) noexcept {
  const int ca = std::popcount(a);
  const int cb = std::popcount(b);
  if (ca != cb) return ca < cb;
  const WorldMask diff = a ^ b;
  if (diff == 0) return false;
  // The set holding the lowest differing world comes first.
  return (a & (diff & (~diff + 1U))) != 0;
}

void canonicalize(std::vector<PropositionSet>& family) {
  std::sort(family.begin(), family.end(), CanonicalLess{});
  family.erase(std::unique(family.begin(), family.end()), family.end());
}

}  // namespace argbelief
