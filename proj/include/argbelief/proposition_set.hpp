#pragma once

#include <bit>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <vector>

namespace argbelief {

using WorldMask = std::uint32_t;

/// Hard ceiling imposed by the bit-vector representation. The configurable
/// per-model cap (default 16) sits below it.
inline constexpr std::size_t kMaxRepresentableWorlds = 24;

/// A subset of a fixed finite domain of `width` worlds, stored as a bit
/// vector. Operations between sets of different widths throw
/// `ErrorKind::domain_mismatch`.
class PropositionSet {
 public:
  PropositionSet() = default;
  PropositionSet(std::size_t width, WorldMask bits);

  static PropositionSet empty_set(std::size_t width) { return {width, 0}; }
  static PropositionSet full(std::size_t width);
  static PropositionSet singleton(std::size_t width, std::size_t world);

  std::size_t width() const noexcept { return width_; }
  WorldMask bits() const noexcept { return bits_; }
  std::size_t size() const noexcept { return static_cast<std::size_t>(std::popcount(bits_)); }
  bool empty() const noexcept { return bits_ == 0; }
  bool is_full() const noexcept { return bits_ == full_mask(width_); }
  bool contains(std::size_t world) const noexcept {
    return world < width_ && ((bits_ >> world) & 1U) != 0;
  }
  std::vector<std::size_t> members() const;

  bool subset_of(const PropositionSet& other) const;
  bool intersects(const PropositionSet& other) const;
  PropositionSet complement() const noexcept { return {width_, bits_ ^ full_mask(width_), Unchecked{}}; }
  PropositionSet minus(const PropositionSet& other) const;

  friend PropositionSet operator&(const PropositionSet& a, const PropositionSet& b);
  friend PropositionSet operator|(const PropositionSet& a, const PropositionSet& b);

  friend bool operator==(const PropositionSet&, const PropositionSet&) = default;

  static constexpr WorldMask full_mask(std::size_t width) noexcept {
    return width >= 32 ? ~WorldMask{0} : ((WorldMask{1} << width) - 1U);
  }

 private:
  struct Unchecked {};
  PropositionSet(std::size_t width, WorldMask bits, Unchecked) noexcept : width_(width), bits_(bits) {}
  void require_same_domain(const PropositionSet& other) const;

  std::size_t width_ = 0;
  WorldMask bits_ = 0;
};

/// Canonical order on masks of one domain: by cardinality, then
/// lexicographically on the ascending list of world indices.
bool canonical_less(WorldMask a, WorldMask b) noexcept;

struct CanonicalLess {
  bool operator()(const PropositionSet& a, const PropositionSet& b) const noexcept {
    return canonical_less(a.bits(), b.bits());
  }
};

/// Sorts canonically and removes duplicates.
void canonicalize(std::vector<PropositionSet>& family);

}  // namespace argbelief

template <>
struct std::hash<argbelief::PropositionSet> {
  std::size_t operator()(const argbelief::PropositionSet& s) const noexcept {
    return std::hash<std::uint64_t>{}((std::uint64_t{s.width()} << 32) | s.bits());
  }
};
