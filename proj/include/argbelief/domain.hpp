#pragma once

#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "argbelief/proposition_set.hpp"

namespace argbelief {

/// The world labels of a model, mapped to indices 0..n-1 in input order.
class Domain {
 public:
  Domain() = default;
  explicit Domain(std::vector<std::string> labels);

  std::size_t size() const noexcept { return labels_.size(); }
  const std::vector<std::string>& labels() const noexcept { return labels_; }
  const std::string& label(std::size_t index) const { return labels_.at(index); }
  std::optional<std::size_t> index_of(std::string_view label) const;

  /// Builds a set from world labels; unknown labels throw `unknown_world`.
  PropositionSet make_set(const std::vector<std::string>& labels) const;
  std::vector<std::string> label_list(const PropositionSet& set) const;
  /// "{1,2}" style rendering used by every text output.
  std::string format(const PropositionSet& set) const;
  std::string format_family(const std::vector<PropositionSet>& family) const;

  PropositionSet empty_set() const { return PropositionSet::empty_set(size()); }
  PropositionSet full() const { return PropositionSet::full(size()); }

  friend bool operator==(const Domain& a, const Domain& b) { return a.labels_ == b.labels_; }

 private:
  std::vector<std::string> labels_;
  std::unordered_map<std::string, std::size_t> index_;
};

using Valuation = std::map<std::string, PropositionSet>;

/// Checks every valuation entry lives in `domain` and every atom name is an
/// identifier (`[a-z][a-z0-9_]*`).
void validate_valuation(const Domain& domain, const Valuation& valuation);

bool is_atom_name(std::string_view name) noexcept;

}  // namespace argbelief
