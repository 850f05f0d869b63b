#include "argbelief/domain.hpp"

#include <string>

#include "argbelief/error.hpp"

namespace argbelief {

Domain::Domain(std::vector<std::string> labels) : labels_(std::move(labels)) {
  if (labels_.empty()) throw Error(ErrorKind::empty_domain, "a model needs at least one world");
  if (labels_.size() > kMaxRepresentableWorlds) {
    throw Error(ErrorKind::domain_too_large,
                std::to_string(labels_.size()) + " worlds exceed the representable maximum of " +
                    std::to_string(kMaxRepresentableWorlds));
  }
  for (std::size_t i = 0; i < labels_.size(); ++i) {
    if (!index_.emplace(labels_[i], i).second) {
      throw Error(ErrorKind::duplicate_world, "world label \"" + labels_[i] + "\" repeats");
    }
  }
}

std::optional<std::size_t> Domain::index_of(std::string_view label) const {
  const auto it = index_.find(std::string(label));
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

PropositionSet Domain::make_set(const std::vector<std::string>& labels) const {
  WorldMask bits = 0;
  for (const auto& label : labels) {
    const auto index = index_of(label);
    if (!index) throw Error(ErrorKind::unknown_world, "no world labelled \"" + label + "\"");
    bits |= WorldMask{1} << *index;
  }
  return {size(), bits};
}

std::vector<std::string> Domain::label_list(const PropositionSet& set) const {
  if (set.width() != size()) {
    throw Error(ErrorKind::domain_mismatch, "set does not belong to this domain");
  }
  std::vector<std::string> out;
  for (const auto index : set.members()) out.push_back(labels_[index]);
  return out;
}

std::string Domain::format(const PropositionSet& set) const {
  std::string out = "{";
  bool first = true;
  for (const auto& label : label_list(set)) {
    if (!first) out += ',';
    out += label;
    first = false;
  }
  return out + "}";
}

std::string Domain::format_family(const std::vector<PropositionSet>& family) const {
  std::string out = "{";
  for (std::size_t i = 0; i < family.size(); ++i) {
    if (i != 0) out += ", ";
    out += format(family[i]);
  }
  return out + "}";
}

bool is_atom_name(std::string_view name) noexcept {
  if (name.empty() || name.front() < 'a' || name.front() > 'z') return false;
  for (const char c : name) {
    const bool ok = (c >= 'a' && c <= 'z') || (c >= '0' && c <= '9') || c == '_';
    if (!ok) return false;
  }
  return name != "true" && name != "false";
}

void validate_valuation(const Domain& domain, const Valuation& valuation) {
  for (const auto& [name, set] : valuation) {
    if (!is_atom_name(name)) {
      throw Error(ErrorKind::input_error, "\"" + name + "\" is not a valid atom name");
    }
    if (set.width() != domain.size()) {
      throw Error(ErrorKind::domain_mismatch, "valuation of \"" + name + "\" uses another domain");
    }
  }
}

}  // namespace argbelief
