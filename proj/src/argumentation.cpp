#include "argbelief/argumentation.hpp"

#include <algorithm>
#include <set>
#include <sstream>

#include "argbelief/error.hpp"

namespace argbelief {

namespace {

std::string render(const PropositionSet& set) {
  std::string out = "{";
  bool first = true;
  for (const auto w : set.members()) {
    if (!first) out += ',';
    out += std::to_string(w);
    first = false;
  }
  return out + "}";
}

bool subset_mask(WorldMask a, WorldMask b) { return (a & ~b) == 0; }

// Node indices of the opens contained in `node`.
template <typename Fn>
void for_each_open_subset(const AttackGraph& graph, std::size_t node, Fn&& fn) {
  const WorldMask bits = graph.node(node).bits();
  if ((std::size_t{1} << std::popcount(bits)) < graph.size()) {
    WorldMask sub = bits;
    while (true) {
      if (const auto index = graph.index_of(PropositionSet(graph.node(node).width(), sub))) fn(*index);
      if (sub == 0) break;
      sub = (sub - 1) & bits;
    }
  } else {
    for (std::size_t j = 0; j < graph.size(); ++j) {
      if (subset_mask(graph.node(j).bits(), bits)) fn(j);
    }
  }
}

}  // namespace

AttackGraph::AttackGraph(std::vector<PropositionSet> nodes, std::vector<Attack> edges)
    : nodes_(std::move(nodes)), attackers_(nodes_.size()), targets_(nodes_.size()) {
  index_.reserve(nodes_.size());
  for (std::size_t i = 0; i < nodes_.size(); ++i) {
    if (!index_.emplace(nodes_[i].bits(), i).second) {
      throw Error(ErrorKind::input_error, "attack graph has a repeated node " + render(nodes_[i]));
    }
  }
  for (const auto& e : edges) {
    if (e.attacked >= nodes_.size() || e.attacker >= nodes_.size()) {
      throw Error(ErrorKind::input_error, "attack edge refers to a missing node");
    }
    attackers_[e.attacked].push_back(static_cast<std::uint32_t>(e.attacker));
    targets_[e.attacker].push_back(static_cast<std::uint32_t>(e.attacked));
  }
  for (auto* lists : {&attackers_, &targets_}) {
    for (auto& list : *lists) {
      std::sort(list.begin(), list.end());
      list.erase(std::unique(list.begin(), list.end()), list.end());
    }
  }
  for (const auto& list : attackers_) edge_count_ += list.size();
}

std::optional<std::size_t> AttackGraph::index_of(const PropositionSet& set) const {
  if (nodes_.empty() || set.width() != nodes_.front().width()) return std::nullopt;
  const auto it = index_.find(set.bits());
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

bool AttackGraph::attacks(std::size_t attacker, std::size_t attacked) const {
  const auto& list = attackers_.at(attacked);
  return std::binary_search(list.begin(), list.end(), static_cast<std::uint32_t>(attacker));
}

std::vector<Attack> AttackGraph::edges() const {
  std::vector<Attack> out;
  out.reserve(edge_count_);
  for (std::size_t t = 0; t < attackers_.size(); ++t) {
    for (const auto a : attackers_[t]) out.push_back({t, a});
  }
  return out;
}

OpenFamily AttackGraph::family_of(std::span<const PropositionSet> sets) const {
  OpenFamily family(size());
  for (const auto& set : sets) {
    const auto index = index_of(set);
    if (!index) throw Error(ErrorKind::attack_endpoint_invalid, render(set) + " is not an open");
    family.set(*index);
  }
  return family;
}

std::vector<PropositionSet> AttackGraph::sets_of(const OpenFamily& family) const {
  std::vector<PropositionSet> out;
  for (auto i = family.find_first(); i != OpenFamily::npos; i = family.find_next(i)) {
    out.push_back(nodes_[i]);
  }
  return out;
}

std::vector<AttackViolation> validate_attack(const AttackGraph& graph) {
  std::vector<AttackViolation> out;
  const std::size_t m = graph.size();

  for (std::size_t i = 0; i < m; ++i) {
    for (std::size_t j = i; j < m; ++j) {
      const bool disjoint = !graph.node(i).intersects(graph.node(j));
      const bool attacked = graph.attacks(j, i) || graph.attacks(i, j);
      if (disjoint != attacked) {
        out.push_back({1,
                       {graph.node(i), graph.node(j)},
                       disjoint ? render(graph.node(i)) + " and " + render(graph.node(j)) +
                                      " are disjoint but neither attacks the other"
                                : render(graph.node(i)) + " and " + render(graph.node(j)) +
                                      " overlap yet an attack holds between them"});
      }
    }
  }

  for (std::size_t attacked = 0; attacked < m; ++attacked) {
    for (const auto attacker : graph.attackers_of(attacked)) {
      for_each_open_subset(graph, attacked, [&](std::size_t sub) {
        if (!graph.attacks(attacker, sub)) {
          out.push_back({2,
                         {graph.node(attacked), graph.node(sub), graph.node(attacker)},
                         render(graph.node(attacker)) + " attacks " + render(graph.node(attacked)) +
                             " but not its subset " + render(graph.node(sub))});
        }
      });
    }
  }

  const auto empty = m == 0 ? std::nullopt
                            : graph.index_of(PropositionSet::empty_set(graph.node(0).width()));
  if (!empty) {
    out.push_back({3, {}, "the empty set is not a node"});
    return out;
  }
  for (std::size_t t = 0; t < m; ++t) {
    if (t == *empty) continue;
    if (!graph.attacks(t, *empty)) {
      out.push_back({3, {graph.node(t)}, render(graph.node(t)) + " does not attack the empty set"});
    }
    if (graph.attacks(*empty, t)) {
      out.push_back({3, {graph.node(t)}, "the empty set attacks " + render(graph.node(t))});
    }
  }
  return out;
}

std::vector<Attack> close_downward(const std::vector<PropositionSet>& nodes,
                                   std::span<const Attack> edges) {
  const AttackGraph base(nodes, std::vector<Attack>(edges.begin(), edges.end()));
  std::set<std::pair<std::size_t, std::size_t>> closed;
  for (const auto& e : edges) {
    for_each_open_subset(base, e.attacked,
                         [&](std::size_t sub) { closed.emplace(sub, e.attacker); });
  }
  std::vector<Attack> out;
  out.reserve(closed.size());
  for (const auto& [attacked, attacker] : closed) out.push_back({attacked, attacker});
  return out;
}

std::vector<Attack> empty_set_edges(const std::vector<PropositionSet>& nodes) {
  std::vector<Attack> out;
  const auto it = std::find_if(nodes.begin(), nodes.end(), [](const auto& s) { return s.empty(); });
  if (it == nodes.end()) return out;
  const auto empty = static_cast<std::size_t>(it - nodes.begin());
  for (std::size_t t = 0; t < nodes.size(); ++t) out.push_back({empty, t});
  return out;
}

namespace {

// counter[a]: some member of `defenders` attacks a.
OpenFamily counterattacked(const AttackGraph& graph, const OpenFamily& defenders) {
  OpenFamily counter(graph.size());
  for (auto d = defenders.find_first(); d != OpenFamily::npos; d = defenders.find_next(d)) {
    for (const auto target : graph.targets_of(d)) counter.set(target);
  }
  return counter;
}

}  // namespace

bool defends(const AttackGraph& graph, const OpenFamily& defenders, std::size_t target) {
  for (const auto attacker : graph.attackers_of(target)) {
    bool countered = false;
    for (const auto a : graph.attackers_of(attacker)) {
      if (defenders.test(a)) {
        countered = true;
        break;
      }
    }
    if (!countered) return false;
  }
  return true;
}

OpenFamily characteristic(const AttackGraph& graph, const OpenFamily& defenders) {
  const OpenFamily counter = counterattacked(graph, defenders);
  OpenFamily out(graph.size());
  for (std::size_t t = 0; t < graph.size(); ++t) {
    const auto attackers = graph.attackers_of(t);
    const bool defended = std::all_of(attackers.begin(), attackers.end(),
                                      [&](std::uint32_t a) { return counter.test(a); });
    if (defended) out.set(t);
  }
  return out;
}

ExtensionReport grounded_extension(const AttackGraph& graph) {
  ExtensionReport report;
  OpenFamily current(graph.size());
  report.iterations.push_back(current);
  while (true) {
    OpenFamily next = characteristic(graph, current);
    report.iterations.push_back(next);
    if (next == current) break;
    current = std::move(next);
  }
  report.grounded = current;
  return report;
}

bool is_conflict_free(const AttackGraph& graph, const OpenFamily& family) {
  for (auto t = family.find_first(); t != OpenFamily::npos; t = family.find_next(t)) {
    for (const auto a : graph.attackers_of(t)) {
      if (family.test(a)) return false;
    }
  }
  return true;
}

bool is_admissible(const AttackGraph& graph, const OpenFamily& family) {
  return is_conflict_free(graph, family) && family.is_subset_of(characteristic(graph, family));
}

ExtensionFlags classify_extension(const AttackGraph& graph, const OpenFamily& family,
                                  const ClassifyOptions& options) {
  if (family.size() != graph.size()) {
    throw Error(ErrorKind::domain_mismatch, "family sized for another attack graph");
  }
  ExtensionFlags flags;
  flags.conflict_free = is_conflict_free(graph, family);
  const OpenFamily defended = characteristic(graph, family);
  flags.admissible = flags.conflict_free && family.is_subset_of(defended);
  flags.complete = flags.admissible && defended.is_subset_of(family);

  const OpenFamily hit = counterattacked(graph, family);
  flags.stable = flags.conflict_free && (family | hit).all();

  if (!options.compute_preferred) return flags;
  if (graph.size() > options.preferred_node_bound) {
    throw Error(ErrorKind::search_budget_exceeded,
                std::to_string(graph.size()) + " opens exceed the preferred-search bound of " +
                    std::to_string(options.preferred_node_bound));
  }
  if (!flags.admissible) {
    flags.preferred = false;
    return flags;
  }
  std::vector<std::size_t> outside;
  for (std::size_t t = 0; t < graph.size(); ++t) {
    if (!family.test(t)) outside.push_back(t);
  }
  const std::size_t k = outside.size();
  // Largest candidate supersets first; any admissible one refutes maximality.
  for (std::size_t size = k; size >= 1; --size) {
    std::uint32_t pick = (std::uint32_t{1} << size) - 1U;
    const std::uint32_t limit = std::uint32_t{1} << k;
    while (pick < limit) {
      OpenFamily candidate = family;
      for (std::size_t b = 0; b < k; ++b) {
        if ((pick >> b) & 1U) candidate.set(outside[b]);
      }
      if (is_admissible(graph, candidate)) {
        flags.preferred = false;
        return flags;
      }
      // Next mask with the same popcount.
      const std::uint32_t low = pick & (~pick + 1U);
      const std::uint32_t ripple = pick + low;
      pick = (((ripple ^ pick) >> 2U) / low) | ripple;
    }
  }
  flags.preferred = true;
  return flags;
}

bool is_symmetric(const AttackGraph& graph) {
  for (std::size_t t = 0; t < graph.size(); ++t) {
    if (graph.node(t).empty()) continue;
    for (const auto a : graph.attackers_of(t)) {
      if (!graph.node(a).empty() && !graph.attacks(t, a)) return false;
    }
  }
  return true;
}

bool is_transitive(const AttackGraph& graph) {
  for (std::size_t t1 = 0; t1 < graph.size(); ++t1) {
    for (const auto t2 : graph.attackers_of(t1)) {
      for (const auto t3 : graph.attackers_of(t2)) {
        if (!graph.attacks(t3, t1)) return false;
      }
    }
  }
  return true;
}

bool is_unambiguous(const AttackGraph& graph) {
  for (std::size_t t1 = 0; t1 < graph.size(); ++t1) {
    if (graph.node(t1).empty()) continue;
    for (const auto t2 : graph.attackers_of(t1)) {
      if (graph.node(t2).empty()) continue;
      for (const auto t3 : graph.attackers_of(t2)) {
        if (graph.node(t3).empty()) continue;
        if (graph.attacks(t3, t1) || graph.attacks(t1, t3)) return false;
      }
    }
  }
  return true;
}

bool is_conditionally_transitive(const AttackGraph& graph) {
  for (std::size_t t1 = 0; t1 < graph.size(); ++t1) {
    for (const auto t2 : graph.attackers_of(t1)) {
      for (const auto t3 : graph.attackers_of(t2)) {
        if (!graph.node(t1).intersects(graph.node(t3)) && !graph.attacks(t3, t1)) return false;
      }
    }
  }
  return true;
}

bool closed_under_intersection(const AttackGraph& graph, const OpenFamily& family) {
  for (auto i = family.find_first(); i != OpenFamily::npos; i = family.find_next(i)) {
    for (auto j = family.find_next(i); j != OpenFamily::npos; j = family.find_next(j)) {
      const auto meet = graph.index_of(graph.node(i) & graph.node(j));
      if (!meet || !family.test(*meet)) return false;
    }
  }
  return true;
}

bool closed_upward(const AttackGraph& graph, const OpenFamily& family) {
  for (auto i = family.find_first(); i != OpenFamily::npos; i = family.find_next(i)) {
    for (std::size_t j = 0; j < graph.size(); ++j) {
      if (graph.node(i).subset_of(graph.node(j)) && !family.test(j)) return false;
    }
  }
  return true;
}

bool attackers_of_meets_are_refuted(const AttackGraph& graph, const OpenFamily& family) {
  for (auto i = family.find_first(); i != OpenFamily::npos; i = family.find_next(i)) {
    for (auto j = i; j != OpenFamily::npos; j = family.find_next(j)) {
      const auto meet = graph.index_of(graph.node(i) & graph.node(j));
      if (!meet) return false;
      for (const auto t : graph.attackers_of(*meet)) {
        bool refuted = false;
        for (auto f = family.find_first(); f != OpenFamily::npos && !refuted; f = family.find_next(f)) {
          refuted = !graph.node(t).intersects(graph.node(f));
        }
        if (!refuted) return false;
      }
    }
  }
  return true;
}

std::string to_dot(const AttackGraph& graph, const std::vector<std::string>& world_labels) {
  auto name = [&](std::size_t i) {
    std::string out = "{";
    bool first = true;
    for (const auto w : graph.node(i).members()) {
      if (!first) out += ',';
      out += w < world_labels.size() ? world_labels[w] : std::to_string(w);
      first = false;
    }
    return out + "}";
  };
  std::ostringstream dot;
  dot << "digraph attack {\n";
  for (std::size_t i = 0; i < graph.size(); ++i) {
    if (!graph.node(i).empty()) dot << "  n" << i << " [label=\"" << name(i) << "\"];\n";
  }
  for (const auto& e : graph.edges()) {
    if (graph.node(e.attacked).empty() || graph.node(e.attacker).empty()) continue;
    dot << "  n" << e.attacker << " -> n" << e.attacked << ";\n";
  }
  dot << "}\n";
  return dot.str();
}

}  // namespace argbelief
