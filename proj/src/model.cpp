#include "argbelief/model.hpp"

#include <algorithm>
#include <string>

namespace argbelief {

std::string_view to_string(AttackMode mode) noexcept {
  switch (mode) {
    case AttackMode::explicit_pairs: return "explicit";
    case AttackMode::symmetric: return "symmetric";
    case AttackMode::measure: return "measure";
  }
  return "unknown";
}

AttackInvalid::AttackInvalid(AttackViolation violation)
    : Error(ErrorKind::attack_invalid,
            "condition " + std::to_string(violation.condition) + ": " + violation.description),
      violation_(std::move(violation)) {}

Rational weight_of(const PropositionSet& set, const std::vector<Rational>& weights) {
  Rational total = 0;
  for (const auto w : set.members()) total += weights.at(w);
  return total;
}

std::vector<Attack> measure_attack_edges(const std::vector<PropositionSet>& nodes,
                                         const std::vector<Rational>& weights) {
  std::vector<Rational> mass;
  mass.reserve(nodes.size());
  for (const auto& n : nodes) mass.push_back(weight_of(n, weights));
  std::vector<Attack> out;
  for (std::size_t a = 0; a < nodes.size(); ++a) {
    for (std::size_t b = 0; b < nodes.size(); ++b) {
      if ((nodes[a].bits() & nodes[b].bits()) == 0 && mass[a] <= mass[b]) out.push_back({a, b});
    }
  }
  return out;
}

std::vector<Attack> symmetric_attack_edges(const std::vector<PropositionSet>& nodes) {
  std::vector<Attack> out = empty_set_edges(nodes);
  for (std::size_t a = 0; a < nodes.size(); ++a) {
    for (std::size_t b = 0; b < nodes.size(); ++b) {
      if (!nodes[a].empty() && !nodes[b].empty() && (nodes[a].bits() & nodes[b].bits()) == 0) {
        out.push_back({a, b});
      }
    }
  }
  return out;
}

namespace {

std::vector<Attack> explicit_edges(const Topology& topology, const Domain& domain,
                                   const AttackSpec& spec, bool close) {
  std::vector<Attack> edges;
  for (const auto& [attacked, attacker] : spec.pairs) {
    const auto a = topology.index_of(attacked);
    const auto b = topology.index_of(attacker);
    if (!a || !b) {
      throw Error(ErrorKind::attack_endpoint_invalid,
                  "attack " + domain.format(attacked) + " <- " + domain.format(attacker) +
                      " names a set that is not open");
    }
    if (attacked.empty() || attacker.empty()) {
      throw Error(ErrorKind::attack_endpoint_invalid,
                  "explicit attacks relate non-empty opens; the empty-set edges are implied");
    }
    edges.push_back({*a, *b});
  }
  if (close) edges = close_downward(topology.opens(), edges);
  const auto implied = empty_set_edges(topology.opens());
  edges.insert(edges.end(), implied.begin(), implied.end());
  return edges;
}

}  // namespace

Model build_model(Domain domain, std::vector<PropositionSet> evidence, AttackSpec attack,
                  Valuation valuation, const ModelOptions& options) {
  const std::size_t n = domain.size();
  if (n == 0) throw Error(ErrorKind::empty_domain, "a model needs at least one world");
  if (n > options.max_worlds) {
    throw Error(ErrorKind::domain_too_large, std::to_string(n) + " worlds exceed the cap of " +
                                                 std::to_string(options.max_worlds));
  }
  Model model;
  for (const auto& piece : evidence) {
    if (piece.width() != n) {
      throw Error(ErrorKind::evidence_outside_domain, "evidence piece over another domain");
    }
    if (piece.empty()) throw Error(ErrorKind::empty_evidence_piece, "evidence pieces must be non-empty");
  }
  canonicalize(evidence);
  const PropositionSet all = domain.full();
  if (std::find(evidence.begin(), evidence.end(), all) == evidence.end()) {
    if (options.strict) {
      throw Error(ErrorKind::missing_unit, "the whole domain is not among the evidence");
    }
    evidence.push_back(all);
    canonicalize(evidence);
    model.warnings_.push_back("the whole domain was missing from the evidence and has been added");
  }
  validate_valuation(domain, valuation);

  Topology topology = generate_topology(n, evidence);
  std::vector<Attack> edges;
  switch (attack.mode) {
    case AttackMode::explicit_pairs:
      edges = explicit_edges(topology, domain, attack, options.close);
      break;
    case AttackMode::symmetric:
      edges = symmetric_attack_edges(topology.opens());
      break;
    case AttackMode::measure:
      if (attack.weights.size() != n) {
        throw Error(ErrorKind::input_error, "measure mode needs one weight per world");
      }
      for (std::size_t w = 0; w < n; ++w) {
        if (attack.weights[w] <= 0) {
          throw Error(ErrorKind::zero_mass_world,
                      "world " + domain.label(w) + " has non-positive weight " +
                          format_rational(attack.weights[w]));
        }
      }
      edges = measure_attack_edges(topology.opens(), attack.weights);
      break;
  }
  AttackGraph graph(topology.opens(), std::move(edges));
  if (auto violations = validate_attack(graph); !violations.empty()) {
    throw AttackInvalid(std::move(violations.front()));
  }

  model.domain_ = std::move(domain);
  model.evidence_ = std::move(evidence);
  model.topology_ = std::move(topology);
  model.spec_ = std::move(attack);
  model.attack_ = std::move(graph);
  model.valuation_ = std::move(valuation);
  model.grounded_ = grounded_extension(model.attack_);
  return model;
}

Model build_model(const ModelInput& input, const ModelOptions& options) {
  if (input.worlds.empty()) throw Error(ErrorKind::empty_domain, "a model needs at least one world");
  if (input.worlds.size() > options.max_worlds) {
    throw Error(ErrorKind::domain_too_large, std::to_string(input.worlds.size()) +
                                                 " worlds exceed the cap of " +
                                                 std::to_string(options.max_worlds));
  }
  Domain domain(input.worlds);
  std::vector<PropositionSet> evidence;
  for (const auto& piece : input.evidence) {
    try {
      evidence.push_back(domain.make_set(piece));
    } catch (const Error& e) {
      if (e.kind() != ErrorKind::unknown_world) throw;
      throw Error(ErrorKind::evidence_outside_domain, e.what());
    }
  }
  AttackSpec spec;
  spec.mode = input.mode;
  for (const auto& [attacked, attacker] : input.pairs) {
    spec.pairs.emplace_back(domain.make_set(attacked), domain.make_set(attacker));
  }
  if (input.mode == AttackMode::measure) {
    spec.weights.assign(domain.size(), Rational(0));
    for (const auto& [label, weight] : input.weights) {
      const auto index = domain.index_of(label);
      if (!index) throw Error(ErrorKind::unknown_world, "weight for unknown world \"" + label + "\"");
      spec.weights[*index] = weight;
    }
  }
  Valuation valuation;
  for (const auto& [atom, worlds] : input.valuation) valuation.emplace(atom, domain.make_set(worlds));
  return build_model(std::move(domain), std::move(evidence), std::move(spec), std::move(valuation),
                     options);
}

}  // namespace argbelief
