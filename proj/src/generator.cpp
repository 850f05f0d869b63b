#include "argbelief/generator.hpp"

#include <algorithm>
#include <limits>
#include <numeric>
#include <string>

namespace argbelief {

std::string_view to_string(GeneratorMode mode) noexcept {
  switch (mode) {
    case GeneratorMode::explicit_random: return "explicit";
    case GeneratorMode::symmetric: return "symmetric";
    case GeneratorMode::measure: return "measure";
    case GeneratorMode::transitive: return "transitive";
    case GeneratorMode::neighborhood: return "neighborhood";
    case GeneratorMode::probability: return "probability";
  }
  return "unknown";
}

GeneratorMode parse_generator_mode(std::string_view text) {
  for (const auto mode : {GeneratorMode::explicit_random, GeneratorMode::symmetric,
                          GeneratorMode::measure, GeneratorMode::transitive,
                          GeneratorMode::neighborhood, GeneratorMode::probability}) {
    if (text == to_string(mode)) return mode;
  }
  if (text == "explicit-random" || text == "explicit_random") return GeneratorMode::explicit_random;
  throw Error(ErrorKind::input_error, "unknown generator mode \"" + std::string(text) + "\"");
}

std::uint64_t SeededRandom::below(std::uint64_t bound) {
  if (bound <= 1) return 0;
  const std::uint64_t max = std::numeric_limits<std::uint64_t>::max();
  const std::uint64_t limit = max - (max % bound);
  std::uint64_t draw = next();
  while (draw >= limit) draw = next();
  return draw % bound;
}

double SeededRandom::unit() { return static_cast<double>(next() >> 11U) * 0x1.0p-53; }

namespace {

constexpr std::size_t kRetries = 64;
constexpr std::size_t kTransitiveRetries = 2000;

Domain numbered_domain(std::size_t n) {
  std::vector<std::string> labels;
  for (std::size_t i = 1; i <= n; ++i) labels.push_back(std::to_string(i));
  return Domain(std::move(labels));
}

PropositionSet random_subset(std::size_t n, SeededRandom& rng) {
  WorldMask bits = 0;
  for (std::size_t w = 0; w < n; ++w) {
    if (rng.chance(0.5)) bits |= WorldMask{1} << w;
  }
  return {n, bits};
}

Valuation random_valuation(std::size_t n, SeededRandom& rng) {
  Valuation v;
  v.emplace("p", random_subset(n, rng));
  v.emplace("q", random_subset(n, rng));
  return v;
}

void check_config(const GeneratorConfig& config) {
  if (config.world_count == 0) throw Error(ErrorKind::empty_domain, "world_count must be at least 1");
  if (config.world_count > config.max_worlds) {
    throw Error(ErrorKind::domain_too_large, std::to_string(config.world_count) +
                                                 " worlds exceed the cap of " +
                                                 std::to_string(config.max_worlds));
  }
  if (!(config.evidence_density >= 0.0 && config.evidence_density <= 1.0)) {
    throw Error(ErrorKind::input_error, "evidence_density must lie in [0, 1]");
  }
}

std::vector<PropositionSet> random_evidence(std::size_t n, double density, SeededRandom& rng) {
  std::vector<PropositionSet> evidence;
  const WorldMask all = PropositionSet::full_mask(n);
  for (WorldMask bits = 1; bits < all; ++bits) {
    if (rng.chance(density)) evidence.emplace_back(n, bits);
  }
  evidence.emplace_back(n, all);
  return evidence;
}

std::vector<std::size_t> nonempty_nodes(const Topology& topology) {
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < topology.size(); ++i) {
    if (!topology.open(i).empty()) out.push_back(i);
  }
  return out;
}

AttackSpec random_orientation(const Topology& topology, SeededRandom& rng) {
  AttackSpec spec;
  spec.mode = AttackMode::explicit_pairs;
  const auto nodes = nonempty_nodes(topology);
  for (std::size_t a = 0; a < nodes.size(); ++a) {
    for (std::size_t b = a + 1; b < nodes.size(); ++b) {
      const auto& s = topology.open(nodes[a]);
      const auto& t = topology.open(nodes[b]);
      if (s.intersects(t)) continue;
      switch (rng.below(3)) {
        case 0: spec.pairs.emplace_back(s, t); break;
        case 1: spec.pairs.emplace_back(t, s); break;
        default:
          spec.pairs.emplace_back(s, t);
          spec.pairs.emplace_back(t, s);
          break;
      }
    }
  }
  return spec;
}

// Ranks opens by a random linear extension of inclusion and lets the higher
// rank attack the lower; condition 2 then holds by construction.
AttackSpec ranked_orientation(const Topology& topology, SeededRandom& rng) {
  auto nodes = nonempty_nodes(topology);
  std::vector<std::uint64_t> key(topology.size());
  for (const auto i : nodes) key[i] = rng.next();
  std::sort(nodes.begin(), nodes.end(), [&](std::size_t a, std::size_t b) {
    const auto ca = topology.open(a).size();
    const auto cb = topology.open(b).size();
    return ca != cb ? ca < cb : key[a] < key[b];
  });
  AttackSpec spec;
  spec.mode = AttackMode::explicit_pairs;
  for (std::size_t lo = 0; lo < nodes.size(); ++lo) {
    for (std::size_t hi = lo + 1; hi < nodes.size(); ++hi) {
      const auto& low = topology.open(nodes[lo]);
      const auto& high = topology.open(nodes[hi]);
      if (!low.intersects(high)) spec.pairs.emplace_back(low, high);
    }
  }
  return spec;
}

}  // namespace

Model generate_random_model(const GeneratorConfig& config) {
  if (config.mode == GeneratorMode::neighborhood || config.mode == GeneratorMode::probability) {
    return generate_case(config).model;
  }
  check_config(config);
  const std::size_t n = config.world_count;
  SeededRandom rng(config.seed);
  const Domain domain = numbered_domain(n);
  const std::size_t retries =
      config.mode == GeneratorMode::transitive ? kTransitiveRetries : kRetries;

  for (std::size_t attempt = 0; attempt < retries; ++attempt) {
    auto evidence = random_evidence(n, config.evidence_density, rng);
    if (evidence.size() == 1 && n > 1) continue;
    const Topology topology = generate_topology(n, evidence);
    AttackSpec spec;
    ModelOptions options;
    options.max_worlds = config.max_worlds;
    switch (config.mode) {
      case GeneratorMode::explicit_random:
        spec = random_orientation(topology, rng);
        options.close = true;
        break;
      case GeneratorMode::symmetric:
        spec.mode = AttackMode::symmetric;
        break;
      case GeneratorMode::measure:
        spec.mode = AttackMode::measure;
        for (std::size_t w = 0; w < n; ++w) spec.weights.emplace_back(1 + rng.below(10));
        break;
      case GeneratorMode::transitive:
        spec = ranked_orientation(topology, rng);
        break;
      default: break;
    }
    Valuation valuation = random_valuation(n, rng);
    Model model = build_model(domain, std::move(evidence), std::move(spec), std::move(valuation), options);
    if (config.mode == GeneratorMode::transitive && !is_transitive(model.attack())) continue;
    return model;
  }
  throw Error(ErrorKind::generation_retry_exhausted,
              "no acceptable " + std::string(to_string(config.mode)) + " model for seed " +
                  std::to_string(config.seed) + " after " + std::to_string(retries) + " attempts");
}

NeighborhoodModel generate_neighborhood_model(std::size_t world_count, std::uint64_t seed) {
  if (world_count == 0) throw Error(ErrorKind::empty_domain, "world_count must be at least 1");
  SeededRandom rng(seed);
  const std::size_t n = world_count;
  const WorldMask all = PropositionSet::full_mask(n);
  std::vector<WorldMask> candidates;
  for (WorldMask bits = 1; bits < all; ++bits) candidates.push_back(bits);
  for (std::size_t i = candidates.size(); i > 1; --i) {
    std::swap(candidates[i - 1], candidates[rng.below(i)]);
  }
  // An up-closed family is complement-free iff its generators pairwise meet.
  std::vector<WorldMask> generators{all};
  for (const auto c : candidates) {
    const bool meets = std::all_of(generators.begin(), generators.end(),
                                   [&](WorldMask g) { return (g & c) != 0; });
    if (meets && rng.chance(0.5)) generators.push_back(c);
  }
  std::vector<PropositionSet> family;
  for (WorldMask bits = 1; bits <= all && bits != 0; ++bits) {
    const bool above = std::any_of(generators.begin(), generators.end(),
                                   [&](WorldMask g) { return (g & ~bits) == 0; });
    if (above) family.emplace_back(n, bits);
    if (bits == all) break;
  }
  return make_neighborhood_model(numbered_domain(n), std::move(family), random_valuation(n, rng));
}

ProbabilisticModel generate_probabilistic_model(std::size_t world_count, std::uint64_t seed) {
  if (world_count == 0) throw Error(ErrorKind::empty_domain, "world_count must be at least 1");
  SeededRandom rng(seed);
  std::vector<std::uint64_t> weights;
  for (std::size_t w = 0; w < world_count; ++w) weights.push_back(1 + rng.below(12));
  const std::uint64_t total = std::accumulate(weights.begin(), weights.end(), std::uint64_t{0});
  std::vector<Rational> masses;
  for (const auto w : weights) masses.emplace_back(Rational(w, total));
  return make_probabilistic_model(numbered_domain(world_count), std::move(masses),
                                  random_valuation(world_count, rng));
}

GeneratedCase generate_case(const GeneratorConfig& config) {
  check_config(config);
  ModelOptions options;
  options.max_worlds = config.max_worlds;
  switch (config.mode) {
    case GeneratorMode::neighborhood: {
      auto nmodel = generate_neighborhood_model(config.world_count, config.seed);
      Model model = from_neighborhood(nmodel, options);
      return {std::move(model), std::move(nmodel), std::nullopt};
    }
    case GeneratorMode::probability: {
      auto pmodel = generate_probabilistic_model(config.world_count, config.seed);
      Model model = to_argumentation_model(pmodel, options);
      return {std::move(model), std::nullopt, std::move(pmodel)};
    }
    default: return {generate_random_model(config), std::nullopt, std::nullopt};
  }
}

}  // namespace argbelief
