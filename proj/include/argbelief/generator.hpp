#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <random>
#include <string_view>

#include "argbelief/logic.hpp"
#include "argbelief/model.hpp"
#include "argbelief/probabilistic.hpp"

namespace argbelief {

enum class GeneratorMode {
  /// Each conflicting pair of non-empty opens gets ->, <- or <-> uniformly,
  /// then downward closure and the empty-set edges.
  explicit_random,
  symmetric,
  /// Random positive integer weights per world.
  measure,
  /// Orientation by a random linear extension of inclusion, kept only if the
  /// result is transitive (retried).
  transitive,
  /// A random belief neighborhood turned into a model by `from_neighborhood`.
  neighborhood,
  /// A random strictly positive rational measure over singleton evidence.
  probability,
};

std::string_view to_string(GeneratorMode mode) noexcept;
GeneratorMode parse_generator_mode(std::string_view text);

struct GeneratorConfig {
  std::size_t world_count = 3;
  /// Chance that each non-empty proper subset becomes a piece of evidence.
  double evidence_density = 0.4;
  GeneratorMode mode = GeneratorMode::explicit_random;
  std::uint64_t seed = 0;
  std::size_t max_worlds = 16;
};

/// Deterministic draws from a seeded mt19937_64. Unlike the standard
/// distributions the mapping from engine output to values is fixed here, so a
/// seed reproduces the same model on every platform.
class SeededRandom {
 public:
  explicit SeededRandom(std::uint64_t seed) : engine_(seed) {}

  std::uint64_t next() { return engine_(); }
  /// Uniform in [0, bound).
  std::uint64_t below(std::uint64_t bound);
  /// Uniform in [0, 1).
  double unit();
  bool chance(double probability) { return unit() < probability; }

 private:
  std::mt19937_64 engine_;
};

/// Throws `generation_retry_exhausted` when no acceptable model turns up
/// within the retry bound.
Model generate_random_model(const GeneratorConfig& config);

NeighborhoodModel generate_neighborhood_model(std::size_t world_count, std::uint64_t seed);
ProbabilisticModel generate_probabilistic_model(std::size_t world_count, std::uint64_t seed);

/// A model together with the structure it was derived from, if any.
struct GeneratedCase {
  Model model;
  std::optional<NeighborhoodModel> neighborhood;
  std::optional<ProbabilisticModel> measure;
};

GeneratedCase generate_case(const GeneratorConfig& config);

}  // namespace argbelief
