#pragma once

#include <string>
#include <utility>
#include <vector>

#include "argbelief/io.hpp"
#include "argbelief/model.hpp"
#include "oracles.hpp"

namespace testing_support {

namespace ab = argbelief;

inline std::string data_path(const std::string& name) { return std::string(ARGBELIEF_DATA_DIR) + "/" + name; }

using Pair = std::pair<std::vector<std::string>, std::vector<std::string>>;

// (attacked, attacker) pairs of the three-world example with the
// asymmetric attacks on the two-element sets.
inline std::vector<Pair> fig1_pairs() {
  return {{{"1"}, {"2"}},      {{"2"}, {"1"}},      {{"1"}, {"3"}},      {{"3"}, {"1"}},
          {{"2"}, {"3"}},      {{"3"}, {"2"}},      {{"3"}, {"1", "2"}}, {{"1"}, {"2", "3"}},
          {{"2"}, {"1", "3"}}, {{"1", "3"}, {"2"}}};
}

inline ab::ModelInput fig1_input(std::vector<Pair> pairs = fig1_pairs()) {
  ab::ModelInput in;
  in.worlds = {"1", "2", "3"};
  in.evidence = {{"1"}, {"2"}, {"3"}, {"1", "2"}, {"2", "3"}, {"1", "2", "3"}};
  in.mode = ab::AttackMode::explicit_pairs;
  in.pairs = std::move(pairs);
  in.valuation = {{"p", {"1", "2"}}, {"q", {"2", "3"}}, {"r", {"2"}}};
  return in;
}

inline ab::Model fig1() { return ab::build_model(fig1_input()); }

inline ab::PropositionSet set(const ab::Model& m, std::vector<std::string> labels) {
  return m.domain().make_set(labels);
}

inline std::vector<ab::PropositionSet> sets(const ab::Model& m, std::vector<std::vector<std::string>> family) {
  std::vector<ab::PropositionSet> out;
  for (auto& labels : family) out.push_back(m.domain().make_set(labels));
  return out;
}

inline std::vector<oracle::Mask> masks(const std::vector<ab::PropositionSet>& family) {
  std::vector<oracle::Mask> out;
  for (const auto& s : family) out.push_back(s.bits());
  return out;
}

inline oracle::AttackFn attack_fn(const ab::AttackGraph& g) {
  return [&g](std::size_t attacker, std::size_t attacked) { return g.attacks(attacker, attacked); };
}

inline oracle::Mask family_mask(const ab::OpenFamily& f) {
  oracle::Mask out = 0;
  for (std::size_t i = 0; i < f.size(); ++i) {
    if (f.test(i)) out |= oracle::Mask{1} << i;
  }
  return out;
}

}  // namespace testing_support
