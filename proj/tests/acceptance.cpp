// Acceptance suite: one PASS/FAIL line per criterion, exit status 1 if any fails.

#include <chrono>
#include <cstdio>
#include <functional>
#include <sstream>
#include <string>
#include <vector>

#include "argbelief/argumentation.hpp"
#include "argbelief/doxastics.hpp"
#include "argbelief/generator.hpp"
#include "argbelief/io.hpp"
#include "argbelief/logic.hpp"
#include "argbelief/probabilistic.hpp"
#include "oracles.hpp"

namespace ab = argbelief;

namespace {

using ab::GeneratorMode;
using ab::PropositionSet;

struct Outcome {
  bool ok = true;
  std::string note;
};

// Collects the first few failures of a criterion.
class Tally {
 public:
  void expect(bool condition, const std::string& what) {
    if (condition) return;
    ++failures_;
    if (failures_ <= 3) notes_ << (failures_ > 1 ? "; " : "") << what;
  }
  std::size_t failures() const { return failures_; }
  Outcome outcome(const std::string& summary) const {
    if (failures_ == 0) return {true, summary};
    return {false, std::to_string(failures_) + " failure(s): " + notes_.str()};
  }

 private:
  std::size_t failures_ = 0;
  std::ostringstream notes_;
};

std::string data_file(const std::string& name) { return std::string(ARGBELIEF_DATA_DIR) + "/" + name; }

std::vector<oracle::Mask> masks(const std::vector<PropositionSet>& family) {
  std::vector<oracle::Mask> out;
  for (const auto& s : family) out.push_back(s.bits());
  return out;
}

std::set<oracle::Mask> mask_set(const std::vector<PropositionSet>& family) {
  const auto m = masks(family);
  return {m.begin(), m.end()};
}

oracle::Mask family_mask(const ab::OpenFamily& f) {
  oracle::Mask out = 0;
  for (std::size_t i = 0; i < f.size(); ++i) {
    if (f.test(i)) out |= oracle::Mask{1} << i;
  }
  return out;
}

oracle::AttackFn attack_fn(const ab::AttackGraph& g) {
  return [&g](std::size_t attacker, std::size_t attacked) { return g.attacks(attacker, attacked); };
}

std::string describe(const ab::GeneratorConfig& c) {
  return std::string(ab::to_string(c.mode)) + " seed " + std::to_string(c.seed);
}

// The shared sweep: seeds 1..200, modes and world counts cycling.
std::vector<ab::GeneratorConfig> sweep_configs() {
  const GeneratorMode modes[] = {GeneratorMode::explicit_random, GeneratorMode::symmetric, GeneratorMode::measure,
                                 GeneratorMode::transitive, GeneratorMode::neighborhood};
  std::vector<ab::GeneratorConfig> out;
  for (std::uint64_t seed = 1; seed <= 200; ++seed) {
    ab::GeneratorConfig c;
    c.seed = seed;
    c.mode = modes[seed % 5];
    c.world_count = 1 + (seed / 5) % 4;
    out.push_back(c);
  }
  return out;
}

const std::vector<ab::Model>& sweep_models() {
  static const std::vector<ab::Model> models = [] {
    std::vector<ab::Model> out;
    for (const auto& c : sweep_configs()) out.push_back(ab::generate_random_model(c));
    return out;
  }();
  return models;
}

Outcome figure_one() {
  Tally t;
  const auto m = ab::model_from_json(ab::read_json_file(data_file("fig1.json")));
  const auto& d = m.domain();
  t.expect(m.topology().is_discrete() && m.world_count() == 3, "topology is not the powerset of {1,2,3}");
  const std::vector<PropositionSet> expected{d.make_set({"1", "2"}), d.make_set({"2", "3"}), d.full()};
  t.expect(m.grounded_sets() == expected, "grounded extension " + d.format_family(m.grounded_sets()));
  t.expect(ab::believes_grounded(m, d.make_set({"1", "2"})).believed, "B{1,2} is false");
  t.expect(ab::believes_grounded(m, d.make_set({"2", "3"})).believed, "B{2,3} is false");
  t.expect(!ab::believes_grounded(m, d.make_set({"2"})).believed, "B{2} is true");
  return t.outcome("LFP = " + d.format_family(m.grounded_sets()));
}

Outcome axiom_soundness() {
  Tally t;
  const auto configs = sweep_configs();
  const auto& models = sweep_models();
  for (std::size_t i = 0; i < models.size(); ++i) {
    const auto report = ab::check_axioms(models[i]);
    for (const auto s : {ab::Schema::four, ab::Schema::five, ab::Schema::d, ab::Schema::m, ab::Schema::n}) {
      t.expect(report.result(s).valid, report.result(s).name + " fails on " + describe(configs[i]));
    }
  }
  return t.outcome(std::to_string(models.size()) + " models, |X| <= 4");
}

Outcome non_theorem_c() {
  Tally t;
  const auto m = ab::model_from_json(ab::read_json_file(data_file("fig1.json")));
  const auto report = ab::check_axioms(m);
  const auto& c = report.result(ab::Schema::c);
  const auto& d = m.domain();
  t.expect(!c.valid, "C holds");
  t.expect(c.witness == std::vector<PropositionSet>{d.make_set({"1", "2"}), d.make_set({"2", "3"})},
           "witness " + d.format_family(c.witness));
  return t.outcome("C falsified at " + d.format_family(c.witness));
}

Outcome upward_closure_and_justification() {
  Tally t;
  const auto configs = sweep_configs();
  const auto& models = sweep_models();
  for (std::size_t i = 0; i < models.size(); ++i) {
    const auto& m = models[i];
    const auto& g = m.attack();
    const auto& lfp = m.grounded().grounded;
    const auto name = describe(configs[i]);
    for (std::size_t a = 0; a < g.size(); ++a) {
      for (std::size_t b = 0; b < g.size(); ++b) {
        if (lfp.test(a) && g.node(a).subset_of(g.node(b))) t.expect(lfp.test(b), "LFP not upward closed on " + name);
      }
    }
    const auto n = m.world_count();
    const auto full = PropositionSet::full_mask(n);
    for (ab::WorldMask p = 0; p <= full; ++p) {
      const bool bp = ab::believes_grounded(m, {n, p}).believed;
      for (ab::WorldMask q = p; q <= full; ++q) {
        if ((p & ~q) == 0 && bp) t.expect(ab::believes_grounded(m, {n, q}).believed, "B not upward closed on " + name);
      }
      if (ab::believes_evidence_based(m, {n, p}).believed) t.expect(bp, "Bel without B on " + name);
    }
    const auto unattacked = ab::characteristic(g, g.empty_family());
    for (const auto& j : ab::justification_set(m).opens) {
      t.expect(unattacked.test(*g.index_of(j)), "J not within d({}) on " + name);
    }
    t.expect(unattacked.is_subset_of(lfp), "d({}) not within LFP on " + name);
  }
  return t.outcome(std::to_string(models.size()) + " models, all opens and propositions");
}

Outcome intersection_closure() {
  Tally t;
  auto closed = [](const ab::Model& m) {
    const auto fam = mask_set(m.grounded_sets());
    for (const auto a : fam) {
      for (const auto b : fam) {
        if (fam.count(a & b) == 0) return false;
      }
    }
    return true;
  };
  auto build = [](GeneratorMode mode, std::uint64_t seed) {
    ab::GeneratorConfig c;
    c.seed = seed;
    c.mode = mode;
    c.world_count = 1 + seed % 4;
    return ab::generate_random_model(c);
  };
  for (std::uint64_t seed = 1; seed <= 100; ++seed) {
    const auto sym = build(GeneratorMode::symmetric, seed);
    t.expect(ab::is_symmetric(sym.attack()), "symmetric seed " + std::to_string(seed) + " is not symmetric");
    t.expect(closed(sym), "symmetric seed " + std::to_string(seed));
    const auto j = oracle::justifications(mask_set(sym.topology().opens()),
                                          oracle::combined(sym.world_count(), masks(sym.evidence())));
    t.expect(mask_set(sym.grounded_sets()) == j, "LFP != J on symmetric seed " + std::to_string(seed));

    const auto tr = build(GeneratorMode::transitive, seed);
    t.expect(ab::is_transitive(tr.attack()), "transitive seed " + std::to_string(seed) + " is not transitive");
    t.expect(closed(tr), "transitive seed " + std::to_string(seed));
  }
  std::size_t unambiguous = 0;
  for (std::uint64_t seed = 1; seed <= 20000 && unambiguous < 100; ++seed) {
    const auto m = build(GeneratorMode::explicit_random, seed);
    if (!ab::is_unambiguous(m.attack())) continue;
    ++unambiguous;
    t.expect(closed(m), "unambiguous seed " + std::to_string(seed));
  }
  t.expect(unambiguous == 100, "only " + std::to_string(unambiguous) + " unambiguous models found");
  return t.outcome("100 symmetric, 100 transitive, 100 unambiguous");
}

Outcome neighborhood_round_trip() {
  Tally t;
  for (std::uint64_t seed = 1; seed <= 100; ++seed) {
    const auto n = ab::generate_neighborhood_model(1 + seed % 4, seed);
    const auto m = ab::from_neighborhood(n);
    t.expect(ab::validate_attack(m.attack()).empty(), "invalid attack for seed " + std::to_string(seed));
    t.expect(mask_set(m.grounded_sets()) == mask_set(n.neighborhood()), "LFP != N for seed " + std::to_string(seed));
  }
  return t.outcome("100 neighborhoods, |X| <= 4");
}

Outcome oracle_equivalence() {
  Tally t;
  const auto configs = sweep_configs();
  const auto& models = sweep_models();
  std::size_t compared = 0;
  for (std::size_t i = 0; i < models.size(); ++i) {
    const auto& g = models[i].attack();
    if (g.size() > 16) continue;
    ++compared;
    const auto lfp = oracle::least_fixed_point(g.size(), attack_fn(g));
    t.expect(lfp && *lfp == family_mask(models[i].grounded().grounded), "mismatch on " + describe(configs[i]));
  }
  return t.outcome(std::to_string(compared) + " models with |tau| <= 16");
}

Outcome vbp_bel() {
  Tally t;
  const auto configs = sweep_configs();
  const auto& models = sweep_models();
  for (std::size_t i = 0; i < models.size(); ++i) {
    const auto& m = models[i];
    const auto n = m.world_count();
    const auto opens = mask_set(m.topology().opens());
    const auto ev = masks(m.evidence());
    for (ab::WorldMask p = 0; p <= PropositionSet::full_mask(n); ++p) {
      const bool vbp = ab::believes_maximal_body(m, {n, p}).believed;
      const bool bel = ab::believes_evidence_based(m, {n, p}).believed;
      t.expect(vbp == bel, "disagreement on " + describe(configs[i]));
      t.expect(vbp == oracle::vbp(n, ev, p) && bel == oracle::bel(opens, p), "oracle mismatch on " + describe(configs[i]));
    }
  }
  return t.outcome(std::to_string(models.size()) + " models, all propositions");
}

Outcome probabilistic_correspondence() {
  Tally t;
  for (std::uint64_t seed = 1; seed <= 100; ++seed) {
    const std::size_t n = 1 + seed % 4;
    const auto pm = ab::generate_probabilistic_model(n, seed);
    const auto name = "measure seed " + std::to_string(seed);
    t.expect(pm.strictly_positive(), name + " has a zero mass");
    const auto report = ab::pb_grounded_correspondence(pm);
    t.expect(report.attack_valid, name + ": attack invalid");
    t.expect(report.conditionally_transitive, name + ": not conditionally transitive");
    t.expect(report.holds(), name + ": correspondence fails");
    std::set<oracle::Mask> above;
    for (ab::WorldMask s = 0; s <= PropositionSet::full_mask(n); ++s) {
      ab::Rational mass = 0;
      for (std::size_t w = 0; w < n; ++w) {
        if (((s >> w) & 1U) != 0) mass += pm.masses()[w];
      }
      if (mass > ab::one_half()) above.insert(s);
    }
    const auto m = ab::to_argumentation_model(pm);
    t.expect(mask_set(m.grounded_sets()) == above, name + ": LFP differs from the measure threshold");
  }
  const auto uniform = ab::probabilistic_from_json(ab::read_json_file(data_file("uniform3.json")));
  const auto witness = ab::parse_formula("B p & B q & ~B(p & q)");
  t.expect(ab::believes_probabilistic(uniform, witness), "uniform witness fails under PB");
  const auto m = ab::to_argumentation_model(uniform);
  t.expect(ab::extension(m, ab::parse_formula("p & q")).size() == 1, "uniform fixture valuation");
  t.expect(ab::extension(m, witness).is_full(), "uniform witness fails under grounded belief");
  return t.outcome("100 measures plus the uniform 1/3 witness");
}

struct Criterion {
  int number;
  std::string title;
  double limit_seconds;  // 0: untimed
  std::function<Outcome()> run;
};

}  // namespace

int main() {
  const std::vector<Criterion> criteria{
      {1, "three-world example reproduction", 1.0, figure_one},
      {2, "axiom soundness sweep", 30.0, axiom_soundness},
      {3, "C falsified on the example", 1.0, non_theorem_c},
      {4, "upward closure and J within d({})", 0.0, upward_closure_and_justification},
      {5, "intersection closure under sufficient conditions", 0.0, intersection_closure},
      {6, "neighborhood round trip", 30.0, neighborhood_round_trip},
      {7, "grounded extension vs fixed-point oracle", 0.0, oracle_equivalence},
      {8, "maximal-body belief equals Bel", 0.0, vbp_bel},
      {9, "measure correspondence", 60.0, probabilistic_correspondence},
  };
  bool all = true;
  for (const auto& c : criteria) {
    const auto start = std::chrono::steady_clock::now();
    Outcome out;
    try {
      out = c.run();
    } catch (const std::exception& e) {
      out = {false, std::string("exception: ") + e.what()};
    }
    const double seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (c.limit_seconds > 0 && seconds >= c.limit_seconds) {
      out.ok = false;
      out.note += " (over the " + std::to_string(c.limit_seconds).substr(0, 4) + " s limit)";
    }
    all = all && out.ok;
    std::printf("%s  %d  %-50s %8.3f s  %s\n", out.ok ? "PASS" : "FAIL", c.number, c.title.c_str(), seconds,
                out.note.c_str());
  }
  return all ? 0 : 1;
}
