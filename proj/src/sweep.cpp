#include "argbelief/sweep.hpp"

#include <algorithm>
#include <chrono>
#include <limits>

#include "argbelief/doxastics.hpp"
#include "argbelief/io.hpp"
#include "argbelief/topology.hpp"

namespace argbelief {

namespace {

constexpr std::size_t kOracleMaxOpens = 16;
constexpr std::size_t kModalDepth = 3;

std::vector<PropositionSet> all_propositions(std::size_t width) {
  std::vector<PropositionSet> out;
  for (std::uint64_t bits = 0; bits < (std::uint64_t{1} << width); ++bits) {
    out.emplace_back(width, static_cast<WorldMask>(bits));
  }
  std::sort(out.begin(), out.end(), CanonicalLess{});
  return out;
}

std::string family_text(const Model& model, const std::vector<PropositionSet>& family) {
  return model.domain().format_family(family);
}

PropertyOutcome check_validate(const GeneratedCase& c) {
  const auto violations = validate_attack(c.model.attack());
  if (violations.empty()) return PropertyOutcome::pass();
  return PropertyOutcome::fail("condition " + std::to_string(violations.front().condition) + ": " +
                               violations.front().description);
}

PropertyOutcome check_prop31(const GeneratedCase& c) {
  const auto& graph = c.model.attack();
  if (!closed_upward(graph, c.model.grounded().grounded)) {
    return PropertyOutcome::fail("grounded extension " + family_text(c.model, c.model.grounded_sets()) +
                                 " is not closed under open supersets");
  }
  const auto props = all_propositions(c.model.world_count());
  for (const auto& p : props) {
    if (!believes_grounded(c.model, p).believed) continue;
    for (const auto& q : props) {
      if (p.subset_of(q) && !believes_grounded(c.model, q).believed) {
        return PropertyOutcome::fail("B " + c.model.domain().format(p) + " holds but B " +
                                     c.model.domain().format(q) + " does not");
      }
    }
  }
  return PropertyOutcome::pass();
}

PropertyOutcome check_prop34(const GeneratedCase& c) {
  const auto cmp = compare_beliefs(c.model);
  if (!cmp.justification_within_unattacked) return PropertyOutcome::fail("J is not within d({})");
  if (!cmp.unattacked_within_grounded) return PropertyOutcome::fail("d({}) is not within the grounded extension");
  for (const auto& row : cmp.rows) {
    if (row.evidence_based && !row.grounded) {
      return PropertyOutcome::fail("Bel " + c.model.domain().format(row.proposition) + " without B");
    }
  }
  return PropertyOutcome::pass();
}

bool same_family(const std::vector<PropositionSet>& a, std::vector<PropositionSet> b) {
  canonicalize(b);
  return a == b;
}

PropertyOutcome check_prop32(const GeneratedCase& c) {
  const auto& graph = c.model.attack();
  const bool symmetric = is_symmetric(graph);
  if (!symmetric && !is_transitive(graph) && !is_unambiguous(graph)) {
    return PropertyOutcome::skip("attack is neither symmetric, transitive nor unambiguous");
  }
  if (!closed_under_intersection(graph, c.model.grounded().grounded)) {
    return PropertyOutcome::fail("grounded extension " + family_text(c.model, c.model.grounded_sets()) +
                                 " is not closed under intersection");
  }
  if (symmetric && !same_family(c.model.grounded_sets(), justification_set(c.model).opens)) {
    return PropertyOutcome::fail("symmetric attack but the grounded extension differs from J");
  }
  return PropertyOutcome::pass();
}

PropertyOutcome check_closure(const GeneratedCase& c) {
  if (closed_under_intersection(c.model.attack(), c.model.grounded().grounded)) return PropertyOutcome::pass();
  return PropertyOutcome::fail("grounded extension " + family_text(c.model, c.model.grounded_sets()) +
                               " is not closed under intersection");
}

PropertyOutcome check_lemma_a1(const GeneratedCase& c) {
  const auto& graph = c.model.attack();
  const auto& lfp = c.model.grounded().grounded;
  const bool lhs = closed_under_intersection(graph, lfp);
  const bool rhs = attackers_of_meets_are_refuted(graph, lfp);
  if (lhs == rhs) return PropertyOutcome::pass();
  return PropertyOutcome::fail(std::string("closure under intersection is ") + (lhs ? "true" : "false") +
                               " but the attacker criterion is " + (rhs ? "true" : "false"));
}

// Least fixed point of d by brute force: the fixed point contained in every
// other fixed point.
PropertyOutcome check_lfp_oracle(const GeneratedCase& c) {
  const auto& graph = c.model.attack();
  const std::size_t n = graph.size();
  if (n > kOracleMaxOpens) return PropertyOutcome::skip("more than 16 opens");
  std::vector<std::uint32_t> attacked_by(n, 0);
  for (std::size_t i = 0; i < n; ++i) {
    for (const auto a : graph.attackers_of(i)) attacked_by[i] |= std::uint32_t{1} << a;
  }
  auto d = [&](std::uint32_t family) {
    std::uint32_t out = 0;
    for (std::size_t i = 0; i < n; ++i) {
      bool defended = true;
      for (std::size_t a = 0; a < n && defended; ++a) {
        if ((attacked_by[i] >> a & 1U) != 0 && (attacked_by[a] & family) == 0) defended = false;
      }
      if (defended) out |= std::uint32_t{1} << i;
    }
    return out;
  };
  std::optional<std::uint32_t> least;
  std::vector<std::uint32_t> fixed;
  for (std::uint64_t family = 0; family < (std::uint64_t{1} << n); ++family) {
    const auto f = static_cast<std::uint32_t>(family);
    if (d(f) == f) fixed.push_back(f);
  }
  for (const auto f : fixed) {
    if (std::all_of(fixed.begin(), fixed.end(), [&](std::uint32_t g) { return (f & ~g) == 0; })) least = f;
  }
  if (!least) return PropertyOutcome::fail("no least fixed point among " + std::to_string(fixed.size()));
  std::uint32_t iterative = 0;
  for (std::size_t i = 0; i < n; ++i) {
    if (c.model.grounded().grounded.test(i)) iterative |= std::uint32_t{1} << i;
  }
  if (iterative == *least) return PropertyOutcome::pass();
  OpenFamily expected(n);
  for (std::size_t i = 0; i < n; ++i) expected.set(i, (*least >> i & 1U) != 0);
  return PropertyOutcome::fail("iteration gives " + family_text(c.model, c.model.grounded_sets()) +
                               ", exhaustive search gives " + family_text(c.model, graph.sets_of(expected)));
}

PropertyOutcome check_vbp_bel(const GeneratedCase& c) {
  for (const auto& p : all_propositions(c.model.world_count())) {
    const bool vbp = believes_maximal_body(c.model, p).believed;
    const bool bel = believes_evidence_based(c.model, p).believed;
    if (vbp != bel) {
      return PropertyOutcome::fail("maximal-body belief and Bel disagree on " + c.model.domain().format(p));
    }
  }
  return PropertyOutcome::pass();
}

PropertyOutcome check_axioms_sound(const GeneratedCase& c) {
  if (c.model.world_count() > kMaxWorldsForAxioms) return PropertyOutcome::skip("too many worlds");
  const auto report = check_axioms(c.model);
  for (const auto& r : report.results) {
    if (!r.in_axiom_system || r.valid) continue;
    std::string witness;
    for (const auto& w : r.witness) witness += (witness.empty() ? "" : ", ") + c.model.domain().format(w);
    return PropertyOutcome::fail("schema " + r.name + " fails at " + witness);
  }
  return PropertyOutcome::pass();
}

PropertyOutcome check_grounded_invariants(const GeneratedCase& c) {
  const auto& graph = c.model.attack();
  const auto& lfp = c.model.grounded().grounded;
  ClassifyOptions options;
  options.compute_preferred = false;
  const auto flags = classify_extension(graph, lfp, options);
  if (!flags.conflict_free) return PropertyOutcome::fail("grounded extension is not conflict-free");
  if (!flags.complete) return PropertyOutcome::fail("grounded extension is not complete");
  const auto unit = graph.index_of(c.model.domain().full());
  if (!unit || !lfp.test(*unit)) return PropertyOutcome::fail("grounded extension misses the whole domain");
  return PropertyOutcome::pass();
}

PropertyOutcome check_lfp_eq_neighborhood(const GeneratedCase& c) {
  if (!c.neighborhood) return PropertyOutcome::skip("not built from a neighborhood");
  if (c.model.grounded_sets() == c.neighborhood->neighborhood()) return PropertyOutcome::pass();
  return PropertyOutcome::fail("grounded extension " + family_text(c.model, c.model.grounded_sets()) +
                               " differs from N " + family_text(c.model, c.neighborhood->neighborhood()));
}

PropertyOutcome check_modal_equivalence(const GeneratedCase& c) {
  const std::size_t n = c.model.world_count();
  const auto grounded = grounded_belief_test(c.model);
  if (c.neighborhood &&
      !modally_equivalent(n, c.model.valuation(), grounded, neighborhood_belief_test(*c.neighborhood), kModalDepth)) {
    return PropertyOutcome::fail("model and its source neighborhood are not modally equivalent");
  }
  if (c.measure &&
      !modally_equivalent(n, c.model.valuation(), grounded, probabilistic_belief_test(*c.measure), kModalDepth)) {
    return PropertyOutcome::fail("model and its source measure are not modally equivalent");
  }
  const Model round_trip = from_neighborhood(to_neighborhood(c.model));
  if (!modally_equivalent(n, c.model.valuation(), grounded, grounded_belief_test(round_trip), kModalDepth)) {
    return PropertyOutcome::fail("round trip through the neighborhood model changes beliefs");
  }
  return PropertyOutcome::pass();
}

PropertyOutcome check_mu_correspondence(const GeneratedCase& c) {
  if (!c.measure) return PropertyOutcome::skip("not built from a measure");
  if (c.measure->domain().size() > kMaxWorldsForCorrespondence) return PropertyOutcome::skip("too many worlds");
  const auto report = pb_grounded_correspondence(*c.measure);
  if (!report.attack_valid) return PropertyOutcome::fail("measure attack breaks the attack conditions");
  if (!report.conditionally_transitive) return PropertyOutcome::fail("measure attack is not conditionally transitive");
  if (!report.grounded_equals_threshold_family) {
    return PropertyOutcome::fail("grounded extension " + family_text(c.model, report.grounded) +
                                 " differs from the sets above 1/2 " + family_text(c.model, report.above_half));
  }
  if (!report.beliefs_agree) return PropertyOutcome::fail("B and PB disagree");
  return PropertyOutcome::pass();
}

std::vector<PropertyDef> make_registry() {
  using K = PropertyKind;
  return {
      {"validate", "attack relation meets the three conditions", K::required, check_validate},
      {"prop31", "grounded extension and grounded belief are closed upward", K::required, check_prop31},
      {"prop34", "J within d({}) within the grounded extension, so Bel implies B", K::required, check_prop34},
      {"prop32", "symmetric, transitive or unambiguous attack gives an intersection-closed grounded extension",
       K::required, check_prop32},
      {"closure_under_intersection", "grounded extension closed under intersection",
       K::sufficient_condition_only, check_closure},
      {"lemma_a1", "intersection closure iff attackers of meets are refuted", K::required, check_lemma_a1},
      {"lfp_oracle", "iterated grounded extension equals the exhaustive least fixed point", K::required,
       check_lfp_oracle},
      {"vbp_bel", "maximal-body belief coincides with Bel", K::required, check_vbp_bel},
      {"axioms_sound", "4, 5, D, M, N and RE hold", K::required, check_axioms_sound},
      {"grounded_invariants", "grounded extension is conflict-free, complete and contains X", K::required,
       check_grounded_invariants},
      {"lfp_eq_neighborhood", "grounded extension of a neighborhood-built model equals N", K::required,
       check_lfp_eq_neighborhood},
      {"modal_equivalence", "source structures and round trips agree on formulas of depth 3", K::required,
       check_modal_equivalence},
      {"mu_correspondence", "measure attack gives grounded belief = probability above 1/2", K::required,
       check_mu_correspondence},
  };
}

json config_to_json(const GeneratorConfig& config) {
  return {{"seed", config.seed},
          {"world_count", config.world_count},
          {"evidence_density", config.evidence_density},
          {"mode", std::string(to_string(config.mode))}};
}

}  // namespace

const std::vector<PropertyDef>& property_registry() {
  static const std::vector<PropertyDef> registry = make_registry();
  return registry;
}

const PropertyDef& find_property(const std::string& name) {
  const auto& registry = property_registry();
  const auto it = std::find_if(registry.begin(), registry.end(), [&](const PropertyDef& p) { return p.name == name; });
  if (it == registry.end()) throw Error(ErrorKind::unknown_property, "no property named \"" + name + "\"");
  return *it;
}

bool SweepReport::ok() const {
  return std::none_of(failures.begin(), failures.end(), [](const SweepFailure& f) { return f.fatal; });
}

json SweepReport::to_json() const {
  json props = json::array();
  for (const auto& t : tallies) {
    props.push_back({{"name", t.name},
                     {"kind", t.kind == PropertyKind::required ? "required" : "sufficient_condition_only"},
                     {"runs", t.runs},
                     {"passed", t.passed},
                     {"failed", t.failed},
                     {"not_applicable", t.not_applicable}});
  }
  json fails = json::array();
  for (const auto& f : failures) {
    fails.push_back({{"property", f.property},
                     {"config", config_to_json(f.config)},
                     {"detail", f.detail},
                     {"fatal", f.fatal},
                     {"counterexample", f.counterexample}});
  }
  return {{"ok", ok()},
          {"seeds", {{"first", first_seed}, {"last", last_seed}}},
          {"models", models},
          {"seconds", seconds},
          {"properties", std::move(props)},
          {"failures", std::move(fails)}};
}

SweepReport run_sweep(const std::vector<std::string>& properties, const std::vector<GeneratorConfig>& configs) {
  std::vector<const PropertyDef*> defs;
  for (const auto& name : properties) defs.push_back(&find_property(name));

  SweepReport report;
  for (const auto* def : defs) report.tallies.push_back({def->name, def->kind});
  if (!configs.empty()) {
    report.first_seed = std::numeric_limits<std::uint64_t>::max();
    for (const auto& config : configs) {
      report.first_seed = std::min(report.first_seed, config.seed);
      report.last_seed = std::max(report.last_seed, config.seed);
    }
  }
  const auto start = std::chrono::steady_clock::now();
  for (const auto& config : configs) {
    std::optional<GeneratedCase> generated;
    try {
      generated.emplace(generate_case(config));
    } catch (const Error& e) {
      report.failures.push_back({"generate", config, e.what(), true, json()});
      continue;
    }
    ++report.models;
    for (std::size_t k = 0; k < defs.size(); ++k) {
      const auto& def = *defs[k];
      auto& tally = report.tallies[k];
      ++tally.runs;
      PropertyOutcome outcome;
      try {
        outcome = def.check(*generated);
      } catch (const Error& e) {
        if (e.kind() == ErrorKind::domain_too_large || e.kind() == ErrorKind::search_budget_exceeded) {
          outcome = PropertyOutcome::skip(e.what());
        } else {
          outcome = PropertyOutcome::fail(e.what());
        }
      }
      if (!outcome.applicable) {
        ++tally.not_applicable;
      } else if (outcome.passed) {
        ++tally.passed;
      } else {
        ++tally.failed;
        report.failures.push_back({def.name, config, outcome.detail, def.kind == PropertyKind::required,
                                   case_to_json(*generated)});
      }
    }
  }
  report.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return report;
}

json case_to_json(const GeneratedCase& generated) {
  json doc = model_to_json(generated.model);
  if (generated.neighborhood) doc["neighborhood"] = neighborhood_to_json(*generated.neighborhood)["neighborhood"];
  if (generated.measure) doc["mu"] = probabilistic_to_json(*generated.measure)["mu"];
  return doc;
}

GeneratedCase case_from_json(const json& doc) {
  GeneratedCase out{model_from_json(doc), std::nullopt, std::nullopt};
  if (doc.contains("neighborhood")) out.neighborhood.emplace(neighborhood_from_json(doc));
  if (doc.contains("mu")) out.measure.emplace(probabilistic_from_json(doc));
  return out;
}

}  // namespace argbelief
