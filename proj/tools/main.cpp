// argbelief: command-line front end for topological argumentation models.

#include <cstdint>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <variant>
#include <vector>

#include "CLI11.hpp"
#include "argbelief/doxastics.hpp"
#include "argbelief/formula.hpp"
#include "argbelief/generator.hpp"
#include "argbelief/io.hpp"
#include "argbelief/logic.hpp"
#include "argbelief/probabilistic.hpp"
#include "argbelief/sweep.hpp"

namespace ab = argbelief;
using ab::json;

namespace {

constexpr int kOk = 0;
constexpr int kFailed = 1;
constexpr int kInputError = 2;

struct Globals {
  bool json = false;
  std::uint64_t seed = 0;
  bool strict = false;
  bool close = false;
  std::size_t max_worlds = 16;

  ab::ModelOptions model_options() const {
    ab::ModelOptions o;
    o.max_worlds = max_worlds;
    o.strict = strict;
    o.close = close;
    return o;
  }
};

// A loaded file: an argumentation model (possibly derived from a
// neighborhood or a measure) plus whatever the file described directly.
struct Loaded {
  ab::GeneratedCase kase;
  bool from_neighborhood_file = false;
  bool from_measure_file = false;
};

Loaded load(const std::string& path, const Globals& g) {
  const json doc = ab::read_json_file(path);
  const auto options = g.model_options();
  if (doc.is_object() && !doc.contains("evidence")) {
    if (doc.contains("mu")) {
      auto pm = ab::probabilistic_from_json(doc);
      ab::Model m = ab::to_argumentation_model(pm, options);
      return {{std::move(m), std::nullopt, std::move(pm)}, false, true};
    }
    if (doc.contains("neighborhood")) {
      auto nm = ab::neighborhood_from_json(doc);
      ab::Model m = ab::from_neighborhood(nm, options);
      return {{std::move(m), std::move(nm), std::nullopt}, true, false};
    }
  }
  ab::GeneratedCase kase{ab::model_from_json(doc, options), std::nullopt, std::nullopt};
  if (doc.contains("neighborhood")) kase.neighborhood.emplace(ab::neighborhood_from_json(doc));
  if (doc.contains("mu")) kase.measure.emplace(ab::probabilistic_from_json(doc));
  return {std::move(kase), false, false};
}

void report_warnings(const ab::Model& model) {
  for (const auto& w : model.warnings()) std::cerr << "warning: " << w << '\n';
}

// "1,2", "{1,2}" or "{}" over the model's world labels.
ab::PropositionSet parse_set(const ab::Domain& domain, std::string text) {
  std::erase_if(text, [](char c) { return c == '{' || c == '}' || c == ' '; });
  std::vector<std::string> labels;
  std::stringstream in(text);
  for (std::string item; std::getline(in, item, ',');) {
    if (!item.empty()) labels.push_back(item);
  }
  return domain.make_set(labels);
}

std::optional<std::size_t> parse_world(const ab::Domain& domain, const std::string& label) {
  if (label.empty()) return std::nullopt;
  const auto index = domain.index_of(label);
  if (!index) throw ab::Error(ab::ErrorKind::unknown_world, "no world labelled \"" + label + "\"");
  return index;
}

json family_json(const ab::Domain& domain, const std::vector<ab::PropositionSet>& family) {
  json out = json::array();
  for (const auto& s : family) out.push_back(ab::set_to_json(domain, s));
  return out;
}

void print(const json& doc) { std::cout << doc.dump(2) << '\n'; }

const char* yes_no(bool b) { return b ? "true" : "false"; }

int cmd_validate(const Globals& g, const std::string& path, const std::vector<std::string>& properties) {
  std::optional<Loaded> loaded;
  try {
    loaded.emplace(load(path, g));
  } catch (const ab::AttackInvalid& e) {
    const auto& v = e.violation();
    if (g.json) {
      print({{"valid", false}, {"condition", v.condition}, {"description", v.description}});
    } else {
      std::cout << "invalid\tcondition " << v.condition << '\t' << v.description << '\n';
    }
    return kFailed;
  }
  const auto& model = loaded->kase.model;
  report_warnings(model);
  int status = kOk;
  json results = json::array();
  for (const auto& name : properties) {
    const auto outcome = ab::find_property(name).check(loaded->kase);
    const char* verdict = !outcome.applicable ? "skip" : outcome.passed ? "pass" : "fail";
    if (outcome.applicable && !outcome.passed) status = kFailed;
    results.push_back({{"property", name}, {"result", verdict}, {"detail", outcome.detail}});
    if (!g.json) {
      std::cout << name << '\t' << verdict;
      if (!outcome.detail.empty()) std::cout << '\t' << outcome.detail;
      std::cout << '\n';
    }
  }
  if (g.json) {
    print({{"valid", true},
           {"worlds", model.world_count()},
           {"opens", model.topology().size()},
           {"attacks", model.attack().edge_count()},
           {"properties", results}});
  } else if (properties.empty()) {
    std::cout << "valid\t" << model.world_count() << " worlds\t" << model.topology().size() << " opens\t"
              << model.attack().edge_count() << " attacks\n";
  }
  return status;
}

int cmd_topology(const Globals& g, const Loaded& loaded) {
  const auto& model = loaded.kase.model;
  const auto& domain = model.domain();
  if (g.json) {
    print({{"discrete", model.topology().is_discrete()},
           {"evidence", family_json(domain, model.evidence())},
           {"opens", family_json(domain, model.topology().opens())}});
    return kOk;
  }
  for (const auto& open : model.topology().opens()) std::cout << domain.format(open) << '\n';
  return kOk;
}

int cmd_grounded(const Globals& g, const Loaded& loaded) {
  const auto& model = loaded.kase.model;
  const auto& domain = model.domain();
  const auto& graph = model.attack();
  if (g.json) {
    json steps = json::array();
    for (const auto& f : model.grounded().iterations) steps.push_back(family_json(domain, graph.sets_of(f)));
    print({{"grounded", family_json(domain, model.grounded_sets())}, {"iterations", steps}});
    return kOk;
  }
  for (const auto& s : model.grounded_sets()) std::cout << domain.format(s) << '\n';
  return kOk;
}

int cmd_classify(const Globals& g, const Loaded& loaded, const std::vector<std::string>& sets) {
  const auto& model = loaded.kase.model;
  std::vector<ab::PropositionSet> family;
  for (const auto& s : sets) family.push_back(parse_set(model.domain(), s));
  const auto flags = ab::classify_extension(model.attack(), model.attack().family_of(family));
  json preferred = flags.preferred ? json(*flags.preferred) : json();
  if (g.json) {
    print({{"conflict_free", flags.conflict_free},
           {"admissible", flags.admissible},
           {"complete", flags.complete},
           {"preferred", preferred},
           {"stable", flags.stable}});
    return kOk;
  }
  std::cout << "conflict_free\t" << yes_no(flags.conflict_free) << "\nadmissible\t" << yes_no(flags.admissible)
            << "\ncomplete\t" << yes_no(flags.complete) << "\npreferred\t"
            << (flags.preferred ? yes_no(*flags.preferred) : "unknown") << "\nstable\t" << yes_no(flags.stable)
            << '\n';
  return kOk;
}

int cmd_believes(const Globals& g, const Loaded& loaded, const std::string& prop, const std::string& notion,
                 const std::string& world) {
  const auto& model = loaded.kase.model;
  const auto& domain = model.domain();
  const auto verdict =
      ab::believes(model, parse_set(domain, prop), ab::parse_belief_notion(notion), parse_world(domain, world));
  if (g.json) {
    print({{"believed", verdict.believed},
           {"notion", std::string(ab::to_string(verdict.notion))},
           {"witness", verdict.witness ? ab::set_to_json(domain, *verdict.witness) : json()}});
    return kOk;
  }
  std::cout << yes_no(verdict.believed);
  if (verdict.witness) std::cout << '\t' << domain.format(*verdict.witness);
  std::cout << '\n';
  return kOk;
}

int cmd_compare(const Globals& g, const Loaded& loaded) {
  const auto& model = loaded.kase.model;
  const auto& domain = model.domain();
  const auto cmp = ab::compare_beliefs(model);
  if (g.json) {
    json rows = json::array();
    for (const auto& r : cmp.rows) {
      rows.push_back({{"proposition", ab::set_to_json(domain, r.proposition)},
                      {"grounded", r.grounded},
                      {"bel", r.evidence_based}});
    }
    print({{"rows", rows},
           {"justification_within_unattacked", cmp.justification_within_unattacked},
           {"unattacked_within_grounded", cmp.unattacked_within_grounded},
           {"bel_implies_grounded", cmp.evidence_based_implies_grounded}});
  } else {
    std::cout << "proposition\tB\tBel\n";
    for (const auto& r : cmp.rows) {
      std::cout << domain.format(r.proposition) << '\t' << yes_no(r.grounded) << '\t' << yes_no(r.evidence_based)
                << '\n';
    }
  }
  return cmp.consistent() ? kOk : kFailed;
}

ab::BeliefTest belief_test_for(const Loaded& loaded) {
  if (loaded.from_neighborhood_file) return ab::neighborhood_belief_test(*loaded.kase.neighborhood);
  if (loaded.from_measure_file) return ab::probabilistic_belief_test(*loaded.kase.measure);
  return ab::grounded_belief_test(loaded.kase.model);
}

int cmd_check(const Globals& g, const Loaded& loaded, const std::string& text, const std::string& world) {
  const auto& model = loaded.kase.model;
  const auto& domain = model.domain();
  const auto formula = ab::parse_formula(text);
  const auto extent = ab::evaluate(formula, model.world_count(), model.valuation(), belief_test_for(loaded));
  const auto w = parse_world(domain, world);
  if (g.json) {
    json doc{{"formula", ab::to_string(formula)}, {"extension", ab::set_to_json(domain, extent)}};
    if (w) doc["holds"] = extent.contains(*w);
    print(doc);
    return kOk;
  }
  if (w) {
    std::cout << yes_no(extent.contains(*w)) << '\n';
  } else {
    std::cout << domain.format(extent) << '\n';
  }
  return kOk;
}

int cmd_axioms(const Globals& g, const Loaded& loaded) {
  const auto& model = loaded.kase.model;
  const auto& domain = model.domain();
  const auto report = ab::check_axioms(model.world_count(), belief_test_for(loaded));
  json results = json::array();
  for (const auto& r : report.results) {
    json witness = json::array();
    std::string text;
    for (const auto& w : r.witness) {
      witness.push_back(ab::set_to_json(domain, w));
      text += (text.empty() ? "" : ", ") + domain.format(w);
    }
    results.push_back({{"schema", r.name},
                       {"formula", r.formula},
                       {"in_axiom_system", r.in_axiom_system},
                       {"valid", r.valid},
                       {"witness", witness}});
    if (!g.json) {
      std::cout << r.name << '\t' << (r.valid ? "valid" : "falsified") << '\t' << r.formula;
      if (!r.valid) std::cout << '\t' << text;
      std::cout << '\n';
    }
  }
  if (g.json) print({{"sound", report.sound()}, {"schemas", results}});
  return report.sound() ? kOk : kFailed;
}

int cmd_convert(const Loaded& loaded, const std::string& target) {
  if (target == "neighborhood") {
    if (loaded.from_measure_file) {
      print(ab::neighborhood_to_json(ab::pb_to_neighborhood(*loaded.kase.measure)));
    } else {
      print(ab::neighborhood_to_json(ab::to_neighborhood(loaded.kase.model)));
    }
  } else {
    print(ab::model_to_json(loaded.kase.model));
  }
  return kOk;
}

int cmd_prob(const Globals& g, const Loaded& loaded, const std::string& text, bool correspond,
             const std::string& threshold_text) {
  if (!loaded.kase.measure) throw ab::Error(ab::ErrorKind::input_error, "prob needs a file with \"mu\"");
  const auto& pm = *loaded.kase.measure;
  const auto& domain = pm.domain();
  if (correspond) {
    const auto r = ab::pb_grounded_correspondence(pm);
    if (g.json) {
      print({{"holds", r.holds()},
             {"grounded", family_json(domain, r.grounded)},
             {"above_half", family_json(domain, r.above_half)},
             {"grounded_equals_threshold_family", r.grounded_equals_threshold_family},
             {"beliefs_agree", r.beliefs_agree},
             {"attack_valid", r.attack_valid},
             {"conditionally_transitive", r.conditionally_transitive}});
    } else {
      std::cout << "grounded\t" << domain.format_family(r.grounded) << "\nabove_half\t"
                << domain.format_family(r.above_half) << "\nequal\t" << yes_no(r.grounded_equals_threshold_family)
                << "\nbeliefs_agree\t" << yes_no(r.beliefs_agree) << "\nattack_valid\t" << yes_no(r.attack_valid)
                << "\nconditionally_transitive\t" << yes_no(r.conditionally_transitive) << '\n';
    }
    return r.holds() ? kOk : kFailed;
  }
  if (text.empty()) throw ab::Error(ab::ErrorKind::input_error, "prob needs --formula or --correspond");
  const ab::Rational threshold = threshold_text.empty() ? ab::one_half() : ab::parse_rational(threshold_text);
  if (threshold != ab::one_half()) std::cerr << "warning: thresholds other than 1/2 are experimental\n";
  const auto formula = ab::parse_formula(text);
  const auto extent = ab::evaluate(formula, domain.size(), pm.valuation(), ab::probabilistic_belief_test(pm, threshold));
  const bool believed = ab::believes_probabilistic(pm, formula, threshold);
  if (g.json) {
    print({{"formula", ab::to_string(formula)},
           {"believed", believed},
           {"measure", ab::format_rational(pm.measure(extent))},
           {"extension", ab::set_to_json(domain, extent)}});
  } else {
    std::cout << yes_no(believed) << '\t' << ab::format_rational(pm.measure(extent)) << '\n';
  }
  return kOk;
}

struct SweepArgs {
  std::vector<std::string> properties;
  std::vector<std::string> modes{"explicit"};
  std::size_t seeds = 100;
  std::size_t min_worlds = 1;
  std::size_t worlds = 4;
  double density = 0.4;
  std::string out_dir;
};

int cmd_sweep(const Globals& g, const SweepArgs& args) {
  if (args.min_worlds < 1 || args.min_worlds > args.worlds) {
    throw ab::Error(ab::ErrorKind::input_error, "need 1 <= --min-worlds <= --worlds");
  }
  auto properties = args.properties;
  if (properties.empty()) {
    for (const auto& p : ab::property_registry()) properties.push_back(p.name);
  }
  std::vector<ab::GeneratorConfig> configs;
  const std::size_t span = args.worlds - args.min_worlds + 1;
  for (const auto& mode : args.modes) {
    const auto parsed = ab::parse_generator_mode(mode);
    for (std::size_t k = 0; k < args.seeds; ++k) {
      ab::GeneratorConfig c;
      c.seed = g.seed + k;
      c.world_count = args.min_worlds + (k % span);
      c.evidence_density = args.density;
      c.mode = parsed;
      c.max_worlds = g.max_worlds;
      configs.push_back(c);
    }
  }
  std::cerr << "sweep: seeds " << g.seed << ".." << g.seed + args.seeds - 1 << ", " << configs.size()
            << " models\n";
  const auto report = ab::run_sweep(properties, configs);
  if (!args.out_dir.empty()) {
    std::filesystem::create_directories(args.out_dir);
    std::size_t index = 0;
    for (const auto& f : report.failures) {
      if (f.counterexample.is_null()) continue;
      const auto name = f.property + "-" + std::string(ab::to_string(f.config.mode)) + "-seed" +
                        std::to_string(f.config.seed) + "-" + std::to_string(index++) + ".json";
      std::ofstream(std::filesystem::path(args.out_dir) / name) << f.counterexample.dump(2) << '\n';
    }
  }
  if (g.json) {
    print(report.to_json());
  } else {
    std::cout << "property\truns\tpassed\tfailed\tnot_applicable\n";
    for (const auto& t : report.tallies) {
      std::cout << t.name << '\t' << t.runs << '\t' << t.passed << '\t' << t.failed << '\t' << t.not_applicable
                << (t.kind == ab::PropertyKind::sufficient_condition_only ? "\t(sufficient condition only)" : "")
                << '\n';
    }
    std::size_t notes = 0;
    for (const auto& f : report.failures) {
      if (!f.fatal) {
        ++notes;
        continue;
      }
      std::cout << "FAIL\t" << f.property << "\tseed " << f.config.seed << '\t'
                << ab::to_string(f.config.mode) << '\t' << f.config.world_count << " worlds\t" << f.detail << '\n';
    }
    if (notes != 0) std::cout << notes << " non-fatal failures of sufficient-condition properties (details under --json)\n";
    std::cout << report.models << " models in " << report.seconds << " s\n";
  }
  return report.ok() ? kOk : kFailed;
}

int cmd_random(const Globals& g, std::size_t worlds, double density, const std::string& mode) {
  ab::GeneratorConfig c;
  c.world_count = worlds;
  c.evidence_density = density;
  c.mode = ab::parse_generator_mode(mode);
  c.seed = g.seed;
  c.max_worlds = g.max_worlds;
  print(ab::case_to_json(ab::generate_case(c)));
  return kOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Grounded belief in topological argumentation models"};
  app.require_subcommand(1);
  Globals g;
  app.add_flag("--json", g.json, "Structured JSON output");
  app.add_option("--seed", g.seed, "Random seed (random, sweep)");
  app.add_flag("--strict", g.strict, "Reject evidence that omits the whole domain");
  app.add_flag("--close", g.close, "Close explicit attacks downward instead of rejecting them");
  app.add_option("--max-worlds", g.max_worlds, "Largest accepted domain")->check(CLI::Range(1, 24));

  std::string file;
  std::vector<std::string> properties;
  std::vector<std::string> sets;
  std::string prop, notion = "grounded", world, formula, target, threshold;
  bool correspond = false;
  std::size_t worlds = 3;
  double density = 0.4;
  std::string mode = "explicit";
  SweepArgs sweep;

  auto* validate = app.add_subcommand("validate", "Load a model and check the attack conditions");
  validate->add_option("file", file)->required();
  validate->add_option("--property", properties, "Also run registered properties on the model");

  auto* topology = app.add_subcommand("topology", "List the opens of the generated topology");
  topology->add_option("file", file)->required();

  auto* grounded = app.add_subcommand("grounded", "Grounded extension");
  grounded->add_option("file", file)->required();

  auto* classify = app.add_subcommand("classify", "Classify a family of opens");
  classify->add_option("file", file)->required();
  classify->add_option("--set", sets, "A member of the family, e.g. 1,2 (repeat)");

  auto* believes = app.add_subcommand("believes", "Is a proposition believed?");
  believes->add_option("file", file)->required();
  believes->add_option("--prop", prop, "Proposition as world labels, e.g. 1,2")->required();
  believes->add_option("--notion", notion, "grounded | bel | vbp");
  believes->add_option("--world", world);

  auto* compare = app.add_subcommand("compare", "Grounded belief against evidence-based belief");
  compare->add_option("file", file)->required();

  auto* check = app.add_subcommand("check", "Evaluate a formula");
  check->add_option("file", file)->required();
  check->add_option("--formula", formula)->required();
  check->add_option("--world", world);

  auto* axioms = app.add_subcommand("axioms", "Check 4, 5, D, M, N, RE and C on a model");
  axioms->add_option("file", file)->required();

  auto* convert = app.add_subcommand("convert", "Convert between models and neighborhood models");
  convert->add_option("file", file)->required();
  convert->add_option("--to", target)->required()->check(CLI::IsMember({"neighborhood", "tam"}));

  auto* prob = app.add_subcommand("prob", "Probabilistic belief");
  prob->add_option("file", file)->required();
  prob->add_option("--formula", formula);
  prob->add_flag("--correspond", correspond, "Check grounded belief against probability above 1/2");
  prob->add_option("--threshold", threshold, "Experimental; defaults to 1/2");

  auto* random = app.add_subcommand("random", "Print a random valid model");
  random->add_option("--worlds", worlds)->check(CLI::Range(1, 24));
  random->add_option("--density", density)->check(CLI::Range(0.0, 1.0));
  random->add_option("--mode", mode, "explicit | symmetric | measure | transitive | neighborhood | probability");

  auto* sweep_cmd = app.add_subcommand("sweep", "Run registered properties over seeded random models");
  sweep_cmd->add_option("--property", sweep.properties, "Property name (repeat); default all");
  sweep_cmd->add_option("--mode", sweep.modes, "Generator mode (repeat)");
  sweep_cmd->add_option("--seeds", sweep.seeds, "Number of seeds, starting at --seed");
  sweep_cmd->add_option("--min-worlds", sweep.min_worlds);
  sweep_cmd->add_option("--worlds", sweep.worlds, "Largest world count");
  sweep_cmd->add_option("--density", sweep.density)->check(CLI::Range(0.0, 1.0));
  sweep_cmd->add_option("--out", sweep.out_dir, "Directory for counterexample files");

  auto* dot = app.add_subcommand("dot", "Attack graph in DOT");
  dot->add_option("file", file)->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kOk : kInputError;
  }

  try {
    if (*validate) return cmd_validate(g, file, properties);
    if (*random) return cmd_random(g, worlds, density, mode);
    if (*sweep_cmd) return cmd_sweep(g, sweep);

    const Loaded loaded = load(file, g);
    report_warnings(loaded.kase.model);
    if (*topology) return cmd_topology(g, loaded);
    if (*grounded) return cmd_grounded(g, loaded);
    if (*classify) return cmd_classify(g, loaded, sets);
    if (*believes) return cmd_believes(g, loaded, prop, notion, world);
    if (*compare) return cmd_compare(g, loaded);
    if (*check) return cmd_check(g, loaded, formula, world);
    if (*axioms) return cmd_axioms(g, loaded);
    if (*convert) return cmd_convert(loaded, target);
    if (*prob) return cmd_prob(g, loaded, formula, correspond, threshold);
    if (*dot) {
      std::cout << ab::to_dot(loaded.kase.model.attack(), loaded.kase.model.domain().labels());
      return kOk;
    }
  } catch (const ab::Error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kInputError;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kInputError;
  }
  return kOk;
}
