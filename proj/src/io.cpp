#include "argbelief/io.hpp"

#include <fstream>
#include <string>

namespace argbelief {

namespace {

[[noreturn]] void bad(const std::string& what) { throw Error(ErrorKind::input_error, what); }

const json& require(const json& doc, const char* key) {
  if (!doc.is_object()) bad("expected a JSON object");
  const auto it = doc.find(key);
  if (it == doc.end()) bad(std::string("missing \"") + key + "\"");
  return *it;
}

std::string world_label(const json& value) {
  if (value.is_string()) return value.get<std::string>();
  if (value.is_number_integer()) return value.dump();
  bad("world labels must be strings, got " + value.dump());
}

std::vector<std::string> label_array(const json& value) {
  if (!value.is_array()) bad("expected an array of world labels, got " + value.dump());
  std::vector<std::string> out;
  for (const auto& item : value) out.push_back(world_label(item));
  return out;
}

Rational rational_value(const json& value) {
  if (value.is_string()) return parse_rational(value.get<std::string>());
  if (value.is_number()) return parse_rational(value.dump());
  bad("expected a number or a \"p/q\" string, got " + value.dump());
}

std::map<std::string, std::vector<std::string>> valuation_input(const json& doc) {
  std::map<std::string, std::vector<std::string>> out;
  const auto it = doc.find("valuation");
  if (it == doc.end()) return out;
  if (!it->is_object()) bad("\"valuation\" must be an object");
  for (const auto& [atom, worlds] : it->items()) out.emplace(atom, label_array(worlds));
  return out;
}

Valuation valuation_from(const Domain& domain, const json& doc) {
  Valuation out;
  for (const auto& [atom, worlds] : valuation_input(doc)) out.emplace(atom, domain.make_set(worlds));
  return out;
}

json valuation_to_json(const Domain& domain, const Valuation& valuation) {
  json out = json::object();
  for (const auto& [atom, set] : valuation) out[atom] = set_to_json(domain, set);
  return out;
}

json family_to_json(const Domain& domain, const std::vector<PropositionSet>& family) {
  json out = json::array();
  for (const auto& s : family) out.push_back(set_to_json(domain, s));
  return out;
}

}  // namespace

json set_to_json(const Domain& domain, const PropositionSet& set) {
  return json(domain.label_list(set));
}

PropositionSet set_from_json(const Domain& domain, const json& value) {
  return domain.make_set(label_array(value));
}

ModelInput parse_model_input(const json& doc) {
  ModelInput input;
  input.worlds = label_array(require(doc, "worlds"));
  const json& evidence = require(doc, "evidence");
  if (!evidence.is_array()) bad("\"evidence\" must be an array of world arrays");
  for (const auto& piece : evidence) input.evidence.push_back(label_array(piece));

  if (const auto it = doc.find("attack"); it != doc.end()) {
    if (!it->is_object()) bad("\"attack\" must be an object");
    const std::string mode = it->value("mode", std::string("symmetric"));
    if (mode == "explicit") {
      input.mode = AttackMode::explicit_pairs;
    } else if (mode == "symmetric") {
      input.mode = AttackMode::symmetric;
    } else if (mode == "measure") {
      input.mode = AttackMode::measure;
    } else {
      bad("unknown attack mode \"" + mode + "\"");
    }
    if (const auto pairs = it->find("pairs"); pairs != it->end()) {
      if (!pairs->is_array()) bad("\"pairs\" must be an array");
      for (const auto& pair : *pairs) {
        if (!pair.is_array() || pair.size() != 2) bad("each attack pair is [attacked, attacker]");
        input.pairs.emplace_back(label_array(pair[0]), label_array(pair[1]));
      }
    }
    if (const auto weights = it->find("weights"); weights != it->end()) {
      if (!weights->is_object()) bad("\"weights\" must be an object");
      for (const auto& [label, w] : weights->items()) input.weights.emplace(label, rational_value(w));
    }
    if (input.mode == AttackMode::explicit_pairs && it->find("pairs") == it->end()) {
      bad("explicit mode needs \"pairs\"");
    }
    if (input.mode == AttackMode::measure && it->find("weights") == it->end()) {
      bad("measure mode needs \"weights\"");
    }
  }
  input.valuation = valuation_input(doc);
  return input;
}

Model model_from_json(const json& doc, const ModelOptions& options) {
  return build_model(parse_model_input(doc), options);
}

json model_to_json(const Model& model) {
  const auto& domain = model.domain();
  json doc;
  doc["worlds"] = domain.labels();
  doc["evidence"] = family_to_json(domain, model.evidence());
  json attack;
  attack["mode"] = std::string(to_string(model.attack_spec().mode));
  switch (model.attack_spec().mode) {
    case AttackMode::explicit_pairs: {
      json pairs = json::array();
      const auto& graph = model.attack();
      for (const auto& e : graph.edges()) {
        if (graph.node(e.attacked).empty() || graph.node(e.attacker).empty()) continue;
        pairs.push_back(json::array({set_to_json(domain, graph.node(e.attacked)),
                                     set_to_json(domain, graph.node(e.attacker))}));
      }
      attack["pairs"] = std::move(pairs);
      break;
    }
    case AttackMode::symmetric: break;
    case AttackMode::measure: {
      json weights = json::object();
      for (std::size_t w = 0; w < domain.size(); ++w) {
        weights[domain.label(w)] = format_rational(model.attack_spec().weights[w]);
      }
      attack["weights"] = std::move(weights);
      break;
    }
  }
  doc["attack"] = std::move(attack);
  doc["valuation"] = valuation_to_json(domain, model.valuation());
  return doc;
}

NeighborhoodModel neighborhood_from_json(const json& doc) {
  Domain domain(label_array(require(doc, "worlds")));
  const json& members = require(doc, "neighborhood");
  if (!members.is_array()) bad("\"neighborhood\" must be an array of world arrays");
  std::vector<PropositionSet> family;
  for (const auto& m : members) family.push_back(set_from_json(domain, m));
  Valuation valuation = valuation_from(domain, doc);
  return make_neighborhood_model(std::move(domain), std::move(family), std::move(valuation));
}

json neighborhood_to_json(const NeighborhoodModel& nmodel) {
  json doc;
  doc["worlds"] = nmodel.domain().labels();
  doc["neighborhood"] = family_to_json(nmodel.domain(), nmodel.neighborhood());
  doc["valuation"] = valuation_to_json(nmodel.domain(), nmodel.valuation());
  return doc;
}

ProbabilisticModel probabilistic_from_json(const json& doc) {
  Domain domain(label_array(require(doc, "worlds")));
  const json& mu = require(doc, "mu");
  if (!mu.is_object()) bad("\"mu\" must map world labels to masses");
  std::vector<Rational> masses(domain.size(), Rational(0));
  std::vector<bool> seen(domain.size(), false);
  for (const auto& [label, mass] : mu.items()) {
    const auto index = domain.index_of(label);
    if (!index) throw Error(ErrorKind::unknown_world, "mass for unknown world \"" + label + "\"");
    masses[*index] = rational_value(mass);
    seen[*index] = true;
  }
  for (std::size_t w = 0; w < seen.size(); ++w) {
    if (!seen[w]) bad("no mass given for world \"" + domain.label(w) + "\"");
  }
  Valuation valuation = valuation_from(domain, doc);
  return make_probabilistic_model(std::move(domain), std::move(masses), std::move(valuation));
}

json probabilistic_to_json(const ProbabilisticModel& pmodel) {
  json doc;
  const auto& domain = pmodel.domain();
  doc["worlds"] = domain.labels();
  json mu = json::object();
  for (std::size_t w = 0; w < domain.size(); ++w) {
    mu[domain.label(w)] = format_rational(pmodel.masses()[w]);
  }
  doc["mu"] = std::move(mu);
  doc["valuation"] = valuation_to_json(domain, pmodel.valuation());
  return doc;
}

json read_json_file(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) bad("cannot open " + path.string());
  try {
    return json::parse(in);
  } catch (const json::parse_error& e) {
    bad(path.string() + ": " + e.what());
  }
}

}  // namespace argbelief
