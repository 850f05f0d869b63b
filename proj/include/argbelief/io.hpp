#pragma once

#include <filesystem>
#include <string>

#include <nlohmann/json.hpp>

#include "argbelief/logic.hpp"
#include "argbelief/model.hpp"
#include "argbelief/probabilistic.hpp"

namespace argbelief {

using json = nlohmann::json;

// Model files:
//   { "worlds": ["1","2","3"],
//     "evidence": [["1"],["1","2"]],
//     "attack": { "mode": "explicit" | "symmetric" | "measure",
//                 "pairs": [[<attacked>, <attacker>], ...],
//                 "weights": { "<world>": <number or "p/q"> } },
//     "valuation": { "p": ["1","2"] } }
// Neighborhood files add "neighborhood": [[...], ...]; probabilistic files
// carry "mu": { "<world>": "p/q" } instead of evidence and attack.
// Malformed documents throw `input_error`.

ModelInput parse_model_input(const json& doc);
Model model_from_json(const json& doc, const ModelOptions& options = {});
/// Explicit mode lists every edge between non-empty opens; measure mode keeps
/// the weights.
json model_to_json(const Model& model);

NeighborhoodModel neighborhood_from_json(const json& doc);
json neighborhood_to_json(const NeighborhoodModel& nmodel);

ProbabilisticModel probabilistic_from_json(const json& doc);
json probabilistic_to_json(const ProbabilisticModel& pmodel);

json set_to_json(const Domain& domain, const PropositionSet& set);
PropositionSet set_from_json(const Domain& domain, const json& value);

json read_json_file(const std::filesystem::path& path);

}  // namespace argbelief
