#include "argbelief/doxastics.hpp"

#include <algorithm>
#include <string>

namespace argbelief {

std::string_view to_string(BeliefNotion notion) noexcept {
  switch (notion) {
    case BeliefNotion::grounded: return "grounded";
    case BeliefNotion::evidence_based: return "bel";
    case BeliefNotion::maximal_body: return "vbp";
  }
  return "unknown";
}

BeliefNotion parse_belief_notion(std::string_view text) {
  if (text == "grounded" || text == "B") return BeliefNotion::grounded;
  if (text == "bel" || text == "evidence_based") return BeliefNotion::evidence_based;
  if (text == "vbp" || text == "maximal_body") return BeliefNotion::maximal_body;
  throw Error(ErrorKind::input_error, "unknown belief notion \"" + std::string(text) + "\"");
}

namespace {

void check_query(const Model& model, const PropositionSet& p, std::optional<std::size_t> world) {
  if (p.width() != model.world_count()) {
    throw Error(ErrorKind::domain_mismatch, "proposition over another domain");
  }
  if (world && *world >= model.world_count()) {
    throw Error(ErrorKind::unknown_world, "world index " + std::to_string(*world) + " out of range");
  }
}

bool has_open_inside(const Topology& topology, WorldMask region) {
  return std::any_of(topology.opens().begin(), topology.opens().end(), [&](const PropositionSet& s) {
    return !s.empty() && (s.bits() & ~region) == 0;
  });
}

BeliefVerdict evidence_based(const Model& model, const PropositionSet& p,
                             const std::vector<PropositionSet>& combined) {
  const auto& opens = model.topology().opens();
  const bool by_strengthening = std::all_of(opens.begin(), opens.end(), [&](const PropositionSet& t) {
    return t.empty() || has_open_inside(model.topology(), t.bits() & p.bits());
  });

  std::optional<PropositionSet> justification;
  for (const auto& t : opens) {
    if (!t.subset_of(p)) continue;
    const bool meets_all = std::all_of(combined.begin(), combined.end(),
                                       [&](const PropositionSet& e) { return t.intersects(e); });
    if (meets_all) {
      justification = t;
      break;
    }
  }
  if (by_strengthening != justification.has_value()) {
    throw Error(ErrorKind::characterization_mismatch,
                "evidence-based belief in " + model.domain().format(p) +
                    " differs between its two characterizations");
  }
  return {by_strengthening, justification, BeliefNotion::evidence_based};
}

}  // namespace

BeliefVerdict believes_grounded(const Model& model, const PropositionSet& p,
                                std::optional<std::size_t> world) {
  check_query(model, p, world);
  const auto& graph = model.attack();
  const auto& lfp = model.grounded().grounded;
  for (auto i = lfp.find_first(); i != OpenFamily::npos; i = lfp.find_next(i)) {
    if (graph.node(i).subset_of(p)) return {true, graph.node(i), BeliefNotion::grounded};
  }
  return {false, std::nullopt, BeliefNotion::grounded};
}

BeliefVerdict believes_evidence_based(const Model& model, const PropositionSet& p,
                                      std::optional<std::size_t> world) {
  check_query(model, p, world);
  return evidence_based(model, p, combined_evidence(model));
}

BeliefVerdict believes_maximal_body(const Model& model, const PropositionSet& p,
                                    std::optional<std::size_t> world) {
  check_query(model, p, world);
  const auto bodies = enumerate_bodies(model, BodyFilter::maximal);
  PropositionSet support = model.domain().empty_set();
  for (const auto& body : bodies) {
    if (!body.intersection.subset_of(p)) return {false, std::nullopt, BeliefNotion::maximal_body};
    support = support | body.intersection;
  }
  return {true, support, BeliefNotion::maximal_body};
}

BeliefVerdict believes(const Model& model, const PropositionSet& p, BeliefNotion notion,
                       std::optional<std::size_t> world) {
  switch (notion) {
    case BeliefNotion::grounded: return believes_grounded(model, p, world);
    case BeliefNotion::evidence_based: return believes_evidence_based(model, p, world);
    case BeliefNotion::maximal_body: return believes_maximal_body(model, p, world);
  }
  return {};
}

JustificationSet justification_set(const Model& model) {
  const auto combined = combined_evidence(model);
  JustificationSet out;
  for (const auto& t : model.topology().opens()) {
    const bool meets_all = std::all_of(combined.begin(), combined.end(),
                                       [&](const PropositionSet& e) { return t.intersects(e); });
    if (meets_all) out.opens.push_back(t);
  }
  return out;
}

BeliefComparison compare_beliefs(const Model& model) {
  BeliefComparison out;
  const auto& graph = model.attack();
  const auto& report = model.grounded();
  const OpenFamily& unattacked = report.iterations.at(1);

  const OpenFamily justified = graph.family_of(justification_set(model).opens);
  out.justification_within_unattacked = justified.is_subset_of(unattacked);
  out.unattacked_within_grounded = unattacked.is_subset_of(report.grounded);

  const auto combined = combined_evidence(model);
  const std::size_t n = model.world_count();
  std::vector<PropositionSet> propositions;
  for (std::uint64_t bits = 0; bits < (std::uint64_t{1} << n); ++bits) {
    propositions.emplace_back(n, static_cast<WorldMask>(bits));
  }
  std::sort(propositions.begin(), propositions.end(), CanonicalLess{});

  out.evidence_based_implies_grounded = true;
  for (const auto& p : propositions) {
    BeliefComparison::Row row{p, believes_grounded(model, p).believed,
                              evidence_based(model, p, combined).believed};
    if (row.evidence_based && !row.grounded) out.evidence_based_implies_grounded = false;
    out.rows.push_back(row);
  }
  return out;
}

}  // namespace argbelief
