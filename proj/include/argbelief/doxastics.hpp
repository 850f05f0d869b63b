#pragma once

#include <cstddef>
#include <optional>
#include <string_view>
#include <vector>

#include "argbelief/model.hpp"

namespace argbelief {

enum class BeliefNotion { grounded, evidence_based, maximal_body };

std::string_view to_string(BeliefNotion notion) noexcept;
/// Accepts "grounded", "bel"/"evidence_based" and "vbp"/"maximal_body".
BeliefNotion parse_belief_notion(std::string_view text);

struct BeliefVerdict {
  bool believed = false;
  /// An open inside the queried proposition that carries the belief.
  std::optional<PropositionSet> witness;
  BeliefNotion notion = BeliefNotion::grounded;
};

// Beliefs are world-invariant; the optional world is range-checked and
// otherwise ignored.

/// B P: some member of the grounded extension lies inside P. The witness is
/// the first such member in canonical order, which is inclusion-minimal.
BeliefVerdict believes_grounded(const Model& model, const PropositionSet& p,
                                std::optional<std::size_t> world = std::nullopt);

/// Bel P: every non-empty open contains a non-empty open inside P. Also
/// evaluates the justification characterization and throws
/// `characterization_mismatch` if the two disagree.
BeliefVerdict believes_evidence_based(const Model& model, const PropositionSet& p,
                                      std::optional<std::size_t> world = std::nullopt);

/// Every maximal body of evidence supports P.
BeliefVerdict believes_maximal_body(const Model& model, const PropositionSet& p,
                                    std::optional<std::size_t> world = std::nullopt);

BeliefVerdict believes(const Model& model, const PropositionSet& p, BeliefNotion notion,
                       std::optional<std::size_t> world = std::nullopt);

/// J_M: opens meeting every combined evidence set.
struct JustificationSet {
  std::vector<PropositionSet> opens;
};

JustificationSet justification_set(const Model& model);

struct BeliefComparison {
  struct Row {
    PropositionSet proposition;
    bool grounded = false;
    bool evidence_based = false;
  };
  std::vector<Row> rows;
  bool justification_within_unattacked = false;
  bool unattacked_within_grounded = false;
  bool evidence_based_implies_grounded = false;

  bool consistent() const noexcept {
    return justification_within_unattacked && unattacked_within_grounded &&
           evidence_based_implies_grounded;
  }
};

/// B and Bel over every proposition (canonical order), with the inclusion
/// chain J_M within d({}) within the grounded extension.
BeliefComparison compare_beliefs(const Model& model);

}  // namespace argbelief
