#pragma once

#include <cstddef>
#include <vector>

#include "argbelief/domain.hpp"
#include "argbelief/formula.hpp"
#include "argbelief/logic.hpp"
#include "argbelief/model.hpp"
#include "argbelief/rational.hpp"

namespace argbelief {

/// A finite probability space with exact rational point masses.
class ProbabilisticModel {
 public:
  const Domain& domain() const noexcept { return domain_; }
  const std::vector<Rational>& masses() const noexcept { return masses_; }
  const Valuation& valuation() const noexcept { return valuation_; }
  Rational measure(const PropositionSet& set) const;
  bool strictly_positive() const;

  friend ProbabilisticModel make_probabilistic_model(Domain, std::vector<Rational>, Valuation);

 private:
  ProbabilisticModel() = default;

  Domain domain_;
  std::vector<Rational> masses_;
  Valuation valuation_;
};

/// Throws `invalid_measure` on a negative mass or a total other than 1.
ProbabilisticModel make_probabilistic_model(Domain domain, std::vector<Rational> masses,
                                            Valuation valuation);

/// mu([[phi]]) > threshold. The threshold defaults to 1/2; other values are
/// experimental and outside every correspondence result.
bool believes_probabilistic(const ProbabilisticModel& pmodel, const Formula& formula,
                            const Rational& threshold = one_half(),
                            const EvaluationOptions& options = {});

BeliefTest probabilistic_belief_test(const ProbabilisticModel& pmodel,
                                     const Rational& threshold = one_half());

/// The argumentation model over the powerset whose attack is
/// e <- e' iff e, e' disjoint and mu(e) <= mu(e'). Throws `zero_mass_world`.
Model to_argumentation_model(const ProbabilisticModel& pmodel, const ModelOptions& options = {});

/// The attack graph of `to_argumentation_model`.
AttackGraph mu_attack(const ProbabilisticModel& pmodel);

struct CorrespondenceReport {
  std::vector<PropositionSet> grounded;
  std::vector<PropositionSet> above_half;
  bool grounded_equals_threshold_family = false;
  bool beliefs_agree = false;
  /// First proposition where B and PB disagree, if any.
  std::optional<PropositionSet> disagreement;
  bool attack_valid = false;
  bool conditionally_transitive = false;

  bool holds() const noexcept {
    return grounded_equals_threshold_family && beliefs_agree && attack_valid &&
           conditionally_transitive;
  }
};

inline constexpr std::size_t kMaxWorldsForCorrespondence = 5;

CorrespondenceReport pb_grounded_correspondence(const ProbabilisticModel& pmodel);

/// N = { S | mu(S) > threshold }.
NeighborhoodModel pb_to_neighborhood(const ProbabilisticModel& pmodel,
                                     const Rational& threshold = one_half());

}  // namespace argbelief
