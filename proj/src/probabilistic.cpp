#include "argbelief/probabilistic.hpp"

#include <algorithm>
#include <string>

#include "argbelief/doxastics.hpp"

namespace argbelief {

Rational ProbabilisticModel::measure(const PropositionSet& set) const {
  if (set.width() != domain_.size()) {
    throw Error(ErrorKind::domain_mismatch, "proposition over another domain");
  }
  return weight_of(set, masses_);
}

bool ProbabilisticModel::strictly_positive() const {
  return std::all_of(masses_.begin(), masses_.end(), [](const Rational& m) { return m > 0; });
}

ProbabilisticModel make_probabilistic_model(Domain domain, std::vector<Rational> masses,
                                            Valuation valuation) {
  if (masses.size() != domain.size()) {
    throw Error(ErrorKind::invalid_measure, "expected one mass per world");
  }
  Rational total = 0;
  for (std::size_t w = 0; w < masses.size(); ++w) {
    if (masses[w] < 0) {
      throw Error(ErrorKind::invalid_measure,
                  "world " + domain.label(w) + " has negative mass " + format_rational(masses[w]));
    }
    total += masses[w];
  }
  if (total != 1) {
    throw Error(ErrorKind::invalid_measure, "masses sum to " + format_rational(total) + ", not 1");
  }
  validate_valuation(domain, valuation);
  ProbabilisticModel out;
  out.domain_ = std::move(domain);
  out.masses_ = std::move(masses);
  out.valuation_ = std::move(valuation);
  return out;
}

BeliefTest probabilistic_belief_test(const ProbabilisticModel& pmodel, const Rational& threshold) {
  return [&pmodel, threshold](const PropositionSet& p) { return pmodel.measure(p) > threshold; };
}

bool believes_probabilistic(const ProbabilisticModel& pmodel, const Formula& formula,
                            const Rational& threshold, const EvaluationOptions& options) {
  const std::size_t n = pmodel.domain().size();
  const auto extent = evaluate(formula, n, pmodel.valuation(),
                               probabilistic_belief_test(pmodel, threshold), options);
  return pmodel.measure(extent) > threshold;
}

Model to_argumentation_model(const ProbabilisticModel& pmodel, const ModelOptions& options) {
  const auto& domain = pmodel.domain();
  for (std::size_t w = 0; w < domain.size(); ++w) {
    if (pmodel.masses()[w] == 0) {
      throw Error(ErrorKind::zero_mass_world,
                  "world " + domain.label(w) + " has zero mass; the measure attack needs strictly positive masses");
    }
  }
  std::vector<PropositionSet> evidence;
  for (std::size_t w = 0; w < domain.size(); ++w) {
    evidence.push_back(PropositionSet::singleton(domain.size(), w));
  }
  evidence.push_back(domain.full());
  AttackSpec spec;
  spec.mode = AttackMode::measure;
  spec.weights = pmodel.masses();
  return build_model(domain, std::move(evidence), std::move(spec), pmodel.valuation(), options);
}

AttackGraph mu_attack(const ProbabilisticModel& pmodel) {
  return to_argumentation_model(pmodel).attack();
}

CorrespondenceReport pb_grounded_correspondence(const ProbabilisticModel& pmodel) {
  const std::size_t n = pmodel.domain().size();
  if (n > kMaxWorldsForCorrespondence) {
    throw Error(ErrorKind::domain_too_large,
                "correspondence checks are limited to " +
                    std::to_string(kMaxWorldsForCorrespondence) + " worlds");
  }
  const Model model = to_argumentation_model(pmodel);
  CorrespondenceReport report;
  report.grounded = model.grounded_sets();
  for (std::uint64_t bits = 0; bits < (std::uint64_t{1} << n); ++bits) {
    const PropositionSet s(n, static_cast<WorldMask>(bits));
    if (pmodel.measure(s) > one_half()) report.above_half.push_back(s);
  }
  canonicalize(report.above_half);
  report.grounded_equals_threshold_family = report.grounded == report.above_half;

  report.beliefs_agree = true;
  const auto pb = probabilistic_belief_test(pmodel);
  for (std::uint64_t bits = 0; bits < (std::uint64_t{1} << n); ++bits) {
    const PropositionSet s(n, static_cast<WorldMask>(bits));
    if (believes_grounded(model, s).believed != pb(s)) {
      report.beliefs_agree = false;
      report.disagreement = s;
      break;
    }
  }
  report.attack_valid = validate_attack(model.attack()).empty();
  report.conditionally_transitive = is_conditionally_transitive(model.attack());
  return report;
}

NeighborhoodModel pb_to_neighborhood(const ProbabilisticModel& pmodel, const Rational& threshold) {
  const std::size_t n = pmodel.domain().size();
  std::vector<PropositionSet> family;
  for (std::uint64_t bits = 0; bits < (std::uint64_t{1} << n); ++bits) {
    const PropositionSet s(n, static_cast<WorldMask>(bits));
    if (pmodel.measure(s) > threshold) family.push_back(s);
  }
  return make_neighborhood_model(pmodel.domain(), std::move(family), pmodel.valuation());
}

}  // namespace argbelief
