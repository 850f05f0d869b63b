#include "argbelief/logic.hpp"

#include <algorithm>
#include <set>
#include <string>

#include "argbelief/doxastics.hpp"

namespace argbelief {

namespace {

WorldMask eval_mask(const Formula& f, std::size_t width, const Valuation& valuation,
                    const BeliefTest& believed, const EvaluationOptions& options) {
  const WorldMask all = PropositionSet::full_mask(width);
  switch (f.kind()) {
    case Formula::Kind::atom: {
      const auto it = valuation.find(f.name());
      if (it == valuation.end()) {
        if (options.unknown_atoms_empty) return 0;
        throw Error(ErrorKind::unknown_atom, "atom \"" + f.name() + "\" has no valuation");
      }
      if (it->second.width() != width) {
        throw Error(ErrorKind::domain_mismatch, "valuation of \"" + f.name() + "\" uses another domain");
      }
      return it->second.bits();
    }
    case Formula::Kind::top: return all;
    case Formula::Kind::negation:
      return all & ~eval_mask(f.left(), width, valuation, believed, options);
    case Formula::Kind::conjunction:
      return eval_mask(f.left(), width, valuation, believed, options) &
             eval_mask(f.right(), width, valuation, believed, options);
    case Formula::Kind::belief: {
      const WorldMask inner = eval_mask(f.left(), width, valuation, believed, options);
      return believed(PropositionSet(width, inner)) ? all : 0;
    }
  }
  return 0;
}

std::vector<PropositionSet> all_propositions(std::size_t width) {
  std::vector<PropositionSet> out;
  out.reserve(std::size_t{1} << width);
  for (std::uint64_t bits = 0; bits < (std::uint64_t{1} << width); ++bits) {
    out.emplace_back(width, static_cast<WorldMask>(bits));
  }
  std::sort(out.begin(), out.end(), CanonicalLess{});
  return out;
}

}  // namespace

PropositionSet evaluate(const Formula& formula, std::size_t width, const Valuation& valuation,
                        const BeliefTest& believed, const EvaluationOptions& options) {
  return {width, eval_mask(formula, width, valuation, believed, options)};
}

BeliefTest grounded_belief_test(const Model& model) {
  std::vector<WorldMask> members;
  for (const auto& f : model.grounded_sets()) members.push_back(f.bits());
  return [members = std::move(members)](const PropositionSet& p) {
    return std::any_of(members.begin(), members.end(),
                       [&](WorldMask f) { return (f & ~p.bits()) == 0; });
  };
}

PropositionSet extension(const Model& model, const Formula& formula,
                         const EvaluationOptions& options) {
  return evaluate(formula, model.world_count(), model.valuation(), grounded_belief_test(model),
                  options);
}

std::vector<std::string> neighborhood_violations(const Domain& domain,
                                                 const std::vector<PropositionSet>& family) {
  std::vector<std::string> out;
  const std::size_t n = domain.size();
  std::unordered_set<WorldMask> members;
  for (const auto& b : family) {
    if (b.width() != n) {
      out.push_back("a neighborhood member belongs to another domain");
      return out;
    }
    members.insert(b.bits());
  }
  const WorldMask all = PropositionSet::full_mask(n);
  if (members.count(all) == 0) out.push_back("the whole domain is not in the neighborhood");
  for (const auto& b : family) {
    // Immediate supersets suffice: closure then follows by induction.
    for (std::size_t w = 0; w < n; ++w) {
      const WorldMask up = b.bits() | (WorldMask{1} << w);
      if (up != b.bits() && members.count(up) == 0) {
        out.push_back(domain.format(b) + " is in the neighborhood but its superset " +
                      domain.format(PropositionSet(n, up)) + " is not");
        break;
      }
    }
    if (members.count(all & ~b.bits()) != 0) {
      out.push_back(domain.format(b) + " and its complement are both in the neighborhood");
    }
  }
  return out;
}

NeighborhoodModel make_neighborhood_model(Domain domain, std::vector<PropositionSet> family,
                                          Valuation valuation) {
  canonicalize(family);
  if (const auto violations = neighborhood_violations(domain, family); !violations.empty()) {
    throw Error(ErrorKind::neighborhood_invalid, violations.front());
  }
  validate_valuation(domain, valuation);
  NeighborhoodModel out;
  out.domain_ = std::move(domain);
  out.members_ = std::move(family);
  for (const auto& b : out.members_) out.lookup_.insert(b.bits());
  out.valuation_ = std::move(valuation);
  return out;
}

NeighborhoodModel to_neighborhood(const Model& model) {
  const auto believed = grounded_belief_test(model);
  std::vector<PropositionSet> family;
  for (const auto& b : all_propositions(model.world_count())) {
    if (believed(b)) family.push_back(b);
  }
  return make_neighborhood_model(model.domain(), std::move(family), model.valuation());
}

std::vector<std::pair<PropositionSet, PropositionSet>> neighborhood_attack_pairs(
    const NeighborhoodModel& nmodel) {
  std::vector<std::pair<PropositionSet, PropositionSet>> out;
  const auto props = all_propositions(nmodel.domain().size());
  for (const auto& t : props) {
    if (t.empty() || nmodel.contains(t)) continue;
    for (const auto& attacker : props) {
      if (!attacker.empty() && !t.intersects(attacker)) out.emplace_back(t, attacker);
    }
  }
  return out;
}

Model from_neighborhood(const NeighborhoodModel& nmodel, const ModelOptions& options) {
  const auto& domain = nmodel.domain();
  std::vector<PropositionSet> evidence;
  for (std::size_t w = 0; w < domain.size(); ++w) {
    evidence.push_back(PropositionSet::singleton(domain.size(), w));
  }
  evidence.push_back(domain.full());
  AttackSpec spec;
  spec.mode = AttackMode::explicit_pairs;
  spec.pairs = neighborhood_attack_pairs(nmodel);
  ModelOptions exact = options;
  exact.close = false;
  return build_model(domain, std::move(evidence), std::move(spec), nmodel.valuation(), exact);
}

BeliefTest neighborhood_belief_test(const NeighborhoodModel& nmodel) {
  return [&nmodel](const PropositionSet& p) { return nmodel.contains(p); };
}

PropositionSet check_neighborhood_semantics(const NeighborhoodModel& nmodel, const Formula& formula,
                                            const EvaluationOptions& options) {
  return evaluate(formula, nmodel.domain().size(), nmodel.valuation(),
                  neighborhood_belief_test(nmodel), options);
}

bool AxiomReport::sound() const {
  return std::all_of(results.begin(), results.end(),
                     [](const SchemaResult& r) { return !r.in_axiom_system || r.valid; });
}

const SchemaResult& AxiomReport::result(Schema schema) const {
  const auto it = std::find_if(results.begin(), results.end(),
                               [&](const SchemaResult& r) { return r.schema == schema; });
  if (it == results.end()) throw Error(ErrorKind::input_error, "schema missing from report");
  return *it;
}

namespace {

struct SchemaSpec {
  Schema schema;
  const char* name;
  const char* premise;  // rules only
  const char* formula;
  bool binary;
  bool in_axiom_system;
};

constexpr SchemaSpec kSchemas[] = {
    {Schema::four, "4", nullptr, "B p -> B B p", false, true},
    {Schema::five, "5", nullptr, "~B p -> B ~B p", false, true},
    {Schema::d, "D", nullptr, "B p -> ~B ~p", false, true},
    {Schema::m, "M", nullptr, "B(p & q) -> B p & B q", true, true},
    {Schema::n, "N", nullptr, "B true", false, true},
    {Schema::re, "RE", "p <-> q", "B p <-> B q", true, true},
    {Schema::c, "C", nullptr, "B p & B q -> B(p & q)", true, false},
};

}  // namespace

AxiomReport check_axioms(std::size_t width, const BeliefTest& believed) {
  if (width > kMaxWorldsForAxioms) {
    throw Error(ErrorKind::domain_too_large,
                "axiom instantiation is limited to " + std::to_string(kMaxWorldsForAxioms) + " worlds");
  }
  const auto props = all_propositions(width);
  const WorldMask all = PropositionSet::full_mask(width);
  AxiomReport report;
  for (const auto& spec : kSchemas) {
    const Formula formula = parse_formula(spec.formula);
    const std::optional<Formula> premise =
        spec.premise ? std::optional<Formula>(parse_formula(spec.premise)) : std::nullopt;
    SchemaResult result{spec.schema, spec.name,
                        spec.premise ? std::string(spec.premise) + " / " + spec.formula : spec.formula,
                        spec.in_axiom_system, true, {}};
    Valuation valuation;
    for (const auto& p : props) {
      for (const auto& q : props) {
        if (!spec.binary && q != props.front()) break;
        valuation.insert_or_assign("p", p);
        valuation.insert_or_assign("q", q);
        if (premise && eval_mask(*premise, width, valuation, believed, {}) != all) continue;
        if (eval_mask(formula, width, valuation, believed, {}) != all) {
          result.valid = false;
          result.witness = spec.binary ? std::vector<PropositionSet>{p, q} : std::vector<PropositionSet>{p};
          break;
        }
      }
      if (!result.valid) break;
    }
    report.results.push_back(std::move(result));
  }
  return report;
}

AxiomReport check_axioms(const Model& model) {
  return check_axioms(model.world_count(), grounded_belief_test(model));
}

AxiomReport check_axioms(const NeighborhoodModel& nmodel) {
  return check_axioms(nmodel.domain().size(), neighborhood_belief_test(nmodel));
}

bool modally_equivalent(std::size_t width, const Valuation& valuation, const BeliefTest& lhs,
                        const BeliefTest& rhs, std::size_t depth) {
  using Pair = std::pair<WorldMask, WorldMask>;
  const WorldMask all = PropositionSet::full_mask(width);
  std::set<Pair> values{{all, all}};
  for (const auto& [name, set] : valuation) values.insert({set.bits(), set.bits()});

  // Closes the value pairs under negation and conjunction; false as soon as
  // some formula separates the two models.
  auto boolean_closure = [&]() {
    bool grew = true;
    while (grew) {
      grew = false;
      const std::vector<Pair> snapshot(values.begin(), values.end());
      for (const auto& [a, b] : snapshot) {
        if (values.insert({all & ~a, all & ~b}).second) grew = true;
        for (const auto& [c, d] : snapshot) {
          if (values.insert({a & c, b & d}).second) grew = true;
        }
      }
    }
    return std::all_of(values.begin(), values.end(), [](const Pair& v) { return v.first == v.second; });
  };

  if (!boolean_closure()) return false;
  for (std::size_t level = 0; level < depth; ++level) {
    const std::vector<Pair> snapshot(values.begin(), values.end());
    for (const auto& [a, b] : snapshot) {
      values.insert({lhs(PropositionSet(width, a)) ? all : 0, rhs(PropositionSet(width, b)) ? all : 0});
    }
    if (!boolean_closure()) return false;
  }
  return true;
}

}  // namespace argbelief
