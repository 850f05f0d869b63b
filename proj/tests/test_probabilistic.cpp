#include "doctest.h"

#include "argbelief/doxastics.hpp"
#include "argbelief/generator.hpp"
#include "argbelief/probabilistic.hpp"
#include "helpers.hpp"

using namespace argbelief;
using namespace testing_support;

namespace {

ProbabilisticModel uniform3() {
  const Rational third(1, 3);
  Domain d({"1", "2", "3"});
  Valuation v{{"p", d.make_set({"1", "2"})}, {"q", d.make_set({"2", "3"})}};
  return make_probabilistic_model(d, {third, third, third}, v);
}

ErrorKind kind_of(const std::function<void()>& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.kind();
  }
  return ErrorKind::input_error;
}

}  // namespace

TEST_CASE("uniform measure over three worlds") {
  const auto pm = uniform3();
  CHECK(pm.measure(pm.domain().make_set({"1", "2"})) == Rational(2, 3));
  CHECK(pm.strictly_positive());
  CHECK(believes_probabilistic(pm, parse_formula("p")));
  CHECK(believes_probabilistic(pm, parse_formula("q")));
  CHECK_FALSE(believes_probabilistic(pm, parse_formula("p & q")));
  CHECK(believes_probabilistic(pm, parse_formula("B p & B q & ~B(p & q)")));
  CHECK_FALSE(believes_probabilistic(pm, parse_formula("p"), Rational(2, 3)));
  CHECK(believes_probabilistic(pm, parse_formula("p & q"), Rational(1, 4)));
}

TEST_CASE("measure attack over the uniform powerset") {
  const auto pm = uniform3();
  const auto g = mu_attack(pm);
  const auto& d = pm.domain();
  const auto two = *g.index_of(d.make_set({"2"}));
  const auto one_three = *g.index_of(d.make_set({"1", "3"}));
  CHECK(g.attacks(one_three, two));
  CHECK_FALSE(g.attacks(two, one_three));
  const auto one = *g.index_of(d.make_set({"1"}));
  CHECK(g.attacks(one, two));
  CHECK(g.attacks(two, one));
  CHECK(validate_attack(g).empty());
  const auto m = to_argumentation_model(pm);
  CHECK(m.grounded_sets() == sets(m, {{"1", "2"}, {"1", "3"}, {"2", "3"}, {"1", "2", "3"}}));
}

TEST_CASE("measure construction errors") {
  const Domain d({"1", "2"});
  CHECK(kind_of([&] { make_probabilistic_model(d, {Rational(1, 2), Rational(1, 3)}, {}); }) ==
        ErrorKind::invalid_measure);
  CHECK(kind_of([&] { make_probabilistic_model(d, {Rational(3, 2), Rational(-1, 2)}, {}); }) ==
        ErrorKind::invalid_measure);
  const auto zero = make_probabilistic_model(d, {Rational(1), Rational(0)}, {});
  CHECK_FALSE(zero.strictly_positive());
  CHECK(kind_of([&] { to_argumentation_model(zero); }) == ErrorKind::zero_mass_world);
}

TEST_CASE("correspondence with a skewed measure") {
  const Domain d({"1", "2", "3"});
  const auto pm = make_probabilistic_model(d, {Rational(9, 10), Rational(1, 20), Rational(1, 20)}, {});
  const auto report = pb_grounded_correspondence(pm);
  CHECK(report.holds());
  CHECK(report.grounded == report.above_half);
  CHECK(report.above_half.front() == d.make_set({"1"}));
  CHECK(report.above_half.size() == 4);
}

TEST_CASE("correspondence on random measures") {
  for (std::size_t worlds = 1; worlds <= 4; ++worlds) {
    for (std::uint64_t seed = 1; seed <= 40; ++seed) {
      const auto pm = generate_probabilistic_model(worlds, seed);
      CHECK(pm.strictly_positive());
      const auto report = pb_grounded_correspondence(pm);
      INFO("worlds " << worlds << " seed " << seed);
      CHECK(report.holds());
      CHECK_FALSE(report.disagreement);
      // Exact brute force: the grounded extension is every set of measure above one half.
      const auto m = to_argumentation_model(pm);
      for (WorldMask bits = 0; bits <= PropositionSet::full_mask(worlds); ++bits) {
        const PropositionSet s(worlds, bits);
        Rational mass = 0;
        for (std::size_t w = 0; w < worlds; ++w) {
          if (((bits >> w) & 1U) != 0) mass += pm.masses()[w];
        }
        CHECK(believes_grounded(m, s).believed == (mass > one_half()));
      }
    }
  }
}

TEST_CASE("probabilistic neighborhoods satisfy the axioms") {
  const auto pm = uniform3();
  const auto n = pb_to_neighborhood(pm);
  CHECK(n.neighborhood().size() == 4);
  const auto report = check_axioms(n);
  CHECK(report.sound());
  CHECK_FALSE(report.result(Schema::c).valid);
  for (std::uint64_t seed = 1; seed <= 30; ++seed) {
    CHECK(check_axioms(pb_to_neighborhood(generate_probabilistic_model(1 + seed % 4, seed))).sound());
  }
}

TEST_CASE("correspondence refuses large domains") {
  std::vector<std::string> labels;
  std::vector<Rational> masses;
  for (std::size_t i = 0; i <= kMaxWorldsForCorrespondence; ++i) {
    labels.push_back("w" + std::to_string(i));
    masses.emplace_back(1, static_cast<long>(kMaxWorldsForCorrespondence + 1));
  }
  const auto pm = make_probabilistic_model(Domain(labels), masses, {});
  CHECK(kind_of([&] { pb_grounded_correspondence(pm); }) == ErrorKind::domain_too_large);
}
