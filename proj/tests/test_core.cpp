#include "doctest.h"

#include "argbelief/domain.hpp"
#include "argbelief/model.hpp"
#include "argbelief/rational.hpp"
#include "helpers.hpp"

using namespace argbelief;
using namespace testing_support;

namespace {

ErrorKind kind_of(const std::function<void()>& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.kind();
  }
  FAIL("no error raised");
  return ErrorKind::input_error;
}

}  // namespace

TEST_CASE("set algebra over a three-world domain") {
  const Domain d({"1", "2", "3"});
  const auto a = d.make_set({"1", "2"});
  const auto b = d.make_set({"2", "3"});
  CHECK((a & b) == d.make_set({"2"}));
  CHECK((a | b) == d.full());
  CHECK(a.complement() == d.make_set({"3"}));
  CHECK(d.make_set({"1"}).subset_of(a));
  CHECK_FALSE(b.subset_of(a));
  CHECK(a.minus(b) == d.make_set({"1"}));
  CHECK(d.format(a) == "{1,2}");
  CHECK(d.format(d.empty_set()) == "{}");
  CHECK(d.label_list(b) == std::vector<std::string>{"2", "3"});
}

TEST_CASE("sets from different domains do not mix") {
  const PropositionSet a(3, 0b011);
  const PropositionSet b(4, 0b011);
  CHECK(kind_of([&] { (void)(a & b); }) == ErrorKind::domain_mismatch);
  CHECK(kind_of([&] { (void)a.subset_of(b); }) == ErrorKind::domain_mismatch);
  CHECK(kind_of([] { PropositionSet(2, 0b100); }) == ErrorKind::evidence_outside_domain);
  CHECK(kind_of([] { PropositionSet(25, 1); }) == ErrorKind::domain_too_large);
}

TEST_CASE("canonical order is by size, then by lowest differing world") {
  std::vector<PropositionSet> fam{{3, 0b111}, {3, 0b110}, {3, 0b001}, {3, 0b101}, {3, 0}, {3, 0b011}, {3, 0b011}};
  canonicalize(fam);
  std::vector<WorldMask> bits;
  for (const auto& s : fam) bits.push_back(s.bits());
  CHECK(bits == std::vector<WorldMask>{0, 0b001, 0b011, 0b101, 0b110, 0b111});
}

TEST_CASE("domain construction errors") {
  CHECK(kind_of([] { Domain(std::vector<std::string>{}); }) == ErrorKind::empty_domain);
  CHECK(kind_of([] { Domain({"a", "a"}); }) == ErrorKind::duplicate_world);
  CHECK(kind_of([] { Domain({"a"}).make_set({"b"}); }) == ErrorKind::unknown_world);
  CHECK(is_atom_name("not_mammal"));
  CHECK_FALSE(is_atom_name("Bp"));
  CHECK_FALSE(is_atom_name("true"));
}

TEST_CASE("rational parsing") {
  CHECK(parse_rational("1/3") == Rational(1, 3));
  CHECK(parse_rational("2/4") == Rational(1, 2));
  CHECK(parse_rational("0.25") == Rational(1, 4));
  CHECK(parse_rational("-3") == Rational(-3));
  CHECK(parse_rational("0.05") == Rational(1, 20));
  CHECK(parse_rational("010/08") == Rational(5, 4));
  CHECK(format_rational(Rational(6, 4)) == "3/2");
  CHECK(format_rational(Rational(2)) == "2");
  CHECK(kind_of([] { parse_rational("1/0"); }) == ErrorKind::input_error);
  CHECK(kind_of([] { parse_rational("a/2"); }) == ErrorKind::input_error);
  CHECK(kind_of([] { parse_rational(""); }) == ErrorKind::input_error);
}

TEST_CASE("the three-world example builds with the full powerset topology") {
  const auto m = fig1();
  CHECK(m.topology().size() == 8);
  CHECK(m.topology().is_discrete());
  CHECK(m.warnings().empty());
  CHECK(validate_attack(m.attack()).empty());
}

TEST_CASE("smallest model") {
  ModelInput in;
  in.worlds = {"1"};
  in.evidence = {{"1"}};
  const auto m = build_model(in);
  CHECK(m.topology().size() == 2);
  CHECK(m.grounded_sets() == std::vector<PropositionSet>{m.domain().full()});
}

TEST_CASE("dropping the attack of {2} on {1,3} keeps the relation valid") {
  auto pairs = fig1_pairs();
  std::erase(pairs, Pair{{"1", "3"}, {"2"}});
  const auto m = build_model(fig1_input(pairs));
  CHECK(validate_attack(m.attack()).empty());
  CHECK(oracle::scan_conditions(masks(m.attack().nodes()), attack_fn(m.attack())).ok());
}

TEST_CASE("dropping {1} <- {2} while {1,3} <- {2} stays breaks condition 2") {
  auto pairs = fig1_pairs();
  std::erase(pairs, Pair{{"1"}, {"2"}});
  try {
    build_model(fig1_input(pairs));
    FAIL("expected AttackInvalid");
  } catch (const AttackInvalid& e) {
    CHECK(e.kind() == ErrorKind::attack_invalid);
    const auto& v = e.violation();
    REQUIRE(v.condition == 2);
    const Domain d({"1", "2", "3"});
    CHECK(v.witness == std::vector<PropositionSet>{d.make_set({"1", "3"}), d.make_set({"1"}), d.make_set({"2"})});
  }
  ModelOptions close;
  close.close = true;
  const auto repaired = build_model(fig1_input(pairs), close);
  CHECK(repaired.attack().attacks(*repaired.attack().index_of(set(repaired, {"2"})),
                                  *repaired.attack().index_of(set(repaired, {"1"}))));
}

TEST_CASE("dropping {1} <- {2,3} breaks condition 1") {
  auto pairs = fig1_pairs();
  std::erase(pairs, Pair{{"1"}, {"2", "3"}});
  try {
    build_model(fig1_input(pairs));
    FAIL("expected AttackInvalid");
  } catch (const AttackInvalid& e) {
    const auto& v = e.violation();
    CHECK(v.condition == 1);
    const Domain d({"1", "2", "3"});
    CHECK(v.witness == std::vector<PropositionSet>{d.make_set({"1"}), d.make_set({"2", "3"})});
  }
}

TEST_CASE("model input errors") {
  SUBCASE("empty evidence piece") {
    auto in = fig1_input();
    in.evidence.push_back({});
    CHECK(kind_of([&] { build_model(in); }) == ErrorKind::empty_evidence_piece);
  }
  SUBCASE("evidence outside the domain") {
    auto in = fig1_input();
    in.evidence.push_back({"4"});
    CHECK(kind_of([&] { build_model(in); }) == ErrorKind::evidence_outside_domain);
  }
  SUBCASE("no worlds") {
    ModelInput in;
    CHECK(kind_of([&] { build_model(in); }) == ErrorKind::empty_domain);
  }
  SUBCASE("missing unit is an error only when strict") {
    auto in = fig1_input();
    in.evidence.pop_back();
    const auto m = build_model(in);
    CHECK(m.warnings().size() == 1);
    CHECK(m.evidence().back() == m.domain().full());
    ModelOptions strict;
    strict.strict = true;
    CHECK(kind_of([&] { build_model(in, strict); }) == ErrorKind::missing_unit);
  }
  SUBCASE("attack on a set that is not open") {
    auto in = fig1_input();
    in.evidence = {{"1", "2"}, {"1", "2", "3"}};
    in.pairs = {{{"1"}, {"3"}}};
    CHECK(kind_of([&] { build_model(in); }) == ErrorKind::attack_endpoint_invalid);
  }
  SUBCASE("world cap") {
    ModelInput in;
    for (int i = 0; i < 17; ++i) in.worlds.push_back("w" + std::to_string(i));
    in.evidence = {in.worlds};
    CHECK(kind_of([&] { build_model(in); }) == ErrorKind::domain_too_large);
  }
  SUBCASE("valuation outside the domain") {
    auto in = fig1_input();
    in.valuation["p"] = {"9"};
    CHECK(kind_of([&] { build_model(in); }) == ErrorKind::unknown_world);
  }
  SUBCASE("zero weight in measure mode") {
    ModelInput in;
    in.worlds = {"1", "2"};
    in.evidence = {{"1"}, {"2"}};
    in.mode = AttackMode::measure;
    in.weights = {{"1", Rational(1)}, {"2", Rational(0)}};
    CHECK(kind_of([&] { build_model(in); }) == ErrorKind::zero_mass_world);
  }
}

TEST_CASE("duplicate evidence collapses and construction is deterministic") {
  auto in = fig1_input();
  in.evidence.push_back({"2", "1"});
  const auto a = build_model(in);
  const auto b = build_model(fig1_input());
  CHECK(a.evidence() == b.evidence());
  CHECK(a.topology().opens() == b.topology().opens());
  CHECK(a.attack().edges() == b.attack().edges());
}
