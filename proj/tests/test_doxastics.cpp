#include "doctest.h"

#include "argbelief/doxastics.hpp"
#include "argbelief/generator.hpp"
#include "helpers.hpp"

using namespace argbelief;
using namespace testing_support;

namespace {

std::set<oracle::Mask> open_masks(const Model& m) {
  std::set<oracle::Mask> out;
  for (const auto& o : m.topology().opens()) out.insert(o.bits());
  return out;
}

Model symmetric_fig1() {
  auto in = fig1_input();
  in.mode = AttackMode::symmetric;
  in.pairs.clear();
  return build_model(in);
}

}  // namespace

TEST_CASE("grounded belief in the example") {
  const auto m = fig1();
  const auto b12 = believes_grounded(m, set(m, {"1", "2"}));
  CHECK(b12.believed);
  CHECK(b12.witness == set(m, {"1", "2"}));
  CHECK(believes_grounded(m, set(m, {"2", "3"})).believed);
  CHECK_FALSE(believes_grounded(m, set(m, {"2"})).believed);
  CHECK_FALSE(believes_grounded(m, set(m, {"2"})).witness);
  CHECK(believes_grounded(m, m.domain().full()).believed);
  CHECK_FALSE(believes_grounded(m, m.domain().empty_set()).believed);
}

TEST_CASE("evidence-based belief in the example holds only for the whole domain") {
  const auto m = fig1();
  CHECK_FALSE(believes_evidence_based(m, set(m, {"1", "2"})).believed);
  for (WorldMask p = 0; p < 8; ++p) {
    const PropositionSet prop(3, p);
    CHECK(believes_evidence_based(m, prop).believed == prop.is_full());
  }
  const auto x = believes_evidence_based(m, m.domain().full());
  REQUIRE(x.witness);
  CHECK(x.witness->subset_of(m.domain().full()));
}

TEST_CASE("maximal-body belief in the example") {
  const auto m = fig1();
  CHECK(believes_maximal_body(m, m.domain().full()).believed);
  CHECK_FALSE(believes_maximal_body(m, set(m, {"1", "2"})).believed);
}

TEST_CASE("unit-only evidence") {
  ModelInput in;
  in.worlds = {"1", "2"};
  in.evidence = {{"1", "2"}};
  const auto m = build_model(in);
  CHECK(believes_maximal_body(m, m.domain().full()).believed);
  CHECK(justification_set(m).opens == std::vector<PropositionSet>{m.domain().full()});
}

TEST_CASE("justifications of the example") {
  const auto m = fig1();
  CHECK(justification_set(m).opens == std::vector<PropositionSet>{m.domain().full()});
}

TEST_CASE("belief comparison on the example and its symmetric variant") {
  const auto m = fig1();
  const auto cmp = compare_beliefs(m);
  CHECK(cmp.consistent());
  REQUIRE(cmp.rows.size() == 8);
  for (const auto& row : cmp.rows) {
    const bool up = set(m, {"1", "2"}).subset_of(row.proposition) || set(m, {"2", "3"}).subset_of(row.proposition);
    CHECK(row.grounded == up);
    CHECK(row.evidence_based == row.proposition.is_full());
  }
  const auto sym = symmetric_fig1();
  for (const auto& row : compare_beliefs(sym).rows) CHECK(row.grounded == row.evidence_based);
  CHECK(sym.grounded_sets() == justification_set(sym).opens);
}

TEST_CASE("notion names and world argument") {
  CHECK(parse_belief_notion("bel") == BeliefNotion::evidence_based);
  CHECK(parse_belief_notion("vbp") == BeliefNotion::maximal_body);
  CHECK(parse_belief_notion("grounded") == BeliefNotion::grounded);
  const auto m = fig1();
  CHECK(believes(m, set(m, {"1", "2"}), BeliefNotion::grounded, 2).believed);
  try {
    believes(m, set(m, {"1"}), BeliefNotion::grounded, 3);
    FAIL("expected UnknownWorld");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::unknown_world);
  }
}

TEST_CASE("belief notions against definitional oracles on random models") {
  for (const auto mode : {GeneratorMode::explicit_random, GeneratorMode::symmetric, GeneratorMode::measure}) {
    for (std::uint64_t seed = 1; seed <= 80; ++seed) {
      GeneratorConfig c;
      c.seed = seed;
      c.mode = mode;
      c.world_count = 1 + seed % 4;
      const auto m = generate_random_model(c);
      const auto opens = open_masks(m);
      const auto ev = masks(m.evidence());
      const auto lfp = masks(m.grounded_sets());
      const auto j = oracle::justifications(opens, oracle::combined(m.world_count(), ev));
      std::set<oracle::Mask> j_lib;
      for (const auto& t : justification_set(m).opens) j_lib.insert(t.bits());
      CHECK(j_lib == j);
      const auto n = m.world_count();
      for (WorldMask p = 0; p <= PropositionSet::full_mask(n); ++p) {
        const PropositionSet prop(n, p);
        const bool b = std::any_of(lfp.begin(), lfp.end(), [&](oracle::Mask f) { return oracle::subset(f, p); });
        const auto grounded = believes_grounded(m, prop);
        CHECK(grounded.believed == b);
        if (grounded.witness) CHECK(grounded.witness->subset_of(prop));
        const auto bel = believes_evidence_based(m, prop);
        CHECK(bel.believed == oracle::bel(opens, p));
        if (bel.witness) {
          CHECK(bel.witness->subset_of(prop));
          CHECK(m.topology().is_open(*bel.witness));
        }
        CHECK(believes_maximal_body(m, prop).believed == oracle::vbp(n, ev, p));
        if (bel.believed) CHECK(b);
        CHECK_FALSE((b && believes_grounded(m, prop.complement()).believed));
        for (WorldMask q = 0; q <= PropositionSet::full_mask(n); ++q) {
          if (b && oracle::subset(p, q)) CHECK(believes_grounded(m, PropositionSet(n, q)).believed);
        }
      }
      CHECK(compare_beliefs(m).consistent());
    }
  }
}

TEST_CASE("symmetric attack makes grounded beliefs closed under intersection") {
  for (std::uint64_t seed = 1; seed <= 60; ++seed) {
    GeneratorConfig c;
    c.seed = seed;
    c.mode = GeneratorMode::symmetric;
    c.world_count = 1 + seed % 4;
    const auto m = generate_random_model(c);
    const auto n = m.world_count();
    for (WorldMask p = 0; p <= PropositionSet::full_mask(n); ++p) {
      for (WorldMask q = 0; q <= PropositionSet::full_mask(n); ++q) {
        if (believes_grounded(m, {n, p}).believed && believes_grounded(m, {n, q}).believed) {
          CHECK(believes_grounded(m, {n, p & q}).believed);
        }
      }
    }
  }
}
