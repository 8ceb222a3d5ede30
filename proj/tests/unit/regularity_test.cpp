#include <gtest/gtest.h>

#include "borel/driver.hpp"
#include "borel/errors.hpp"
#include "borel/regularity.hpp"
#include "support/oracles.hpp"

namespace borel {
namespace {

using testing::ideal;

Subquotient cyc(std::size_t n, std::initializer_list<const char*> gens) {
  return Subquotient::cyclic(ideal(n, gens));
}

// Same generators in one more variable.
MonomialIdeal widen(const MonomialIdeal& i) {
  std::vector<Monomial> gens;
  for (const auto& g : i.generators()) {
    std::vector<Exponent> e(g.exponents().begin(), g.exponents().end());
    e.push_back(0);
    gens.emplace_back(std::move(e));
  }
  return MonomialIdeal(i.nvars() + 1, std::move(gens));
}

TEST(Regularity, Examples) {
  auto r = regularity_borel(cyc(2, {"x1^2", "x1*x2"}));
  EXPECT_EQ(r.reg, 1);
  ASSERT_EQ(r.steps.size(), 2U);
  EXPECT_EQ(r.steps[0].s, 1U);
  EXPECT_EQ(r.steps[1].s, 0U);
  EXPECT_EQ(r.steps[0].a_invariant, 1);
  EXPECT_EQ(r.steps[1].a_invariant, -1);
  EXPECT_EQ(r.dim, 1);
  EXPECT_EQ(r.depth, 0);

  auto t = betti_table(ideal(2, {"x1^2", "x1*x2"}));
  auto totals = t.totals();
  EXPECT_EQ((totals[{1, 2}]), 2);
  EXPECT_EQ((totals[{2, 3}]), 1);
  EXPECT_EQ(oracle_invariants(t).reg, 1);

  EXPECT_EQ(regularity_borel(cyc(2, {"x1"})).reg, 0);
  EXPECT_EQ(oracle_invariants(betti_table(ideal(2, {"x1"}))).reg, 0);
  EXPECT_EQ(regularity_borel(cyc(2, {"x1", "x2"})).reg, 0);

  EXPECT_THROW(regularity_borel(Subquotient(ideal(2, {"x1"}), ideal(2, {"x1"}))), ZeroModule);
  EXPECT_THROW(regularity_borel(cyc(2, {"x2"})), NotBorelType);
}

TEST(Regularity, SubquotientModule) {
  auto r = regularity_borel(Subquotient(ideal(2, {"x1"}), ideal(2, {"x1^2", "x1*x2"})));
  EXPECT_EQ(r.reg, 1);
  EXPECT_EQ(r.dim, 0);
}

TEST(Lemma22, Examples) {
  for (auto m : {cyc(2, {"x1^2", "x1*x2"}), cyc(2, {"x1*x2"}), cyc(2, {"x1"})}) {
    if (!is_borel_type(m).is_borel()) {
      EXPECT_THROW(lemma22_consistency(m), NotBorelType);
      continue;
    }
    EXPECT_TRUE(lemma22_consistency(m).agree());
  }
  EXPECT_EQ(lemma22_consistency(cyc(2, {"x1^2", "x1*x2"})).chain_reg, 1);
  EXPECT_EQ(lemma22_consistency(cyc(2, {"x1"})).oracle_reg, 0);
  EXPECT_EQ(oracle_invariants(betti_table(ideal(2, {"x1*x2"}))).reg, 1);
  EXPECT_THROW(lemma22_consistency(cyc(3, {"x1^3", "x1^2*x2", "x1*x2^2", "x2^3"}), {}, {Field::rationals, 4}),
               GuardExceeded);
}

class RegularityProperties : public ::testing::TestWithParam<std::uint64_t> {};

TEST_P(RegularityProperties, OracleAgreementAndBounds) {
  FuzzRng rng(GetParam());
  for (int trial = 0; trial < 40; ++trial) {
    auto i = random_borel_fixed_ideal(rng, 3, 4);
    auto m = Subquotient::cyclic(i);
    auto r = regularity_borel(m);
    auto oracle = oracle_invariants(betti_table(i));
    ASSERT_EQ(r.reg, oracle.reg) << to_string(i);
    ASSERT_EQ(r.depth, oracle.depth) << to_string(i);
    ASSERT_GE(r.reg, static_cast<int>(i.max_generator_degree()) - 1);
    for (const auto& s : r.steps) ASSERT_GE(r.reg, static_cast<int>(s.s));

    auto wide = widen(i);
    ASSERT_EQ(regularity_borel(Subquotient::cyclic(wide)).reg, r.reg);
    ASSERT_EQ(oracle_invariants(betti_table(wide)).reg, r.reg);
  }
}

INSTANTIATE_TEST_SUITE_P(Seeds, RegularityProperties, ::testing::Values(41, 42, 43));

}  // namespace
}  // namespace borel
