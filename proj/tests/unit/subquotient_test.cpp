#include <gtest/gtest.h>

#include "borel/driver.hpp"
#include "borel/errors.hpp"
#include "borel/subquotient.hpp"
#include "support/oracles.hpp"

namespace borel {
namespace {

using testing::brute_hilbert;
using testing::ideal;
using testing::in_saturation;
using testing::mono;
using testing::monomials_up_to;

Subquotient cyc(std::size_t n, std::initializer_list<const char*> gens) {
  return Subquotient::cyclic(ideal(n, gens));
}

TEST(Subquotient, ConstructionRules) {
  EXPECT_THROW(Subquotient(ideal(2, {"x2"}), ideal(2, {"x1"})), InvalidArgument);
  EXPECT_THROW(Subquotient::cyclic(MonomialIdeal::zero(2)), InvalidArgument);
  EXPECT_THROW(Subquotient(ideal(2, {"x1"}), ideal(3, {"x1"})), DimensionMismatch);
  EXPECT_TRUE(Subquotient(ideal(2, {"x1"}), ideal(2, {"x1"})).is_zero());
  EXPECT_TRUE(Subquotient(MonomialIdeal::zero(2), MonomialIdeal::zero(2)).is_zero());
  EXPECT_TRUE(cyc(2, {"x1"}).is_cyclic());
}

TEST(Gamma, Examples) {
  EXPECT_EQ(gamma(cyc(2, {"x1^2", "x1*x2"}), mono(2, "x2")), ideal(2, {"x1"}));
  EXPECT_EQ(gamma(cyc(2, {"x1"}), mono(2, "x2")), ideal(2, {"x1"}));
  EXPECT_EQ(gamma(cyc(2, {"x1"}), mono(2, "x1")), MonomialIdeal::unit(2));
  EXPECT_THROW(gamma(cyc(2, {"x1"}), MonomialIdeal::zero(2)), InvalidArgument);
}

TEST(Gamma, AgreesWithBruteSaturation) {
  auto m = cyc(2, {"x1^2", "x1*x2"});
  auto l = gamma(m, mono(2, "x2"));
  for (const auto& u : monomials_up_to(2, 4)) {
    EXPECT_EQ(l.contains(u), in_saturation(m.denominator(), {mono(2, "x2")}, u, 6));
  }
}

TEST(QuotientBySubmodule, Examples) {
  auto m = cyc(2, {"x1^2", "x1*x2"});
  EXPECT_EQ(quotient_by_submodule(m, ideal(2, {"x1"})), cyc(2, {"x1"}));
  EXPECT_EQ(quotient_by_submodule(m, m.denominator()), m);
  EXPECT_TRUE(quotient_by_submodule(m, MonomialIdeal::unit(2)).is_zero());
  EXPECT_THROW(quotient_by_submodule(m, ideal(2, {"x2"})), InvalidArgument);
}

TEST(Truncate, Examples) {
  auto m = cyc(2, {"x2^2"});
  EXPECT_EQ(truncate(m, 1), Subquotient(ideal(2, {"x1", "x2"}), ideal(2, {"x2^2"})));
  EXPECT_EQ(truncate(m, 0), m);
  Subquotient q(ideal(2, {"x1"}), ideal(2, {"x1^2", "x1*x2"}));
  EXPECT_TRUE(truncate(q, 2).is_zero());
}

TEST(HilbertFunction, Examples) {
  Subquotient q(ideal(2, {"x1"}), ideal(2, {"x1^2", "x1*x2"}));
  EXPECT_EQ(hilbert_function(q, 1), 1);
  EXPECT_EQ(hilbert_function(q, 2), 0);
  EXPECT_EQ(brute_hilbert(q.numerator(), q.denominator(), 1), 1);
  Subquotient zero(ideal(2, {"x1"}), ideal(2, {"x1"}));
  for (Exponent d = 0; d < 5; ++d) EXPECT_EQ(hilbert_function(zero, d), 0);
}

TEST(ArtinianReduction, Examples) {
  Subquotient q(ideal(2, {"x1"}), ideal(2, {"x1^2", "x1*x2"}));
  EXPECT_EQ(artinian_reduction(q, 2), q);
  EXPECT_EQ(artinian_reduction(cyc(2, {"x1"}), 1), cyc(2, {"x1", "x2"}));
  Subquotient p(ideal(2, {"x1"}), ideal(2, {"x1^2"}));
  EXPECT_EQ(artinian_reduction(p, 1), q);
  EXPECT_THROW(artinian_reduction(q, 0), InvalidArgument);
  EXPECT_THROW(artinian_reduction(q, 3), InvalidArgument);
}

TEST(TopDegree, Examples) {
  Subquotient q(ideal(2, {"x1"}), ideal(2, {"x1^2", "x1*x2"}));
  EXPECT_EQ(top_degree_s(q, 1), 1);
  EXPECT_EQ(top_degree_s(cyc(2, {"x1", "x2"}), 0), 0);
  EXPECT_THROW(top_degree_s(cyc(2, {"x1"}), 1, 20), NotArtinian);
  EXPECT_THROW(top_degree_s(Subquotient(ideal(2, {"x1"}), ideal(2, {"x1"})), 1), ZeroModule);
  EXPECT_EQ(artinian_hilbert_table(cyc(2, {"x1^2", "x1*x2", "x2^3"})),
            (std::vector<std::int64_t>{1, 2, 1}));
}

TEST(TopDegree, MatchesBruteScan) {
  FuzzRng rng(5);
  for (int trial = 0; trial < 60; ++trial) {
    auto i = random_borel_fixed_ideal(rng, 3, 3);
    auto n = artinian_reduction(Subquotient::cyclic(i), 1);
    Exponent top = 0;
    for (Exponent d = 0; d <= 12; ++d) {
      if (brute_hilbert(n.numerator(), n.denominator(), d) != 0) top = d;
    }
    EXPECT_EQ(top_degree_s(n, i.max_generator_degree()), top) << to_string(i);
  }
}

class GammaProperties : public ::testing::TestWithParam<std::uint64_t> {};

TEST_P(GammaProperties, RadicalMonotoneExact) {
  FuzzRng rng(GetParam());
  for (int trial = 0; trial < 40; ++trial) {
    auto m = random_monomial_module(rng, 3, 3);
    if (m.is_zero()) continue;
    for (const auto& u : monomials_up_to(3, 2)) {
      if (u.is_unit()) continue;
      auto rad = radical_and_min_support(u).first;
      auto g = gamma(m, u);
      ASSERT_EQ(g, gamma(m, rad));
      // (u) ⊆ (x_v) gives Γ_(x_v) ⊆ Γ_(u).
      for (std::size_t v = 1; v <= 3; ++v) {
        if (u[v - 1] > 0) {
          ASSERT_TRUE(g.contains(gamma(m, Monomial::variable(3, v))));
        }
      }
      Subquotient sub(g, m.denominator());
      Subquotient top = quotient_by_submodule(m, g);
      for (Exponent d = 0; d <= 5; ++d) {
        ASSERT_EQ(hilbert_function(m, d), hilbert_function(sub, d) + hilbert_function(top, d));
        ASSERT_EQ(hilbert_function(m, d), brute_hilbert(m.numerator(), m.denominator(), d));
      }
    }
  }
}

INSTANTIATE_TEST_SUITE_P(Seeds, GammaProperties, ::testing::Values(1, 2, 3, 4));

}  // namespace
}  // namespace borel
