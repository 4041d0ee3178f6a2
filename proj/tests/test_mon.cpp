#include <gtest/gtest.h>

#include <random>

#include "oracles.hpp"
#include "ribbon/enumeration.hpp"
#include "ribbon/fixtures.hpp"
#include "ribbon/mon.hpp"

using namespace ribbon;

namespace {

const GammaPolynomial kGamma = GammaPolynomial::gamma();

std::vector<NonOrientedMap> sample_maps(int n, int count, unsigned seed) {
  std::mt19937_64 rng(seed);
  const auto pairings = involutions(label_range(2 * n));
  std::uniform_int_distribution<size_t> pick(0, pairings.size() - 1);
  std::vector<NonOrientedMap> out;
  for (int i = 0; i < count; ++i) out.emplace_back(pairings[pick(rng)], pairings[pick(rng)], pairings[pick(rng)]);
  return out;
}

}  // namespace

TEST(EdgeWeight, Fixtures) {
  EXPECT_EQ(edge_weight(fixtures::klein(), Edge(3, 6)), GammaPolynomial(1));
  EXPECT_EQ(edge_weight(fixtures::klein(), Edge(1, 5)), kGamma);
  EXPECT_EQ(edge_weight(fixtures::projective_plane(), Edge(6, 13)), GammaPolynomial(Rational(1, 2)));
}

TEST(HistoryWeight, KleinHistories) {
  const auto k = fixtures::klein();
  EXPECT_EQ(history_weight(k, {Edge(3, 6), Edge(1, 5), Edge(2, 4)}), GammaPolynomial(Rational(1, 2)));
  EXPECT_EQ(history_weight(k, {Edge(1, 5), Edge(2, 4), Edge(3, 6)}), kGamma * kGamma);
  EXPECT_EQ(history_weight(fixtures::single_edge(), {Edge(1, 2)}), GammaPolynomial(1));
  EXPECT_THROW(history_weight(k, {Edge(1, 5), Edge(2, 4)}), std::invalid_argument);
  EXPECT_THROW(history_weight(k, {Edge(1, 5), Edge(1, 5), Edge(3, 6)}), std::invalid_argument);
  EXPECT_EQ(to_string(History{Edge(1, 5), Edge(2, 4)}), "({1,5},{2,4})");
}

TEST(Mon, Klein) {
  const auto m = mon(fixtures::klein());
  EXPECT_EQ(m, GammaPolynomial(Rational(1, 6)) + (kGamma * kGamma).scaled(Rational(2, 3)));
  EXPECT_EQ(mon_top(fixtures::klein()), Rational(2, 3));
  EXPECT_EQ(mon(fixtures::single_edge()), GammaPolynomial(1));
  EXPECT_EQ(mon(NonOrientedMap()), GammaPolynomial(1));
}

TEST(Mon, TwoDisjointEdges) {
  // Two single-edge components: every history removes two straight edges.
  const NonOrientedMap m(Pairing{{1, 2}, {3, 4}}, Pairing{{1, 2}, {3, 4}}, Pairing{{1, 2}, {3, 4}});
  EXPECT_EQ(mon(m), GammaPolynomial(1));
  EXPECT_EQ(oracle::mon_by_histories(m), GammaPolynomial(1));
}

TEST(Mon, MatchesHistoryAverageExhaustively) {
  MonCalculator calc;
  for (int n = 1; n <= 3; ++n)
    for_each_map(n, [&](const NonOrientedMap& m) { ASSERT_EQ(calc.mon(m), oracle::mon_by_histories(m)); });
}

TEST(Mon, MatchesHistoryAverageOnFourEdges) {
  MonCalculator calc;
  for (const auto& m : sample_maps(4, 150, 31)) EXPECT_EQ(calc.mon(m), oracle::mon_by_histories(m));
}

TEST(MonTop, ProbabilityMatchesHistoryCount) {
  MonCalculator calc;
  for (int n = 1; n <= 3; ++n)
    for_each_map(n, [&](const NonOrientedMap& m) {
      ASSERT_EQ(calc.top_degree_probability(m), oracle::top_degree_fraction(m));
    });
  for (const auto& m : sample_maps(4, 150, 32)) {
    const Rational p = calc.top_degree_probability(m);
    EXPECT_EQ(p, oracle::top_degree_fraction(m));
    EXPECT_GE(p, Rational(0));
    EXPECT_LE(p, Rational(1));
  }
}

TEST(MonTop, BothRoutesAgreeOnOneFaceMaps) {
  MonCalculator calc;
  for (int n = 1; n <= 5; ++n)
    for_each_conservative_map(Partition{n}, [&](const NonOrientedMap& m) {
      const auto t = mon_top_both(m, calc);
      ASSERT_EQ(t.probability, t.leading_coefficient);
    });
}

TEST(TopDegree, KleinPairs) {
  const auto k = fixtures::klein();
  EXPECT_TRUE(is_top_degree_map(k));
  EXPECT_FALSE(is_top_degree_map(remove_edge(k, Edge(3, 6))));
  EXPECT_FALSE(is_top_degree_pair(k, {Edge(3, 6), Edge(1, 5), Edge(2, 4)}));
  EXPECT_EQ(first_non_top_degree_prefix(k, {Edge(3, 6), Edge(1, 5), Edge(2, 4)}), 1);
  EXPECT_TRUE(is_top_degree_pair(k, {Edge(1, 5), Edge(2, 4), Edge(3, 6)}));
  EXPECT_TRUE(is_top_degree_pair(k, {Edge(2, 4), Edge(3, 6), Edge(1, 5)}));
  EXPECT_EQ(first_non_top_degree_prefix(k, {Edge(1, 5), Edge(2, 4), Edge(3, 6)}), -1);
  EXPECT_EQ(mon_degree_bound(k), 2);
}

TEST(Lemma, KleinReports) {
  const auto k = fixtures::klein();
  const auto good = lemma_equivalence_check(k, {Edge(1, 5), Edge(2, 4), Edge(3, 6)});
  EXPECT_TRUE(good.top_degree_pair);
  EXPECT_TRUE(good.twisted_bridge_or_leaf);
  EXPECT_TRUE(good.weight_reaches_bound);
  EXPECT_EQ(good.degree, 2);
  EXPECT_EQ(good.bound, 2);
  EXPECT_EQ(good.leading_coefficient, Rational(1));
  EXPECT_TRUE(good.consistent());
  const auto bad = lemma_equivalence_check(k, {Edge(3, 6), Edge(1, 5), Edge(2, 4)});
  EXPECT_FALSE(bad.top_degree_pair);
  EXPECT_FALSE(bad.twisted_bridge_or_leaf);
  EXPECT_FALSE(bad.weight_reaches_bound);
  EXPECT_TRUE(bad.consistent());
}

TEST(Mon, DegreeBoundsExhaustive) {
  MonCalculator calc;
  for (int n = 1; n <= 3; ++n)
    for_each_map(n, [&](const NonOrientedMap& m) {
      const auto p = calc.mon(m);
      const auto s = structure(m);
      ASSERT_LE(p.degree(), n + s.faces - s.vertices());
      ASSERT_EQ(p.coefficient(n + s.faces - s.vertices()), calc.top_degree_probability(m));
      History h = m.edges();
      do ASSERT_LE(history_weight(m, h).degree(), s.twice_genus);
      while (std::next_permutation(h.begin(), h.end()));
    });
}
