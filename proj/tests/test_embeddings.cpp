#include <gtest/gtest.h>

#include <random>

#include "oracles.hpp"
#include "ribbon/embeddings.hpp"
#include "ribbon/enumeration.hpp"
#include "ribbon/fixtures.hpp"
#include "ribbon/stanley.hpp"

using namespace ribbon;

namespace {

const BicoloredGraph kSingleEdge{1, 1, {{0, 0}}};

BicoloredGraph random_graph(std::mt19937_64& rng) {
  std::uniform_int_distribution<int> size(1, 3);
  BicoloredGraph g;
  g.blacks = size(rng);
  g.whites = size(rng);
  // Every vertex gets at least one edge.
  std::uniform_int_distribution<int> b(0, g.blacks - 1), w(0, g.whites - 1);
  for (int i = 0; i < std::max(g.blacks, g.whites); ++i) g.edges.emplace_back(i % g.blacks, i % g.whites);
  for (int extra = static_cast<int>(rng() % 3); extra > 0; --extra) g.edges.emplace_back(b(rng), w(rng));
  return g;
}

Partition random_partition(std::mt19937_64& rng) {
  std::uniform_int_distribution<int> n(1, 7);
  const auto all = partitions_of(n(rng));
  return all[rng() % all.size()];
}

}  // namespace

TEST(Multirectangular, Examples) {
  EXPECT_EQ(multirectangular(MultiRect::from_isotropic({2}, {3}, Rational(1))).shape(), (Partition{3, 3}));
  EXPECT_EQ(multirectangular(MultiRect::from_isotropic({1, 2}, {4, 1}, Rational(1))).shape(), (Partition{4, 1, 1}));
  const MultiRect mr{{Rational(1)}, {Rational(4)}, Rational(2)};
  EXPECT_EQ(multirectangular(mr).shape(), (Partition{2, 2}));
  EXPECT_EQ(mr.gamma(), Rational(-3, 2));
  EXPECT_EQ(mr.str(), "P=(1) Q=(4) A=2");
}

TEST(Multirectangular, RejectsUnrealizableData) {
  EXPECT_THROW(multirectangular(MultiRect{{Rational(1)}, {Rational(3)}, Rational(2)}), std::invalid_argument);
  EXPECT_THROW(multirectangular(MultiRect::from_isotropic({1, 1}, {1, 2}, Rational(1))), std::invalid_argument);
  EXPECT_THROW(multirectangular(MultiRect{{Rational(1)}, {Rational(1)}, Rational(0)}), std::invalid_argument);
  EXPECT_THROW(multirectangular(MultiRect{{Rational(1)}, {Rational(1), Rational(1)}, Rational(1)}), std::invalid_argument);
}

TEST(CountEmbeddings, Examples) {
  EXPECT_EQ(count_embeddings(kSingleEdge, YoungDiagram(Partition{2, 2})), Rational(4));
  EXPECT_EQ(count_embeddings(kSingleEdge, YoungDiagram(Partition{5, 3, 1})), Rational(9));
  const BicoloredGraph path{2, 1, {{0, 0}, {1, 0}}};
  EXPECT_EQ(count_embeddings(path, YoungDiagram(Partition{2, 2})),
            Rational(oracle::embeddings(path, Partition{2, 2})));
  EXPECT_EQ(count_embeddings(path, YoungDiagram(Partition{2, 2})), Rational(8));
  EXPECT_EQ(count_embeddings(kSingleEdge, YoungDiagram()), Rational(0));
}

TEST(CountEmbeddings, MatchesBruteForce) {
  std::mt19937_64 rng(51);
  for (int trial = 0; trial < 300; ++trial) {
    const auto g = random_graph(rng);
    const auto lambda = random_partition(rng);
    ASSERT_EQ(count_embeddings(g, YoungDiagram(lambda)), Rational(oracle::embeddings(g, lambda)))
        << "lambda=" << lambda.str();
  }
}

TEST(NormalizedEmbeddings, Examples) {
  const YoungDiagram d(Partition{2, 2});
  EXPECT_EQ(normalized_embeddings(kSingleEdge, d, Rational(1)), Rational(-4));
  EXPECT_EQ(normalized_embeddings(kSingleEdge, d, Rational(2)), Rational(-4));
  EXPECT_THROW(normalized_embeddings(kSingleEdge, d, Rational(0)), std::invalid_argument);
  const QSqrt2 root2 = QSqrt2::sqrt2();
  EXPECT_EQ(normalized_embeddings(kSingleEdge, d, root2), QSqrt2(-4));
}

// With (P, Q) fixed, the value is the same at every A that realizes a diagram.
TEST(NormalizedEmbeddings, NoResidualDependenceOnA) {
  std::mt19937_64 rng(52);
  std::uniform_int_distribution<int> v(1, 2);
  for (int trial = 0; trial < 100; ++trial) {
    const auto g = random_graph(rng);
    MultiRect mr;
    const int l = v(rng);
    int q = 8;
    for (int i = 0; i < l; ++i) {
      mr.p.emplace_back(2 * v(rng));
      q -= 2 * v(rng) - 2;
      mr.q.emplace_back(q);
    }
    std::vector<Rational> values;
    for (const Rational& a : {Rational(1), Rational(2), Rational(1, 2)}) {
      mr.a = a;
      values.push_back(normalized_embeddings(g, multirectangular(mr), a));
    }
    EXPECT_EQ(values[0], values[1]);
    EXPECT_EQ(values[0], values[2]);
  }
}

TEST(ChtopMapSum, FirstCases) {
  std::mt19937_64 rng(53);
  for (int trial = 0; trial < 10; ++trial) {
    const int p1 = 1 + static_cast<int>(rng() % 3), p2 = 1 + static_cast<int>(rng() % 3);
    const int q2 = 1 + static_cast<int>(rng() % 3), q1 = q2 + static_cast<int>(rng() % 3);
    const auto mr = MultiRect::from_isotropic({p1, p2}, {q1, q2}, Rational(1 + static_cast<int>(rng() % 3)));
    Rational sum_pq;
    for (size_t i = 0; i < 2; ++i) sum_pq += mr.p[i] * mr.q[i];
    EXPECT_EQ(chtop_map_sum(1, mr), sum_pq);
    EXPECT_EQ(ogs_top_map_sum_signed(1, mr), sum_pq);
  }
  const MultiRect mr{{Rational(1)}, {Rational(4)}, Rational(2)};
  EXPECT_EQ(chtop_map_sum(2, mr), Rational(6));
  EXPECT_EQ(ogs_top_map_sum_signed(2, mr), Rational(6));
  EXPECT_EQ(ogs_top_map_sum(2, mr), Rational(-6));
  EXPECT_THROW(chtop_map_sum(6, mr), GuardError);
  EXPECT_THROW(chtop_map_sum(0, mr), std::invalid_argument);
}

TEST(ChtopMapSum, MatchesPrintedTopDegreeForThreeEdges) {
  for (const Rational& a : {Rational(1), Rational(2), Rational(1, 2), Rational(3)}) {
    const auto mr = MultiRect::from_isotropic({1, 2}, {6, 2}, a);
    const Rational printed = printed_stanley_ch(3, mr.point(), true);
    EXPECT_EQ(chtop_map_sum(3, mr), printed) << mr.str();
    EXPECT_EQ(ogs_top_map_sum_signed(3, mr), printed) << mr.str();
  }
}

TEST(OneFaceTable, KleinClassCarriesTwoThirds) {
  MonCalculator calc;
  const auto table = one_face_mon_top_table(3, calc);
  const auto cls = graph_class(fixtures::klein());
  ASSERT_TRUE(table.entries.contains(cls));
  EXPECT_GE(table.entries.at(cls).weight, Rational(2, 3));
  EXPECT_EQ(3 + 1 - (cls.blacks + cls.whites), 2);
  // Summing mon_top of the class members by hand.
  Rational sum;
  for (const auto& m : conservative_one_face(3))
    if (graph_class(m) == cls) sum += mon_top(m);
  EXPECT_EQ(table.entries.at(cls).weight, sum);
}

TEST(OgsFull, SmallCases) {
  for (const Rational& a : {Rational(1), Rational(2), Rational(-1, 2)})
    for (const auto& lambda : {Partition{1}, Partition{3, 1}, Partition{2, 2, 2}})
      EXPECT_EQ(ogs_full(Partition{1}, YoungDiagram(lambda), a), Rational(lambda.size()));
  // pi = (2): the three maps on the square, summed by hand.
  const YoungDiagram d(Partition{2, 2});
  for (const Rational& a : {Rational(1), Rational(2)}) {
    Rational expected;
    for (const auto& m : conservative_one_face(2))
      expected += oracle::mon_by_histories(m).evaluate(gamma_of(a)) * normalized_embeddings(underlying_graph(m), d, a);
    EXPECT_EQ(ogs_full(Partition{2}, d, a), -expected);
  }
  EXPECT_THROW(ogs_full(Partition{4, 3}, d, Rational(1)), GuardError);
}

// A polynomial of degree |pi| + l(pi) in (P, Q): along a line q' = t its finite
// differences of that order plus one vanish.
TEST(OgsFull, FiniteDifferenceDegree) {
  for (const auto& pi : {Partition{1}, Partition{2}, Partition{1, 1}, Partition{3}}) {
    const int degree = pi.size() + pi.length();
    for (const Rational& a : {Rational(1), Rational(2)}) {
      std::vector<Rational> values;
      for (int t = 1; t <= degree + 2; ++t)
        values.push_back(ogs_full(pi, multirectangular(MultiRect::from_isotropic({2, 1}, {t + 1, 1}, a)), a));
      for (int order = 0; order <= degree; ++order)
        for (size_t i = 0; i + 1 < values.size() - static_cast<size_t>(order); ++i)
          values[i] = values[i + 1] - values[i];
      EXPECT_TRUE(values[0].is_zero()) << pi.str();
    }
  }
}
