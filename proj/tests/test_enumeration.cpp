#include <gtest/gtest.h>

#include <set>

#include "oracles.hpp"
#include "ribbon/embeddings.hpp"
#include "ribbon/enumeration.hpp"
#include "ribbon/fixtures.hpp"

using namespace ribbon;

TEST(Involutions, CountsAreDoubleFactorials) {
  const size_t expected[] = {1, 1, 3, 15, 105, 945};
  for (int n = 1; n <= 5; ++n) {
    const auto all = involutions(label_range(2 * n));
    EXPECT_EQ(all.size(), expected[n]);
    std::set<std::vector<std::pair<int, int>>> distinct;
    for (const auto& p : all) distinct.insert(p.pairs());
    EXPECT_EQ(distinct.size(), all.size());
  }
  EXPECT_THROW(involutions({1, 2, 3}), std::invalid_argument);
}

TEST(ConservativeOneFace, CountsAndShape) {
  const size_t expected[] = {1, 1, 3, 15, 105, 945};
  for (int n = 1; n <= 5; ++n) {
    const auto maps = conservative_one_face(n);
    EXPECT_EQ(maps.size(), expected[n]);
    for (const auto& m : maps) {
      EXPECT_EQ(faces(m).face_type, Partition{n});
      EXPECT_EQ(m.root(), 1);
      EXPECT_EQ(m.beta()(1), 2);
      EXPECT_EQ(m.omega()(2 * n), 1);
    }
  }
  EXPECT_THROW(conservative_one_face(0), std::invalid_argument);
}

TEST(ConservativeOneFace, ContainsKlein) {
  int matches = 0;
  const auto target = canonical_form(fixtures::klein());
  for (const auto& m : conservative_one_face(3)) matches += canonical_form(m) == target;
  EXPECT_GE(matches, 1);
}

TEST(ConservativeMaps, MultiPolygonFaceType) {
  for (const auto& pi : {Partition{2, 1}, Partition{2, 2}, Partition{3, 1}, Partition{1, 1, 1}}) {
    const auto maps = conservative_maps(pi);
    EXPECT_EQ(maps.size(), involutions(label_range(2 * pi.size())).size());
    for (const auto& m : maps) EXPECT_EQ(faces(m).face_type, pi);
  }
}

TEST(LiberalOneFace, SmallCounts) {
  EXPECT_EQ(liberal_one_face(1).size(), 1u);
  // Single-square (B, W) pairs times 3 choices of E.
  int squares = 0;
  const auto p = involutions(label_range(4));
  for (const auto& b : p)
    for (const auto& w : p) squares += structure(NonOrientedMap(b, w, b)).faces == 1;
  EXPECT_EQ(liberal_one_face(2).size(), static_cast<size_t>(3 * squares));
  EXPECT_THROW(liberal_one_face(5), GuardError);
}

TEST(LiberalOneFace, LiberationRatio) {
  for (int n = 1; n <= 2; ++n) {
    const auto lib = group_by(liberal_one_face(n), GroupKey::Canonical);
    const auto cons = scaled(group_by(conservative_one_face(n), GroupKey::Canonical), factorial(2 * n - 1));
    EXPECT_EQ(lib, cons);
  }
}

TEST(AllMaps, GuardsAndCounts) {
  EXPECT_EQ(all_maps(1).size(), 1u);
  EXPECT_EQ(all_maps(2).size(), 27u);
  EXPECT_THROW(all_maps(4), GuardError);
}

TEST(PermutationPairs, Counts) {
  EXPECT_EQ(transitive_pairs(2).size(), 3u);
  long total = 0;
  for_each_permutation_pair(3, [&](const OrientedMap&) { ++total; });
  EXPECT_EQ(total, 36);
  // Transitive pairs in S_3^2 by brute force over the orbit structure.
  long transitive = 0;
  for_each_permutation_pair(3, [&](const OrientedMap& m) {
    std::set<int> orbit{1};
    for (int round = 0; round < 3; ++round)
      for (int x : std::vector<int>(orbit.begin(), orbit.end())) {
        orbit.insert(m.sigma1(x));
        orbit.insert(m.sigma2(x));
      }
    transitive += orbit.size() == 3;
  });
  EXPECT_EQ(transitive_pairs(3).size(), static_cast<size_t>(transitive));
  EXPECT_THROW(transitive_pairs(6), GuardError);
  EXPECT_EQ(all_permutations(4).size(), 24u);
}

TEST(GroupBy, TwoEdgeMainTheoremByHand) {
  // Transitive pairs in S_2^2 give one map per class: the double edge, and the two paths.
  const BicoloredGraph double_edge{1, 1, {{0, 0}, {0, 0}}};
  const BicoloredGraph black_centre{1, 2, {{0, 0}, {0, 1}}};
  const BicoloredGraph white_centre{2, 1, {{0, 0}, {1, 0}}};
  MonCalculator calc;
  const auto table = one_face_mon_top_table(2, calc);
  ASSERT_EQ(table.entries.size(), 3u);
  for (const auto& g : {double_edge, black_centre, white_centre}) {
    ASSERT_TRUE(table.entries.contains(graph_class(g)));
    EXPECT_EQ(table.entries.at(graph_class(g)).weight, Rational(1));
  }
  const auto oriented = oriented_connected_table(2);
  for (const auto& g : {double_edge, black_centre, white_centre})
    EXPECT_EQ(oriented.entries.at(graph_class(g)).weight, Rational(1));
}

TEST(GroupBy, RootedAndGraphKeys) {
  const auto maps = conservative_one_face(3);
  const auto rooted = group_by(maps, GroupKey::RootedCanonical);
  const auto unrooted = group_by(maps, GroupKey::Canonical);
  EXPECT_GE(rooted.size(), unrooted.size());
  Rational total;
  for (const auto& [k, v] : group_by(maps, GroupKey::GraphClass)) total += v;
  EXPECT_EQ(total, Rational(15));
}
