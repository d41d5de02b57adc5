#include <gtest/gtest.h>

#include "bagwl/generators.hpp"
#include "bagwl/iso.hpp"
#include "bagwl/wl.hpp"
#include "support.hpp"

using namespace bagwl;

TEST(Wl, RegularPairIsInconclusive) {
  const Verdict v = wl_test(cycle(6), generate("2c3"));
  EXPECT_FALSE(v.distinguished());
  EXPECT_EQ(v.round, 1u);
  EXPECT_TRUE(v.converged);
  EXPECT_EQ(to_string(v), "POSSIBLY_ISOMORPHIC@1");
}

TEST(Wl, DegreeDifferenceShowsAtRoundOne) {
  const Verdict v = wl_test(path(4), star(3));
  EXPECT_TRUE(v.distinguished());
  EXPECT_EQ(v.round, 1u);
  EXPECT_EQ(to_string(v), "DISTINGUISHED@1");
  EXPECT_EQ(wl_test(Graph(3, {}), Graph(4, {})).round, 0u);
}

TEST(Wl, LabelsEnterTheInitialColor) {
  const Graph a(2, {{0, 1}}, std::vector<Label>{0, 1});
  const Graph b(2, {{0, 1}}, std::vector<Label>{1, 1});
  const Verdict v = wl_test(a, b);
  EXPECT_TRUE(v.distinguished());
  EXPECT_EQ(v.round, 0u);
}

TEST(Wl, PathHistoryConvergesAtCenter) {
  // path(5): ends, next-to-ends, center separate by round 2, stable at 3.
  const auto h = wl_refine(path(5));
  EXPECT_TRUE(h.converged);
  EXPECT_EQ(h.converged_at, 3u);
  EXPECT_EQ(count_distinct(h.stable()), 3u);
  EXPECT_EQ(h.rounds.size(), h.fingerprint_per_round.size());
}

TEST(Wl, BudgetExhaustionIsReported) {
  const Verdict v = wl_test(path(8), path(8), 1);
  EXPECT_FALSE(v.distinguished());
  EXPECT_FALSE(v.converged);
  const auto h = wl_refine(path(8), 1);
  EXPECT_FALSE(h.converged);
}

TEST(Wl, MatchesNaiveOracleProperty) {
  Rng rng(100);
  for (int trial = 0; trial < 150; ++trial) {
    const Graph g = support::random_graph(rng, 1, 12, trial % 3 == 0 ? 2 : 0);
    const auto h = wl_refine(g);
    support::NaiveIds ids;
    const auto naive = support::naive_wl(g, static_cast<int>(h.rounds.size()), ids);
    for (std::size_t t = 0; t < h.rounds.size(); ++t) {
      EXPECT_TRUE(support::same_grouping(naive[t], h.rounds[t])) << "trial " << trial << " t " << t;
    }
  }
}

TEST(Wl, VerdictMatchesNaiveOracleProperty) {
  Rng rng(101);
  for (int trial = 0; trial < 300; ++trial) {
    const Graph g = support::random_graph(rng, 1, 7);
    const Graph h = support::random_graph(rng, 1, 7);
    const Verdict v = wl_test(g, h);
    const auto naive = support::naive_wl_first_difference(g, h);
    ASSERT_EQ(v.distinguished(), naive.has_value());
    if (naive) { EXPECT_EQ(v.round, static_cast<std::uint32_t>(*naive)); }
  }
}

TEST(Wl, RefinementIsMonotoneProperty) {
  Rng rng(7);
  for (int trial = 0; trial < 100; ++trial) {
    const Graph g = support::random_graph(rng, 1, 14, 2);
    const auto h = wl_refine(g);
    for (std::size_t t = 1; t < h.rounds.size(); ++t) {
      EXPECT_TRUE(partition_refines(NodePartition::from_colors(h.rounds[t]),
                                    NodePartition::from_colors(h.rounds[t - 1])));
    }
  }
}

TEST(Wl, PermutationInvarianceProperty) {
  Rng rng(9);
  for (int trial = 0; trial < 100; ++trial) {
    const Graph g = support::random_graph(rng, 1, 12, 2);
    const auto sigma = support::random_perm(rng, g.num_nodes());
    const Graph h = apply_permutation(g, sigma);
    ColorInterner in;
    const auto a = wl_refine(g, std::nullopt, in);
    const auto b = wl_refine(h, std::nullopt, in);
    ASSERT_EQ(a.rounds.size(), b.rounds.size());
    // Equivariance: node u of g and sigma[u] of h get the same color.
    for (std::size_t t = 0; t < a.rounds.size(); ++t) {
      for (NodeId u = 0; u < g.num_nodes(); ++u) EXPECT_EQ(a.rounds[t][u], b.rounds[t][sigma[u]]);
    }
    EXPECT_FALSE(wl_test(g, h).distinguished());
  }
}

TEST(Fwl2, SeparatesTrianglesFromHexagon) {
  const Verdict v = fwl2_test(cycle(6), generate("2c3"));
  EXPECT_TRUE(v.distinguished());
  EXPECT_FALSE(fwl2_test(rooks4(), shrikhande()).distinguished());
}

TEST(Fwl2, DiagonalAndAdjacencyTypesDiffer) {
  const auto r = fwl2_refine(path(3));
  const auto& c = r.coloring;
  EXPECT_NE(c.at(0, 0), c.at(0, 1));
  EXPECT_NE(c.at(0, 1), c.at(0, 2));
  EXPECT_EQ(c.at(0, 1), c.at(2, 1));
  EXPECT_EQ(r.fingerprint.size(), 9u);
}

TEST(Fwl2, AtLeastAsStrongAsWlOnSmallGraphsProperty) {
  Rng rng(55);
  for (int trial = 0; trial < 200; ++trial) {
    const Graph g = support::random_graph(rng, 1, 7);
    const Graph h = support::random_graph(rng, 1, 7);
    if (wl_test(g, h).distinguished()) { EXPECT_TRUE(fwl2_test(g, h).distinguished()); }
  }
}

TEST(Fwl2, SoundOnPermutedCopiesProperty) {
  Rng rng(56);
  for (int trial = 0; trial < 60; ++trial) {
    const Graph g = support::random_graph(rng, 1, 9, 2);
    const Graph h = apply_permutation(g, support::random_perm(rng, g.num_nodes()));
    EXPECT_FALSE(fwl2_test(g, h).distinguished());
  }
}

TEST(Fwl2, SeparatesAllNonIsomorphicGraphsOnFiveNodes) {
  const auto classes = enumerate_graphs(5);
  for (std::size_t i = 0; i < classes.size(); ++i) {
    for (std::size_t j = i + 1; j < classes.size(); ++j) {
      EXPECT_TRUE(fwl2_test(classes[i], classes[j]).distinguished()) << i << " " << j;
    }
  }
}
