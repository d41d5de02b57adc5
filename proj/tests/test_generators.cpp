#include <gtest/gtest.h>

#include "bagwl/generators.hpp"
#include "bagwl/iso.hpp"
#include "bagwl/rng.hpp"

using namespace bagwl;

TEST(Csl, FourRegularWithTwoNEdges) {
  for (std::size_t n : {7u, 12u, 13u, 16u, 41u}) {
    for (std::size_t k = 2; k <= n - 2; ++k) {
      if (2 * k == n) continue;
      const Graph g = csl(n, k);
      EXPECT_EQ(g.num_edges(), 2 * n) << n << "," << k;
      for (std::size_t d : g.degree_sequence()) EXPECT_EQ(d, 4u);
      EXPECT_EQ(g, csl(n, n - k));
    }
  }
  EXPECT_EQ(csl(41, 9).num_edges(), 82u);
}

TEST(Csl, HalfSkipCollapsesToThreeRegular) {
  const Graph g = csl(12, 6);
  EXPECT_EQ(g.num_edges(), 18u);
  for (std::size_t d : g.degree_sequence()) EXPECT_EQ(d, 3u);
}

TEST(Csl, RejectsBadParameters) {
  EXPECT_THROW(csl(6, 2), UsageError);
  EXPECT_THROW(csl(12, 1), UsageError);
  EXPECT_THROW(csl(12, 11), UsageError);
}

TEST(StronglyRegular, KnownParameters) {
  EXPECT_EQ(sr_parameters(cycle(5)), (SrParams{5, 2, 0, 1}));
  EXPECT_EQ(sr_parameters(rooks4()), (SrParams{16, 6, 2, 2}));
  EXPECT_EQ(sr_parameters(shrikhande()), (SrParams{16, 6, 2, 2}));
  EXPECT_EQ(sr_parameters(complete(5)), (SrParams{5, 4, 3, 0}));
  EXPECT_FALSE(sr_parameters(path(4)).has_value());
  EXPECT_FALSE(sr_parameters(cycle(6)).has_value());
  EXPECT_THROW(sr_parameters(Graph(1, {})), UsageError);
}

TEST(StronglyRegular, ParameterIdentityHolds) {
  // k(k - lambda - 1) = (n - k - 1) mu
  for (const Graph& g : {cycle(5), rooks4(), shrikhande()}) {
    const auto p = *sr_parameters(g);
    EXPECT_EQ(p.k * (p.k - p.lambda - 1), (p.n - p.k - 1) * p.mu);
  }
}

TEST(StronglyRegular, RookAndShrikhandeAreNotIsomorphic) {
  EXPECT_FALSE(are_isomorphic(rooks4(), shrikhande()).isomorphic);
  // Rook's graph: a node's neighborhood is two triangles; Shrikhande: a 6-cycle.
  const Graph r = rooks4();
  const Graph s = shrikhande();
  auto neighborhood_triangles = [](const Graph& g, NodeId v) {
    const auto nb = g.neighbors(v);
    std::size_t count = 0;
    for (std::size_t i = 0; i < nb.size(); ++i) {
      for (std::size_t j = i + 1; j < nb.size(); ++j) {
        for (std::size_t k = j + 1; k < nb.size(); ++k) {
          count += g.has_edge(nb[i], nb[j]) && g.has_edge(nb[j], nb[k]) && g.has_edge(nb[i], nb[k]);
        }
      }
    }
    return count;
  };
  for (NodeId v = 0; v < 16; ++v) {
    EXPECT_EQ(neighborhood_triangles(r, v), 2u);
    EXPECT_EQ(neighborhood_triangles(s, v), 0u);
  }
}

TEST(GridNumbering, RowMajorFromTheTop) {
  const Graph r = rooks4();
  // Node 0 is (0,3); its row is 1,2,3 and its column 4,8,12.
  const std::vector<NodeId> n0(r.neighbors(0).begin(), r.neighbors(0).end());
  EXPECT_EQ(n0, (std::vector<NodeId>{1, 2, 3, 4, 8, 12}));
  // Shrikhande: (0,3) ~ (1,2) = node 5 and (3,0) = node 15 on the anti-diagonal.
  const Graph s = shrikhande();
  const std::vector<NodeId> s0(s.neighbors(0).begin(), s.neighbors(0).end());
  EXPECT_EQ(s0, (std::vector<NodeId>{1, 3, 4, 5, 12, 15}));
}

TEST(Families, SmallGraphs) {
  EXPECT_EQ(cycle(6).num_edges(), 6u);
  EXPECT_EQ(generate("2c3").num_edges(), 6u);
  EXPECT_EQ(generate("2c3"), generate("cycles:3:3"));
  EXPECT_EQ(path(4).num_edges(), 3u);
  EXPECT_EQ(star(3).num_nodes(), 4u);
  EXPECT_EQ(degree(star(3), 0), 3u);
  EXPECT_EQ(complete(5).num_edges(), 10u);
  EXPECT_EQ(generate("csl:12:3"), csl(12, 3));
  EXPECT_EQ(generate("rook"), rooks4());
  EXPECT_THROW(cycle(2), UsageError);
  EXPECT_THROW(generate("nosuch:3"), UsageError);
  EXPECT_THROW(generate("csl:12"), UsageError);
  EXPECT_THROW(generate("cycle:abc"), UsageError);
}

TEST(Random, DeterministicInSeed) {
  EXPECT_EQ(random_graph(12, 0.4, 99), random_graph(12, 0.4, 99));
  EXPECT_EQ(random_graph(12, 0.0, 1).num_edges(), 0u);
  EXPECT_EQ(random_graph(6, 1.0, 1).num_edges(), 15u);
  const auto p = random_permutation(20, 4);
  EXPECT_EQ(p, random_permutation(20, 4));
  EXPECT_TRUE(is_permutation_of_n(p, 20));
}
