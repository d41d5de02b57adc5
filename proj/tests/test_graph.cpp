#include <gtest/gtest.h>

#include <sstream>

#include "bagwl/graph.hpp"
#include "support.hpp"

using namespace bagwl;

TEST(Graph, BuildsSortedAdjacencyAndDeduplicatesEdges) {
  const Graph g(4, {{2, 0}, {0, 1}, {1, 0}, {3, 2}});
  EXPECT_EQ(g.num_nodes(), 4u);
  EXPECT_EQ(g.num_edges(), 3u);
  const std::vector<NodeId> n0(g.neighbors(0).begin(), g.neighbors(0).end());
  EXPECT_EQ(n0, (std::vector<NodeId>{1, 2}));
  EXPECT_TRUE(g.has_edge(2, 3));
  EXPECT_TRUE(g.has_edge(3, 2));
  EXPECT_FALSE(g.has_edge(0, 3));
  EXPECT_EQ(g.degree_sequence(), (std::vector<std::size_t>{2, 1, 2, 1}));
  for (const Edge& e : g.edges()) EXPECT_LT(e.u, e.v);
}

TEST(Graph, RejectsSelfLoopsAndOutOfRangeEndpoints) {
  EXPECT_THROW(Graph(3, {{1, 1}}), UsageError);
  EXPECT_THROW(Graph(3, {{0, 3}}), UsageError);
  EXPECT_THROW(Graph(2, {}, std::vector<Label>{1}), UsageError);
}

TEST(Graph, EmptyGraphs) {
  const Graph zero(0, {});
  EXPECT_EQ(zero.num_nodes(), 0u);
  const Graph isolated(3, {});
  EXPECT_EQ(isolated.num_edges(), 0u);
  EXPECT_EQ(degree(isolated, 2), 0u);
}

TEST(Graph, LabelsDefaultToZero) {
  const Graph plain(2, {{0, 1}});
  EXPECT_FALSE(plain.has_labels());
  EXPECT_EQ(plain.label(1), 0u);
  const Graph labeled(2, {{0, 1}}, std::vector<Label>{4, 7});
  EXPECT_EQ(labeled.label(1), 7u);
  EXPECT_FALSE(plain == labeled);
}

TEST(Graph, PermutationMapsNodeUToSigmaU) {
  const Graph p = Graph(3, {{0, 1}, {1, 2}}, std::vector<Label>{5, 6, 7});
  const std::vector<NodeId> sigma{2, 0, 1};
  const Graph q = apply_permutation(p, sigma);
  EXPECT_TRUE(q.has_edge(2, 0));
  EXPECT_TRUE(q.has_edge(0, 1));
  EXPECT_FALSE(q.has_edge(1, 2));
  EXPECT_EQ(q.label(2), 5u);
  EXPECT_EQ(apply_permutation(q, invert_permutation(sigma)), p);
  EXPECT_THROW(apply_permutation(p, std::vector<NodeId>{0, 0, 1}), UsageError);
  EXPECT_FALSE(is_permutation_of_n(std::vector<NodeId>{0, 2}, 2));
}

TEST(Graph, PermutationComposesProperty) {
  Rng rng(11);
  for (int trial = 0; trial < 100; ++trial) {
    const Graph g = support::random_graph(rng, 1, 9, 3);
    const auto s = support::random_perm(rng, g.num_nodes());
    const auto t = support::random_perm(rng, g.num_nodes());
    std::vector<NodeId> ts(s.size());
    for (NodeId u = 0; u < s.size(); ++u) ts[u] = t[s[u]];
    EXPECT_EQ(apply_permutation(apply_permutation(g, s), t), apply_permutation(g, ts));
    EXPECT_EQ(apply_permutation(g, s).num_edges(), g.num_edges());
  }
}

TEST(EdgeList, ParsesPlainAndLabeled) {
  const Graph g = parse_edge_list("3 2\n0 1\n1 2\n");
  EXPECT_EQ(g, Graph(3, {{0, 1}, {1, 2}}));
  const Graph l = parse_edge_list("2 1\n0 1\nlabels:\n3\n9\n");
  EXPECT_EQ(l.label(0), 3u);
  EXPECT_EQ(l.label(1), 9u);
}

TEST(EdgeList, RejectsMalformedInput) {
  EXPECT_THROW(parse_edge_list(""), ParseError);
  EXPECT_THROW(parse_edge_list("3 2\n0 1\n"), ParseError);           // too few edges
  EXPECT_THROW(parse_edge_list("3 2\n0 1\n1 0\n"), ParseError);      // duplicate
  EXPECT_THROW(parse_edge_list("3 1\n0 3\n"), ParseError);           // out of range
  EXPECT_THROW(parse_edge_list("3 1\n1 1\n"), ParseError);           // self-loop
  EXPECT_THROW(parse_edge_list("3 1\n0 x\n"), ParseError);           // bad token
  EXPECT_THROW(parse_edge_list("2 1\n0 1\nlabels:\n1\n"), ParseError);
  EXPECT_THROW(read_edge_list_file("/nonexistent/graph.txt"), ParseError);
}

TEST(EdgeList, FormatParseRoundTripProperty) {
  Rng rng(5);
  for (int trial = 0; trial < 100; ++trial) {
    const Graph g = support::random_graph(rng, 0, 10, trial % 2 ? 4 : 0);
    EXPECT_EQ(parse_edge_list(format_edge_list(g)), g);
  }
}
