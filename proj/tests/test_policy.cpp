#include <gtest/gtest.h>

#include <algorithm>
#include <set>

#include "bagwl/generators.hpp"
#include "bagwl/iso.hpp"
#include "bagwl/policy.hpp"
#include "support.hpp"

using namespace bagwl;

namespace {

// Independent k-ball by repeated frontier expansion.
std::set<NodeId> ball(const Graph& g, NodeId root, std::uint32_t depth) {
  std::set<NodeId> seen{root};
  std::vector<NodeId> frontier{root};
  for (std::uint32_t d = 0; d < depth; ++d) {
    std::vector<NodeId> next;
    for (NodeId u : frontier) {
      for (NodeId w : g.neighbors(u)) {
        if (seen.insert(w).second) next.push_back(w);
      }
    }
    frontier = std::move(next);
  }
  return seen;
}

}  // namespace

TEST(PolicySpec, ParseAndPrintRoundTrip) {
  for (const char* text : {"nd", "ed", "ego:1", "ego:3", "ego+:2", "se", "nd^", "ed^", "ego:2^",
                           "ego+:1^", "se^"}) {
    EXPECT_EQ(to_string(parse_policy(text)), text);
  }
  EXPECT_EQ(parse_policy("ego+:2^"), (PolicySpec{PolicyKind::kEgoPlus, 2, true}));
  for (const char* bad : {"", "ego", "ego:0", "ego:-1", "ego:x", "nd:2", "xx", "ed^^"}) {
    EXPECT_THROW(parse_policy(bad), UsageError) << bad;
  }
}

TEST(Policy, BagSizes) {
  const Graph g = csl(12, 3);
  EXPECT_EQ(apply_policy(g, parse_policy("nd")).size(), 12u);
  EXPECT_EQ(apply_policy(g, parse_policy("ed")).size(), 24u);
  EXPECT_EQ(apply_policy(g, parse_policy("ego:2")).size(), 12u);
  EXPECT_EQ(apply_policy(g, parse_policy("ego+:1")).size(), 12u);
  EXPECT_EQ(apply_policy(g, parse_policy("se")).size(), 24u);
  EXPECT_EQ(apply_policy(g, parse_policy("ed^")).size(), 25u);
  EXPECT_EQ(apply_policy(rooks4(), parse_policy("ed")).size(), 48u);
  EXPECT_EQ(apply_policy(Graph(3, {}), parse_policy("ed")).size(), 0u);
}

TEST(Policy, NodeDeletionKeepsAnIsolatedNode) {
  const Graph g = cycle(5);
  const Bag b = apply_policy(g, parse_policy("nd"));
  EXPECT_EQ(b.num_nodes, 5u);
  for (std::size_t s = 0; s < b.size(); ++s) {
    const Graph h = b.subgraph_graph(s);
    EXPECT_EQ(h.num_nodes(), 5u);
    EXPECT_EQ(h.num_edges(), 3u);
    EXPECT_EQ(degree(h, static_cast<NodeId>(s)), 0u);
  }
}

TEST(Policy, EdgeDeletionAndSingleEdge) {
  const Graph g = path(4);
  const Bag ed = apply_policy(g, parse_policy("ed"));
  const Bag se = apply_policy(g, parse_policy("se"));
  for (std::size_t s = 0; s < g.num_edges(); ++s) {
    EXPECT_EQ(ed.subgraphs[s].size(), 2u);
    ASSERT_EQ(se.subgraphs[s].size(), 1u);
    EXPECT_FALSE(std::binary_search(ed.subgraphs[s].begin(), ed.subgraphs[s].end(),
                                    se.subgraphs[s][0]));
  }
}

TEST(Policy, EgoNetsMatchIndependentBallsProperty) {
  Rng rng(21);
  for (int trial = 0; trial < 60; ++trial) {
    const Graph g = support::random_graph(rng, 1, 10);
    const std::uint32_t depth = 1 + static_cast<std::uint32_t>(rng.below(3));
    const Bag ego = apply_policy(g, {PolicyKind::kEgo, depth, false});
    const Bag plus = apply_policy(g, {PolicyKind::kEgoPlus, depth, false});
    ASSERT_EQ(ego.size(), g.num_nodes());
    EXPECT_TRUE(ego.roots.empty());
    for (NodeId v = 0; v < g.num_nodes(); ++v) {
      const auto members = ball(g, v, depth);
      std::vector<Edge> expected;
      for (const Edge& e : g.edges()) {
        if (members.count(e.u) && members.count(e.v)) expected.push_back(e);
      }
      EXPECT_EQ(ego.subgraphs[v], expected);
      EXPECT_EQ(plus.subgraphs[v], expected);
      EXPECT_EQ(plus.root(v), std::optional<NodeId>(v));
    }
  }
}

TEST(Policy, AugmentedAppendsTheUnmarkedOriginal) {
  const Graph g = cycle(6);
  const Bag b = apply_policy(g, parse_policy("ego+:1^"));
  ASSERT_EQ(b.size(), 7u);
  EXPECT_EQ(b.subgraphs.back(), std::vector<Edge>(g.edges().begin(), g.edges().end()));
  EXPECT_FALSE(b.root(6).has_value());
  const Graph root_marked = b.subgraph_graph(2);
  EXPECT_EQ(root_marked.label(2), 1u);
  EXPECT_EQ(root_marked.label(3), 0u);
}

TEST(Policy, UnionAdjacencyRecoversEdgeCoveringBagsProperty) {
  Rng rng(4);
  for (int trial = 0; trial < 80; ++trial) {
    const Graph g = support::random_graph(rng, 2, 9);
    for (const char* p : {"ed", "se", "ego:1", "ego+:2", "nd^", "ed^"}) {
      const Bag b = apply_policy(g, parse_policy(p));
      if (b.size() == 0) continue;
      if (is_edge_covering(b, g)) { EXPECT_EQ(union_adjacency(b), g) << p; }
    }
    // Augmented policies and EGO always cover.
    EXPECT_TRUE(is_edge_covering(apply_policy(g, parse_policy("nd^")), g));
    EXPECT_TRUE(is_edge_covering(apply_policy(g, parse_policy("ego:1")), g));
  }
  EXPECT_TRUE(is_edge_covering(apply_policy(complete(5), parse_policy("ego:1")), complete(5)));
  // ND on a single edge loses it: both subgraphs are edgeless.
  const Graph k2(2, {{0, 1}});
  EXPECT_FALSE(is_edge_covering(apply_policy(k2, parse_policy("nd")), k2));
  EXPECT_THROW(union_adjacency(apply_policy(Graph(2, {}), parse_policy("ed"))), UsageError);
}

TEST(Policy, PermuteBagCommutesWithPolicyProperty) {
  Rng rng(17);
  for (int trial = 0; trial < 60; ++trial) {
    const Graph g = support::random_graph(rng, 1, 9, 2);
    const auto sigma = support::random_perm(rng, g.num_nodes());
    for (const char* p : {"nd", "ed", "ego:2", "ego+:1", "se", "ego+:1^"}) {
      const PolicySpec spec = parse_policy(p);
      const Bag direct = apply_policy(apply_permutation(g, sigma), spec);
      const Bag moved = permute_bag(apply_policy(g, spec), sigma);
      EXPECT_TRUE(bags_isomorphic(direct, moved)) << p;
      // Stronger: the subgraph multisets coincide exactly.
      auto as_set = [](const Bag& b) {
        std::multiset<std::pair<std::vector<Edge>, std::optional<NodeId>>> out;
        for (std::size_t s = 0; s < b.size(); ++s) out.emplace(b.subgraphs[s], b.root(s));
        return out;
      };
      EXPECT_EQ(as_set(direct), as_set(moved)) << p;
    }
  }
}

TEST(Policy, SelectSubgraphsKeepsOrder) {
  const Bag b = apply_policy(cycle(6), parse_policy("ego+:1"));
  const std::vector<std::size_t> idx{1, 4};
  const Bag s = select_subgraphs(b, idx);
  ASSERT_EQ(s.size(), 2u);
  EXPECT_EQ(s.subgraphs[1], b.subgraphs[4]);
  EXPECT_EQ(s.root(1), b.root(4));
  EXPECT_EQ(s.source_edges, b.source_edges);
  const std::vector<std::size_t> bad{7};
  EXPECT_THROW(select_subgraphs(b, bad), UsageError);
}
