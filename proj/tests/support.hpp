#pragma once

#include <algorithm>
#include <map>
#include <optional>
#include <vector>

#include "bagwl/graph.hpp"
#include "bagwl/policy.hpp"
#include "bagwl/rng.hpp"

namespace support {

using bagwl::Bag;
using bagwl::Edge;
using bagwl::Graph;
using bagwl::NodeId;
using bagwl::Rng;

inline Graph random_graph(Rng& rng, std::size_t min_n, std::size_t max_n,
                          std::uint32_t num_labels = 0) {
  const std::size_t n = min_n + rng.below(max_n - min_n + 1);
  const double p = 0.1 + 0.8 * rng.unit();
  std::vector<Edge> edges;
  for (NodeId u = 0; u < n; ++u) {
    for (NodeId v = u + 1; v < n; ++v) {
      if (rng.unit() < p) edges.push_back({u, v});
    }
  }
  std::optional<std::vector<bagwl::Label>> labels;
  if (num_labels > 0) {
    labels.emplace(n);
    for (auto& l : *labels) l = static_cast<bagwl::Label>(rng.below(num_labels));
  }
  return Graph(n, std::move(edges), std::move(labels));
}

inline std::vector<NodeId> random_perm(Rng& rng, std::size_t n) {
  std::vector<NodeId> p(n);
  for (NodeId i = 0; i < n; ++i) p[i] = i;
  for (std::size_t i = n; i > 1; --i) std::swap(p[i - 1], p[rng.below(i)]);
  return p;
}

// Signature -> dense id, independent of the library's key encoding.
struct NaiveIds {
  std::map<std::vector<long>, int> ids;
  int operator()(const std::vector<long>& key) {
    return ids.emplace(key, static_cast<int>(ids.size())).first->second;
  }
};

inline std::vector<std::vector<NodeId>> adjacency(std::size_t n, const std::vector<Edge>& edges) {
  std::vector<std::vector<NodeId>> adj(n);
  for (const Edge& e : edges) {
    adj[e.u].push_back(e.v);
    adj[e.v].push_back(e.u);
  }
  return adj;
}

// Colors of every 1-WL round 0..rounds on g.
inline std::vector<std::vector<int>> naive_wl(const Graph& g, int rounds, NaiveIds& ids) {
  const std::size_t n = g.num_nodes();
  std::vector<std::vector<NodeId>> adj(n);
  for (NodeId v = 0; v < n; ++v) adj[v].assign(g.neighbors(v).begin(), g.neighbors(v).end());
  std::vector<std::vector<int>> out(1, std::vector<int>(n));
  for (NodeId v = 0; v < n; ++v) out[0][v] = ids({-1, static_cast<long>(g.label(v))});
  for (int t = 0; t < rounds; ++t) {
    const auto& c = out.back();
    std::vector<int> next(n);
    for (NodeId v = 0; v < n; ++v) {
      std::vector<long> nb;
      for (NodeId w : adj[v]) nb.push_back(c[w]);
      std::sort(nb.begin(), nb.end());
      std::vector<long> key{-2, c[v], -3};
      key.insert(key.end(), nb.begin(), nb.end());
      next[v] = ids(key);
    }
    out.push_back(std::move(next));
  }
  return out;
}

// Flattened cells c[s * n + v] of DS-WL (dss=false) or DSS-WL (dss=true)
// after every round 0..rounds.
inline std::vector<std::vector<int>> naive_bag(const Bag& bag, int rounds, bool dss, NaiveIds& ids) {
  const std::size_t n = bag.num_nodes;
  const std::size_t m = bag.size();
  std::vector<std::vector<std::vector<NodeId>>> sub_adj;
  for (const auto& edges : bag.subgraphs) sub_adj.push_back(adjacency(n, edges));
  const auto source_adj = adjacency(n, bag.source_edges);
  std::vector<std::vector<int>> out(1, std::vector<int>(m * n));
  for (std::size_t s = 0; s < m; ++s) {
    for (NodeId v = 0; v < n; ++v) {
      const auto root = bag.root(s);
      out[0][s * n + v] =
          ids({-1, static_cast<long>(bag.source_label(v)), root && *root == v ? 1 : 0});
    }
  }
  for (int t = 0; t < rounds; ++t) {
    const auto& c = out.back();
    std::vector<int> needle(n);
    if (dss) {
      for (NodeId v = 0; v < n; ++v) {
        std::vector<long> key{-4};
        for (std::size_t s = 0; s < m; ++s) key.push_back(c[s * n + v]);
        std::sort(key.begin() + 1, key.end());
        needle[v] = ids(key);
      }
    }
    std::vector<int> next(m * n);
    for (std::size_t s = 0; s < m; ++s) {
      for (NodeId v = 0; v < n; ++v) {
        std::vector<long> nb;
        for (NodeId w : sub_adj[s][v]) nb.push_back(c[s * n + w]);
        std::sort(nb.begin(), nb.end());
        std::vector<long> key{-2, c[s * n + v], -3};
        key.insert(key.end(), nb.begin(), nb.end());
        if (dss) {
          key.push_back(-5);
          key.push_back(needle[v]);
          std::vector<long> mv;
          for (NodeId w : source_adj[v]) mv.push_back(needle[w]);
          std::sort(mv.begin(), mv.end());
          key.push_back(-6);
          key.insert(key.end(), mv.begin(), mv.end());
        }
        next[s * n + v] = ids(key);
      }
    }
    out.push_back(std::move(next));
  }
  return out;
}

// Multiset of subgraph colors of a bag at one round.
inline std::vector<int> bag_readout(const std::vector<int>& cells, std::size_t n, std::size_t m,
                                    NaiveIds& ids) {
  std::vector<int> subgraph_colors;
  for (std::size_t s = 0; s < m; ++s) {
    std::vector<long> key{-7};
    for (NodeId v = 0; v < n; ++v) key.push_back(cells[s * n + v]);
    std::sort(key.begin() + 1, key.end());
    subgraph_colors.push_back(ids(key));
  }
  std::sort(subgraph_colors.begin(), subgraph_colors.end());
  return subgraph_colors;
}

// First round at which the two bags' readouts differ, scanning enough
// rounds for both refinements to stabilize.
inline std::optional<int> naive_bag_first_difference(const Bag& a, const Bag& b, bool dss) {
  if (a.size() != b.size()) return 0;
  if (a.size() == 0) return std::nullopt;
  const int rounds = static_cast<int>(a.num_nodes * a.size() + b.num_nodes * b.size()) + 1;
  NaiveIds ids;
  const auto ca = naive_bag(a, rounds, dss, ids);
  const auto cb = naive_bag(b, rounds, dss, ids);
  for (int t = 0; t <= rounds; ++t) {
    if (bag_readout(ca[t], a.num_nodes, a.size(), ids) !=
        bag_readout(cb[t], b.num_nodes, b.size(), ids)) {
      return t;
    }
  }
  return std::nullopt;
}

inline std::optional<int> naive_wl_first_difference(const Graph& g, const Graph& h) {
  const int rounds = static_cast<int>(g.num_nodes() + h.num_nodes()) + 1;
  NaiveIds ids;
  const auto cg = naive_wl(g, rounds, ids);
  const auto ch = naive_wl(h, rounds, ids);
  for (int t = 0; t <= rounds; ++t) {
    auto x = cg[t];
    auto y = ch[t];
    std::sort(x.begin(), x.end());
    std::sort(y.begin(), y.end());
    if (x != y) return t;
  }
  return std::nullopt;
}

// Same-grouping check for two colorings, independent of NodePartition.
inline bool same_grouping(const std::vector<int>& a, const std::vector<unsigned>& b) {
  if (a.size() != b.size()) return false;
  std::map<int, unsigned> fwd;
  std::map<unsigned, int> back;
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (fwd.emplace(a[i], b[i]).first->second != b[i]) return false;
    if (back.emplace(b[i], a[i]).first->second != a[i]) return false;
  }
  return true;
}

}  // namespace support
