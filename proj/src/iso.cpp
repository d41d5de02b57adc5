#include "bagwl/iso.hpp"

#include <algorithm>
#include <map>

#include "refine_detail.hpp"

namespace bagwl {
namespace {

struct DenseAdjacency {
  std::size_t n;
  std::vector<std::uint8_t> bits;

  explicit DenseAdjacency(const Graph& g) : n(g.num_nodes()), bits(n * n, 0) {
    for (const Edge& e : g.edges()) {
      bits[e.u * n + e.v] = 1;
      bits[e.v * n + e.u] = 1;
    }
  }
  bool operator()(NodeId u, NodeId v) const { return bits[u * n + v] != 0; }
};

// Joint stable 1-WL coloring; nullopt when the color histograms already differ.
std::optional<std::pair<std::vector<ColorId>, std::vector<ColorId>>> joint_colors(
    const Graph& g1, const Graph& g2) {
  ColorInterner interner;
  KeyBuilder kb;
  auto init = [&](const Graph& g) {
    std::vector<ColorId> c(g.num_nodes());
    for (NodeId v = 0; v < g.num_nodes(); ++v) {
      c[v] = detail::initial_node_color(interner, kb, g.label(v), false);
    }
    return c;
  };
  detail::WlCells a(detail::Csr(g1.num_nodes(), g1.edges()), init(g1));
  detail::WlCells b(detail::Csr(g2.num_nodes(), g2.edges()), init(g2));
  std::uint32_t classes = detail::joint_distinct(a.colors(), b.colors());
  while (true) {
    if (sorted_multiset(a.colors()) != sorted_multiset(b.colors())) return std::nullopt;
    a.step(interner, kb);
    b.step(interner, kb);
    const std::uint32_t now = detail::joint_distinct(a.colors(), b.colors());
    if (now == classes) break;
    classes = now;
  }
  if (sorted_multiset(a.colors()) != sorted_multiset(b.colors())) return std::nullopt;
  return std::make_pair(std::vector<ColorId>(a.colors().begin(), a.colors().end()),
                        std::vector<ColorId>(b.colors().begin(), b.colors().end()));
}

class Matcher {
 public:
  Matcher(const Graph& g1, const Graph& g2, std::vector<ColorId> c1, std::vector<ColorId> c2)
      : g1_(g1), g2_(g2), adj1_(g1), adj2_(g2), c1_(std::move(c1)), c2_(std::move(c2)),
        map_(g1.num_nodes(), kUnmapped), used_(g2.num_nodes(), false) {
    build_order();
  }

  std::optional<std::vector<NodeId>> run() {
    if (extend(0)) return map_;
    return std::nullopt;
  }

 private:
  static constexpr NodeId kUnmapped = UINT32_MAX;

  // Rarest class first, then greedily the node with most already-ordered
  // neighbors so adjacency constraints bite early.
  void build_order() {
    const std::size_t n = g1_.num_nodes();
    std::map<ColorId, std::size_t> class_size;
    for (ColorId c : c1_) ++class_size[c];
    std::vector<bool> placed(n, false);
    std::vector<std::size_t> ordered_nbrs(n, 0);
    for (std::size_t step = 0; step < n; ++step) {
      NodeId best = kUnmapped;
      for (NodeId u = 0; u < n; ++u) {
        if (placed[u]) continue;
        if (best == kUnmapped) {
          best = u;
          continue;
        }
        const auto key = [&](NodeId x) {
          return std::make_tuple(-static_cast<long>(ordered_nbrs[x]), class_size[c1_[x]], x);
        };
        if (key(u) < key(best)) best = u;
      }
      placed[best] = true;
      order_.push_back(best);
      for (NodeId w : g1_.neighbors(best)) ++ordered_nbrs[w];
    }
  }

  bool consistent(NodeId u, NodeId w, std::size_t depth) const {
    if (c1_[u] != c2_[w]) return false;
    for (std::size_t i = 0; i < depth; ++i) {
      const NodeId x = order_[i];
      if (adj1_(u, x) != adj2_(w, map_[x])) return false;
    }
    return true;
  }

  bool extend(std::size_t depth) {
    if (depth == order_.size()) return true;
    const NodeId u = order_[depth];
    // Candidates: neighbors of an already-mapped neighbor's image if one
    // exists, otherwise every node of g2.
    std::span<const NodeId> pool;
    for (NodeId x : g1_.neighbors(u)) {
      if (map_[x] != kUnmapped) {
        pool = g2_.neighbors(map_[x]);
        break;
      }
    }
    auto try_node = [&](NodeId w) {
      if (used_[w] || !consistent(u, w, depth)) return false;
      map_[u] = w;
      used_[w] = true;
      if (extend(depth + 1)) return true;
      map_[u] = kUnmapped;
      used_[w] = false;
      return false;
    };
    if (!pool.empty()) {
      for (NodeId w : pool) {
        if (try_node(w)) return true;
      }
      return false;
    }
    for (NodeId w = 0; w < g2_.num_nodes(); ++w) {
      if (try_node(w)) return true;
    }
    return false;
  }

  const Graph& g1_;
  const Graph& g2_;
  DenseAdjacency adj1_;
  DenseAdjacency adj2_;
  std::vector<ColorId> c1_;
  std::vector<ColorId> c2_;
  std::vector<NodeId> order_;
  std::vector<NodeId> map_;
  std::vector<bool> used_;
};

std::vector<Label> sorted_labels(const Graph& g) {
  std::vector<Label> out(g.num_nodes());
  for (NodeId v = 0; v < g.num_nodes(); ++v) out[v] = g.label(v);
  std::sort(out.begin(), out.end());
  return out;
}

// Cheap isomorphism invariant for bucketing.
std::vector<std::size_t> invariant(const Graph& g) {
  std::vector<std::size_t> key{g.num_nodes(), g.num_edges()};
  std::vector<std::vector<std::size_t>> local(g.num_nodes());
  for (NodeId v = 0; v < g.num_nodes(); ++v) {
    auto& row = local[v];
    row.push_back(g.label(v));
    row.push_back(degree(g, v));
    std::vector<std::size_t> nd;
    for (NodeId w : g.neighbors(v)) nd.push_back(degree(g, w));
    std::sort(nd.begin(), nd.end());
    row.insert(row.end(), nd.begin(), nd.end());
    row.push_back(SIZE_MAX);
  }
  std::sort(local.begin(), local.end());
  for (const auto& row : local) key.insert(key.end(), row.begin(), row.end());
  return key;
}

}  // namespace

IsoResult are_isomorphic(const Graph& g1, const Graph& g2) {
  if (g1.num_nodes() != g2.num_nodes() || g1.num_edges() != g2.num_edges()) return {};
  auto d1 = g1.degree_sequence();
  auto d2 = g2.degree_sequence();
  std::sort(d1.begin(), d1.end());
  std::sort(d2.begin(), d2.end());
  if (d1 != d2 || sorted_labels(g1) != sorted_labels(g2)) return {};
  auto colors = joint_colors(g1, g2);
  if (!colors) return {};
  Matcher matcher(g1, g2, std::move(colors->first), std::move(colors->second));
  auto witness = matcher.run();
  if (!witness) return {};
  return {true, std::move(witness)};
}

bool bags_isomorphic(const Bag& b1, const Bag& b2) {
  if (b1.size() != b2.size()) return false;
  if (b1.size() == 0) return true;
  if (b1.num_nodes != b2.num_nodes) return false;
  std::map<std::vector<std::size_t>, std::vector<Graph>> pending;
  for (std::size_t s = 0; s < b2.size(); ++s) {
    Graph g = b2.subgraph_graph(s);
    pending[invariant(g)].push_back(std::move(g));
  }
  for (std::size_t s = 0; s < b1.size(); ++s) {
    const Graph g = b1.subgraph_graph(s);
    auto it = pending.find(invariant(g));
    if (it == pending.end()) return false;
    auto& bucket = it->second;
    // Isomorphism is an equivalence relation, so greedy matching is exact.
    auto match = std::find_if(bucket.begin(), bucket.end(),
                              [&](const Graph& h) { return are_isomorphic(g, h).isomorphic; });
    if (match == bucket.end()) return false;
    bucket.erase(match);
  }
  return true;
}

void enumerate_graphs(std::size_t n, const std::function<void(const Graph&)>& visit) {
  if (n > 7) throw UsageError("enumerate_graphs supports n <= 7, got " + std::to_string(n));
  std::vector<Graph> level{Graph(n, {})};
  const std::size_t max_edges = n * (n - (n > 0 ? 1 : 0)) / 2;
  for (std::size_t m = 0;; ++m) {
    for (const Graph& g : level) visit(g);
    if (m == max_edges) break;
    std::vector<Graph> next;
    std::map<std::vector<std::size_t>, std::vector<std::size_t>> buckets;
    for (const Graph& g : level) {
      for (NodeId u = 0; u < n; ++u) {
        for (NodeId v = u + 1; v < n; ++v) {
          if (g.has_edge(u, v)) continue;
          std::vector<Edge> edges(g.edges().begin(), g.edges().end());
          edges.push_back({u, v});
          Graph candidate(n, std::move(edges));
          auto& bucket = buckets[invariant(candidate)];
          const bool seen = std::any_of(bucket.begin(), bucket.end(), [&](std::size_t idx) {
            return are_isomorphic(candidate, next[idx]).isomorphic;
          });
          if (!seen) {
            bucket.push_back(next.size());
            next.push_back(std::move(candidate));
          }
        }
      }
    }
    level = std::move(next);
  }
}

std::vector<Graph> enumerate_graphs(std::size_t n) {
  std::vector<Graph> out;
  enumerate_graphs(n, [&](const Graph& g) { out.push_back(g); });
  return out;
}

}  // namespace bagwl
