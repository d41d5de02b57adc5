#include "bagwl/policy.hpp"

#include <algorithm>
#include <charconv>
#include <deque>

namespace bagwl {

PolicySpec parse_policy(std::string_view text) {
  PolicySpec p;
  std::string_view body = text;
  if (!body.empty() && body.back() == '^') {
    p.augmented = true;
    body.remove_suffix(1);
  }
  auto parse_depth = [&](std::string_view digits) {
    std::uint32_t d = 0;
    auto [ptr, ec] = std::from_chars(digits.data(), digits.data() + digits.size(), d);
    if (ec != std::errc() || ptr != digits.data() + digits.size()) {
      throw UsageError("bad ego depth in policy '" + std::string(text) + "'");
    }
    if (d == 0) throw UsageError("ego depth must be >= 1 in policy '" + std::string(text) + "'");
    return d;
  };
  if (body == "nd") {
    p.kind = PolicyKind::kNodeDeleted;
  } else if (body == "ed") {
    p.kind = PolicyKind::kEdgeDeleted;
  } else if (body == "se") {
    p.kind = PolicyKind::kSingleEdge;
  } else if (body.starts_with("ego+:")) {
    p.kind = PolicyKind::kEgoPlus;
    p.depth = parse_depth(body.substr(5));
  } else if (body.starts_with("ego:")) {
    p.kind = PolicyKind::kEgo;
    p.depth = parse_depth(body.substr(4));
  } else {
    throw UsageError("unknown policy '" + std::string(text) + "'");
  }
  return p;
}

std::string to_string(const PolicySpec& p) {
  std::string s;
  switch (p.kind) {
    case PolicyKind::kNodeDeleted: s = "nd"; break;
    case PolicyKind::kEdgeDeleted: s = "ed"; break;
    case PolicyKind::kEgo: s = "ego:" + std::to_string(p.depth); break;
    case PolicyKind::kEgoPlus: s = "ego+:" + std::to_string(p.depth); break;
    case PolicyKind::kSingleEdge: s = "se"; break;
  }
  if (p.augmented) s += '^';
  return s;
}

Graph Bag::subgraph_graph(std::size_t s) const {
  std::vector<Label> labels(num_nodes);
  const auto r = root(s);
  for (NodeId v = 0; v < num_nodes; ++v) {
    labels[v] = 2 * source_label(v) + ((r && *r == v) ? 1 : 0);
  }
  return Graph(num_nodes, subgraphs[s], std::move(labels));
}

namespace {

std::vector<NodeId> ball(const Graph& g, NodeId root, std::uint32_t depth) {
  std::vector<std::uint32_t> dist(g.num_nodes(), UINT32_MAX);
  std::deque<NodeId> queue{root};
  dist[root] = 0;
  std::vector<NodeId> members;
  while (!queue.empty()) {
    const NodeId v = queue.front();
    queue.pop_front();
    members.push_back(v);
    if (dist[v] == depth) continue;
    for (NodeId w : g.neighbors(v)) {
      if (dist[w] == UINT32_MAX) {
        dist[w] = dist[v] + 1;
        queue.push_back(w);
      }
    }
  }
  return members;
}

}  // namespace

Bag apply_policy(const Graph& g, const PolicySpec& p) {
  if ((p.kind == PolicyKind::kEgo || p.kind == PolicyKind::kEgoPlus) && p.depth == 0) {
    throw UsageError("ego depth must be >= 1");
  }
  Bag bag;
  bag.num_nodes = g.num_nodes();
  bag.source_labels = g.labels();
  bag.source_edges.assign(g.edges().begin(), g.edges().end());
  const auto all_edges = g.edges();

  switch (p.kind) {
    case PolicyKind::kNodeDeleted:
      for (NodeId v = 0; v < g.num_nodes(); ++v) {
        auto& sub = bag.subgraphs.emplace_back();
        for (const Edge& e : all_edges) {
          if (e.u != v && e.v != v) sub.push_back(e);
        }
      }
      break;
    case PolicyKind::kEdgeDeleted:
      for (std::size_t i = 0; i < all_edges.size(); ++i) {
        auto& sub = bag.subgraphs.emplace_back();
        for (std::size_t j = 0; j < all_edges.size(); ++j) {
          if (j != i) sub.push_back(all_edges[j]);
        }
      }
      break;
    case PolicyKind::kEgo:
    case PolicyKind::kEgoPlus: {
      std::vector<bool> inside(g.num_nodes());
      for (NodeId v = 0; v < g.num_nodes(); ++v) {
        std::fill(inside.begin(), inside.end(), false);
        for (NodeId w : ball(g, v, p.depth)) inside[w] = true;
        auto& sub = bag.subgraphs.emplace_back();
        for (const Edge& e : all_edges) {
          if (inside[e.u] && inside[e.v]) sub.push_back(e);
        }
        if (p.kind == PolicyKind::kEgoPlus) bag.roots.push_back(v);
      }
      break;
    }
    case PolicyKind::kSingleEdge:
      for (const Edge& e : all_edges) bag.subgraphs.push_back({e});
      break;
  }

  if (p.augmented) {
    bag.subgraphs.emplace_back(all_edges.begin(), all_edges.end());
    if (!bag.roots.empty()) bag.roots.push_back(std::nullopt);
  }
  return bag;
}

Bag singleton_bag(const Graph& g) {
  Bag bag;
  bag.num_nodes = g.num_nodes();
  bag.source_labels = g.labels();
  bag.source_edges.assign(g.edges().begin(), g.edges().end());
  bag.subgraphs.push_back(bag.source_edges);
  return bag;
}

Graph union_adjacency(const Bag& b) {
  if (b.subgraphs.empty()) throw UsageError("union_adjacency of an empty bag");
  std::vector<Edge> edges;
  for (const auto& sub : b.subgraphs) edges.insert(edges.end(), sub.begin(), sub.end());
  return Graph(b.num_nodes, std::move(edges), b.source_labels);
}

bool is_edge_covering(const Bag& b, const Graph& g) {
  if (b.num_nodes != g.num_nodes()) return false;
  std::vector<Edge> covered;
  for (const auto& sub : b.subgraphs) covered.insert(covered.end(), sub.begin(), sub.end());
  std::sort(covered.begin(), covered.end());
  return std::all_of(g.edges().begin(), g.edges().end(), [&](const Edge& e) {
    return std::binary_search(covered.begin(), covered.end(), e);
  });
}

namespace {

std::vector<Edge> permute_edges(std::span<const Edge> edges, std::span<const NodeId> sigma) {
  std::vector<Edge> out;
  out.reserve(edges.size());
  for (const Edge& e : edges) {
    Edge m{sigma[e.u], sigma[e.v]};
    if (m.u > m.v) std::swap(m.u, m.v);
    out.push_back(m);
  }
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace

Bag permute_bag(const Bag& b, std::span<const NodeId> sigma) {
  if (!is_permutation_of_n(sigma, b.num_nodes)) {
    throw UsageError("permutation is not a bijection on the bag's vertex set");
  }
  Bag out;
  out.num_nodes = b.num_nodes;
  for (const auto& sub : b.subgraphs) out.subgraphs.push_back(permute_edges(sub, sigma));
  for (const auto& r : b.roots) {
    out.roots.push_back(r ? std::optional<NodeId>(sigma[*r]) : std::nullopt);
  }
  if (b.source_labels) {
    out.source_labels.emplace(b.num_nodes);
    for (NodeId v = 0; v < b.num_nodes; ++v) (*out.source_labels)[sigma[v]] = (*b.source_labels)[v];
  }
  out.source_edges = permute_edges(b.source_edges, sigma);
  return out;
}

Bag select_subgraphs(const Bag& b, std::span<const std::size_t> indices) {
  Bag out;
  out.num_nodes = b.num_nodes;
  out.source_labels = b.source_labels;
  out.source_edges = b.source_edges;
  for (std::size_t i : indices) {
    if (i >= b.size()) throw UsageError("subgraph index out of range");
    out.subgraphs.push_back(b.subgraphs[i]);
    if (!b.roots.empty()) out.roots.push_back(b.roots[i]);
  }
  return out;
}

}  // namespace bagwl
