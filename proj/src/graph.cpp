#include "bagwl/graph.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>

namespace bagwl {

Graph::Graph(std::size_t num_nodes, std::vector<Edge> edges,
             std::optional<std::vector<Label>> labels)
    : adjacency_(num_nodes), labels_(std::move(labels)) {
  if (labels_ && labels_->size() != num_nodes) {
    throw UsageError("label count " + std::to_string(labels_->size()) +
                     " does not match node count " + std::to_string(num_nodes));
  }
  for (Edge& e : edges) {
    if (e.u == e.v) {
      throw UsageError("self-loop at node " + std::to_string(e.u));
    }
    if (e.u >= num_nodes || e.v >= num_nodes) {
      throw UsageError("edge (" + std::to_string(e.u) + "," + std::to_string(e.v) +
                       ") out of range for " + std::to_string(num_nodes) + " nodes");
    }
    if (e.u > e.v) std::swap(e.u, e.v);
  }
  std::sort(edges.begin(), edges.end());
  edges.erase(std::unique(edges.begin(), edges.end()), edges.end());
  edges_ = std::move(edges);
  for (const Edge& e : edges_) {
    adjacency_[e.u].push_back(e.v);
    adjacency_[e.v].push_back(e.u);
  }
  for (auto& nbrs : adjacency_) std::sort(nbrs.begin(), nbrs.end());
}

Graph Graph::from_pairs(std::size_t num_nodes,
                        std::span<const std::pair<NodeId, NodeId>> pairs) {
  std::vector<Edge> edges;
  edges.reserve(pairs.size());
  for (auto [u, v] : pairs) edges.push_back({u, v});
  return Graph(num_nodes, std::move(edges));
}

std::span<const NodeId> Graph::neighbors(NodeId v) const {
  if (v >= num_nodes()) {
    throw UsageError("node " + std::to_string(v) + " out of range");
  }
  return adjacency_[v];
}

bool Graph::has_edge(NodeId u, NodeId v) const {
  if (u >= num_nodes() || v >= num_nodes()) return false;
  const auto& nbrs = adjacency_[u];
  return std::binary_search(nbrs.begin(), nbrs.end(), v);
}

Label Graph::label(NodeId v) const {
  return labels_ ? (*labels_)[v] : Label{0};
}

std::vector<std::size_t> Graph::degree_sequence() const {
  std::vector<std::size_t> out;
  out.reserve(num_nodes());
  for (const auto& nbrs : adjacency_) out.push_back(nbrs.size());
  return out;
}

std::size_t degree(const Graph& g, NodeId v) { return g.neighbors(v).size(); }

bool is_permutation_of_n(std::span<const NodeId> sigma, std::size_t n) {
  if (sigma.size() != n) return false;
  std::vector<bool> seen(n, false);
  for (NodeId x : sigma) {
    if (x >= n || seen[x]) return false;
    seen[x] = true;
  }
  return true;
}

std::vector<NodeId> invert_permutation(std::span<const NodeId> sigma) {
  if (!is_permutation_of_n(sigma, sigma.size())) {
    throw UsageError("not a permutation");
  }
  std::vector<NodeId> inv(sigma.size());
  for (std::size_t i = 0; i < sigma.size(); ++i) inv[sigma[i]] = static_cast<NodeId>(i);
  return inv;
}

Graph apply_permutation(const Graph& g, std::span<const NodeId> sigma) {
  if (!is_permutation_of_n(sigma, g.num_nodes())) {
    throw UsageError("permutation is not a bijection on 0.." +
                     std::to_string(g.num_nodes()) + "-1");
  }
  std::vector<Edge> edges;
  edges.reserve(g.num_edges());
  for (const Edge& e : g.edges()) edges.push_back({sigma[e.u], sigma[e.v]});
  std::optional<std::vector<Label>> labels;
  if (g.has_labels()) {
    labels.emplace(g.num_nodes());
    for (std::size_t v = 0; v < g.num_nodes(); ++v) (*labels)[sigma[v]] = (*g.labels())[v];
  }
  return Graph(g.num_nodes(), std::move(edges), std::move(labels));
}

namespace {

long long read_int(std::istream& in, const char* what) {
  long long x = 0;
  if (!(in >> x)) {
    throw ParseError(std::string("expected integer for ") + what);
  }
  return x;
}

}  // namespace

Graph parse_edge_list(std::istream& in) {
  const long long n = read_int(in, "node count");
  const long long m = read_int(in, "edge count");
  if (n < 0 || m < 0) throw ParseError("negative node or edge count");
  std::vector<Edge> edges;
  edges.reserve(static_cast<std::size_t>(m));
  for (long long i = 0; i < m; ++i) {
    const long long u = read_int(in, "edge endpoint");
    const long long v = read_int(in, "edge endpoint");
    if (u < 0 || v < 0 || u >= n || v >= n) {
      throw ParseError("edge " + std::to_string(i) + " endpoint out of range");
    }
    if (u == v) throw ParseError("edge " + std::to_string(i) + " is a self-loop");
    edges.push_back({static_cast<NodeId>(u), static_cast<NodeId>(v)});
  }
  std::optional<std::vector<Label>> labels;
  std::string token;
  if (in >> token) {
    if (token != "labels:") throw ParseError("unexpected trailing token '" + token + "'");
    labels.emplace();
    for (long long i = 0; i < n; ++i) {
      const long long l = read_int(in, "node label");
      if (l < 0) throw ParseError("negative node label");
      labels->push_back(static_cast<Label>(l));
    }
    if (in >> token) throw ParseError("unexpected trailing token '" + token + "'");
  }
  Graph g(static_cast<std::size_t>(n), edges, std::move(labels));
  if (g.num_edges() != edges.size()) throw ParseError("duplicate edge in edge list");
  return g;
}

Graph parse_edge_list(std::string_view text) {
  std::istringstream in{std::string(text)};
  return parse_edge_list(in);
}

Graph read_edge_list_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open '" + path + "'");
  return parse_edge_list(in);
}

std::string format_edge_list(const Graph& g) {
  std::ostringstream out;
  out << g.num_nodes() << ' ' << g.num_edges() << '\n';
  for (const Edge& e : g.edges()) out << e.u << ' ' << e.v << '\n';
  if (g.has_labels()) {
    out << "labels:\n";
    for (Label l : *g.labels()) out << l << '\n';
  }
  return out.str();
}

}  // namespace bagwl
