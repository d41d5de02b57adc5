#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace bagwl {

using NodeId = std::uint32_t;
using Label = std::uint32_t;

/// Unordered node pair, stored with first < second.
struct Edge {
  NodeId u = 0;
  NodeId v = 0;

  friend auto operator<=>(const Edge&, const Edge&) = default;
};

/// Caller violated a documented precondition (bad node id, bad parameters...).
class UsageError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Malformed textual input.
class ParseError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Simple undirected graph on nodes 0..n-1 with optional discrete node labels.
///
/// Immutable once built. Edges are kept sorted and deduplicated; adjacency
/// lists are sorted ascending.
class Graph {
 public:
  Graph() = default;

  /// Throws UsageError on self-loops, out-of-range endpoints or a label
  /// vector whose size differs from num_nodes. Duplicate pairs collapse.
  Graph(std::size_t num_nodes, std::vector<Edge> edges,
        std::optional<std::vector<Label>> labels = std::nullopt);

  static Graph from_pairs(std::size_t num_nodes,
                          std::span<const std::pair<NodeId, NodeId>> pairs);

  std::size_t num_nodes() const { return adjacency_.size(); }
  std::size_t num_edges() const { return edges_.size(); }

  std::span<const Edge> edges() const { return edges_; }
  std::span<const NodeId> neighbors(NodeId v) const;
  bool has_edge(NodeId u, NodeId v) const;

  bool has_labels() const { return labels_.has_value(); }
  const std::optional<std::vector<Label>>& labels() const { return labels_; }
  /// Label of v, 0 when the graph is unlabeled.
  Label label(NodeId v) const;

  std::vector<std::size_t> degree_sequence() const;

  friend bool operator==(const Graph& a, const Graph& b) {
    return a.num_nodes() == b.num_nodes() && a.edges_ == b.edges_ &&
           a.labels_ == b.labels_;
  }

 private:
  std::vector<Edge> edges_;
  std::vector<std::vector<NodeId>> adjacency_;
  std::optional<std::vector<Label>> labels_;
};

std::size_t degree(const Graph& g, NodeId v);

/// Node u of g becomes node sigma[u] of the result. Labels travel with nodes.
Graph apply_permutation(const Graph& g, std::span<const NodeId> sigma);

std::vector<NodeId> invert_permutation(std::span<const NodeId> sigma);
bool is_permutation_of_n(std::span<const NodeId> sigma, std::size_t n);

// Edge-list text format:
//   n m
//   u v          (m lines, 0-based)
//   labels:      (optional)
//   l_0 ... l_{n-1}
Graph parse_edge_list(std::istream& in);
Graph parse_edge_list(std::string_view text);
Graph read_edge_list_file(const std::string& path);
std::string format_edge_list(const Graph& g);

}  // namespace bagwl
