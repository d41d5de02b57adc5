#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "bagwl/graph.hpp"

namespace bagwl {

enum class PolicyKind {
  kNodeDeleted,  // nd
  kEdgeDeleted,  // ed
  kEgo,          // ego:<depth>
  kEgoPlus,      // ego+:<depth>, root marked
  kSingleEdge,   // se
};

struct PolicySpec {
  PolicyKind kind = PolicyKind::kNodeDeleted;
  std::uint32_t depth = 0;  // EGO / EGO+ only, >= 1
  bool augmented = false;   // append the original graph to the bag

  friend bool operator==(const PolicySpec&, const PolicySpec&) = default;
};

/// Parses `nd`, `ed`, `ego:<k>`, `ego+:<k>`, `se`, each optionally followed
/// by `^` for the augmented variant. Throws UsageError.
PolicySpec parse_policy(std::string_view text);
std::string to_string(const PolicySpec& p);

/// Aligned bag of subgraphs. Every subgraph lives on the shared vertex set
/// 0..num_nodes-1; node i is the same source node in all of them.
struct Bag {
  std::size_t num_nodes = 0;
  std::vector<std::vector<Edge>> subgraphs;  // each sorted
  /// One entry per subgraph when the policy marks roots (EGO+), else empty.
  std::vector<std::optional<NodeId>> roots;
  std::optional<std::vector<Label>> source_labels;
  /// Connectivity of the graph the bag was generated from.
  std::vector<Edge> source_edges;

  std::size_t size() const { return subgraphs.size(); }
  std::optional<NodeId> root(std::size_t s) const {
    return roots.empty() ? std::nullopt : roots[s];
  }
  Label source_label(NodeId v) const { return source_labels ? (*source_labels)[v] : 0; }

  /// Subgraph s as a standalone graph. Node labels fold the root mark in as
  /// 2*source_label + is_root, which keeps root marks disjoint from labels.
  Graph subgraph_graph(std::size_t s) const;
};

Bag apply_policy(const Graph& g, const PolicySpec& p);

/// The trivial policy G -> {G}.
Bag singleton_bag(const Graph& g);

/// Graph whose edge set is the union of all subgraph edge sets. Throws
/// UsageError for an empty bag.
Graph union_adjacency(const Bag& b);

bool is_edge_covering(const Bag& b, const Graph& g);

/// Relabels every subgraph by sigma (node u -> sigma[u]); subgraph order is kept.
Bag permute_bag(const Bag& b, std::span<const NodeId> sigma);

/// Keeps the subgraphs at `indices` (ascending), preserving order.
Bag select_subgraphs(const Bag& b, std::span<const std::size_t> indices);

}  // namespace bagwl
