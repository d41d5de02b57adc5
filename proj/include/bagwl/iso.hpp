#pragma once

#include <functional>
#include <optional>
#include <vector>

#include "bagwl/graph.hpp"
#include "bagwl/policy.hpp"

namespace bagwl {

struct IsoResult {
  bool isomorphic = false;
  /// When isomorphic: node u of g1 maps to (*witness)[u] of g2, so that
  /// apply_permutation(g1, *witness) == g2.
  std::optional<std::vector<NodeId>> witness;
};

/// Exact isomorphism by backtracking over stable 1-WL color classes with
/// incremental adjacency checks. Labels must match. Intended for n <= ~20.
IsoResult are_isomorphic(const Graph& g1, const Graph& g2);

/// True iff the subgraphs of the two bags can be perfectly matched into
/// isomorphic pairs (root marks and labels respected).
bool bags_isomorphic(const Bag& b1, const Bag& b2);

/// Every isomorphism class of simple unlabeled graphs on n nodes, exactly
/// once, ordered by edge count then discovery order. n <= 7.
std::vector<Graph> enumerate_graphs(std::size_t n);
void enumerate_graphs(std::size_t n, const std::function<void(const Graph&)>& visit);

}  // namespace bagwl
