#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string_view>
#include <vector>

#include "bagwl/graph.hpp"

namespace bagwl {

/// Circulant skip-link graph: n-cycle plus chords i -- i±k (mod n).
/// Requires n >= 7 and 2 <= k <= n-2.
Graph csl(std::size_t n, std::size_t k);

/// 4x4 Rook's graph. Grid point (x, y) is node x + 4*(3-y): nodes are
/// numbered left to right, then top to bottom.
Graph rooks4();

/// Shrikhande graph on the same grid numbering as rooks4(): torus moves
/// (x±1, y), (x, y±1) and the anti-diagonal (x±1, y∓1).
Graph shrikhande();

Graph cycle(std::size_t n);
Graph disjoint_cycles(std::span<const std::size_t> sizes);
Graph path(std::size_t n);
/// Star with `leaves` leaves; the center is node 0.
Graph star(std::size_t leaves);
Graph complete(std::size_t n);

/// G(n, p) random graph, deterministic in `seed`.
Graph random_graph(std::size_t n, double p, std::uint64_t seed);
std::vector<NodeId> random_permutation(std::size_t n, std::uint64_t seed);

struct SrParams {
  std::size_t n = 0;
  std::size_t k = 0;
  std::size_t lambda = 0;
  std::size_t mu = 0;

  friend bool operator==(const SrParams&, const SrParams&) = default;
};

/// (n, k, lambda, mu) when g is strongly regular, nullopt otherwise.
/// Graphs without adjacent (resp. non-adjacent) pairs report lambda (resp.
/// mu) as 0. Requires n >= 2.
std::optional<SrParams> sr_parameters(const Graph& g);

/// Builds a graph from "family:params" text, e.g. "csl:12:3", "rooks4",
/// "cycle:6", "2c3", "cycles:3:3", "path:4", "star:3", "complete:5".
Graph generate(std::string_view spec);

}  // namespace bagwl
