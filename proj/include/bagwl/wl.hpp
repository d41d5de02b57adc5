#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "bagwl/graph.hpp"
#include "bagwl/interner.hpp"
#include "bagwl/verdict.hpp"

namespace bagwl {

/// Per-round node colorings of one 1-WL run.
struct ColoringHistory {
  std::vector<std::vector<ColorId>> rounds;  // rounds[0] is the initial coloring
  std::vector<std::vector<ColorId>> fingerprint_per_round;
  /// First round t >= 1 whose partition equals that of round t-1.
  std::uint32_t converged_at = 0;
  bool converged = false;

  const std::vector<ColorId>& stable() const { return rounds.back(); }
};

/// Classic color refinement: c'(v) = HASH(c(v), {{c(w) : w ~ v}}).
/// Initial colors come from node labels (0 when unlabeled). Runs until the
/// node partition stops changing or `max_rounds` refinements (default n).
ColoringHistory wl_refine(const Graph& g, std::optional<std::uint32_t> max_rounds,
                          ColorInterner& interner);
ColoringHistory wl_refine(const Graph& g, std::optional<std::uint32_t> max_rounds = std::nullopt);

/// 1-WL test on a pair under one shared interner.
Verdict wl_test(const Graph& g1, const Graph& g2,
                std::optional<std::uint32_t> max_rounds = std::nullopt, bool keep_trace = false);

/// Stable coloring of ordered node pairs, row-major (u * n + v).
struct PairColoring2 {
  std::size_t num_nodes = 0;
  std::vector<ColorId> colors;
  std::uint32_t round = 0;

  ColorId at(NodeId u, NodeId v) const { return colors[u * num_nodes + v]; }
};

struct Fwl2Result {
  PairColoring2 coloring;
  std::vector<ColorId> fingerprint;  // sorted multiset of pair colors
  std::uint32_t converged_at = 0;
  bool converged = false;
};

/// Folklore 2-WL: c'(u,v) = HASH(c(u,v), {{(c(u,w), c(w,v)) : w}}), initial
/// atomic type (label u, label v, adjacent, u == v). Default budget n^2.
Fwl2Result fwl2_refine(const Graph& g, std::optional<std::uint32_t> max_rounds,
                       ColorInterner& interner);
Fwl2Result fwl2_refine(const Graph& g, std::optional<std::uint32_t> max_rounds = std::nullopt);

Verdict fwl2_test(const Graph& g1, const Graph& g2,
                  std::optional<std::uint32_t> max_rounds = std::nullopt, bool keep_trace = false);

}  // namespace bagwl
