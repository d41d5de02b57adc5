#pragma once

#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include "bagwl/bag_wl.hpp"
#include "bagwl/graph.hpp"

namespace bagwl {

struct SearchResult {
  std::vector<Graph> classes;  // enumerate_graphs(n) order
  /// Index pairs (i < j) into `classes`, ascending.
  std::vector<std::pair<std::size_t, std::size_t>> pairs;
};

/// All pairs of non-isomorphic n-node graphs that `a` distinguishes and `b`
/// does not. n <= 7.
SearchResult find_separations(std::size_t n, const TesterConfig& a, const TesterConfig& b,
                              std::optional<std::uint32_t> max_rounds = std::nullopt,
                              unsigned jobs = 1);

}  // namespace bagwl
