#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "bagwl/bag_wl.hpp"
#include "bagwl/graph.hpp"
#include "bagwl/policy.hpp"

namespace bagwl {

struct SampleConfig {
  double ratio = 1.0;       // fraction of the bag kept, in (0, 1]
  std::uint32_t votes = 1;  // odd, >= 1
  std::uint64_t seed = 0;

  /// Throws UsageError when ratio or votes are out of range.
  void validate() const;
};

/// Number of subgraphs kept from a bag of size m: max(1, round(ratio * m)).
std::size_t sample_size(std::size_t m, double ratio);

/// Indices (ascending) of a uniform without-replacement sample of
/// sample_size(m, ratio) subgraphs, fully determined by (seed, draw_index).
std::vector<std::size_t> sample_indices(std::size_t m, const SampleConfig& cfg,
                                        std::uint64_t draw_index);

/// Sub-bag selected by sample_indices. Throws UsageError for an empty bag.
Bag sample_bag(const Bag& b, const SampleConfig& cfg, std::uint64_t draw_index);

struct VoteResult {
  Verdict verdict;  // majority verdict
  std::uint32_t distinguished_votes = 0;
  std::uint32_t possibly_isomorphic_votes = 0;
  std::vector<Verdict> draws;
};

/// Runs the bag tester `cfg.votes` times, each on sub-bags drawn with the
/// same (seed, draw index) for both graphs, and takes the majority verdict.
/// The majority round is the smallest distinguishing round among
/// distinguishing draws, or the largest convergence round otherwise.
/// The bags come from `tester.policy`.
VoteResult vote_test(const Graph& g1, const Graph& g2, const TesterConfig& tester,
                     const SampleConfig& cfg,
                     std::optional<std::uint32_t> max_rounds = std::nullopt);
VoteResult vote_test_bags(const Bag& b1, const Bag& b2, const TesterConfig& tester,
                          const SampleConfig& cfg,
                          std::optional<std::uint32_t> max_rounds = std::nullopt);

}  // namespace bagwl
