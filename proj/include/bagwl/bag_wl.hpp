#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "bagwl/graph.hpp"
#include "bagwl/interner.hpp"
#include "bagwl/policy.hpp"
#include "bagwl/verdict.hpp"

namespace bagwl {

enum class BaseRefiner { kWl1, kFwl2 };

struct DssOptions {
  /// Experimental: build the cross-bag terms C and M for subgraph S from the
  /// other subgraphs only (leave-one-out). No expressivity claim attached.
  bool exclude_own_subgraph = false;

  friend bool operator==(const DssOptions&, const DssOptions&) = default;
};

/// DSS-WL state of one bag after `round` refinements.
struct BagColoring {
  std::size_t num_nodes = 0;
  std::vector<std::vector<ColorId>> colors;  // colors[s][v]
  std::vector<ColorId> needle;               // interned C_v per node
  std::vector<ColorId> subgraph_colors;      // c_S per subgraph
  std::uint32_t round = 0;
};

/// Runs exactly `rounds` DSS-WL refinements on a single bag.
BagColoring dss_refine(const Bag& bag, std::uint32_t rounds, ColorInterner& interner,
                       const DssOptions& options = {});

/// C_v: the sorted multiset {{ c_{v,S} : S in bag }}.
std::vector<ColorId> needle_colors(const BagColoring& bc, NodeId v);

/// DSS-WL: c'_{v,S} = HASH(c_{v,S}, N_{v,S}, C_v, M_v), where N is taken over
/// S's edges, C_v is v's color multiset across the bag and M_v collects C_w
/// for w adjacent to v in the source graph. Graphs are compared by the
/// multiset of subgraph colors after every round.
Verdict dss_wl_test(const Graph& g1, const Graph& g2, const PolicySpec& policy,
                    std::optional<std::uint32_t> max_rounds = std::nullopt,
                    const DssOptions& options = {}, bool keep_trace = false);
Verdict dss_wl_test_bags(const Bag& b1, const Bag& b2,
                         std::optional<std::uint32_t> max_rounds = std::nullopt,
                         const DssOptions& options = {}, bool keep_trace = false);

/// DS-WL: independent base refinement on every subgraph, then the multiset
/// readout of subgraph colors. All subgraphs advance in lock-step so the
/// reported round is the first round at which the readouts differ.
Verdict ds_wl_test(const Graph& g1, const Graph& g2, const PolicySpec& policy,
                   BaseRefiner base = BaseRefiner::kWl1,
                   std::optional<std::uint32_t> max_rounds = std::nullopt,
                   bool keep_trace = false);
Verdict ds_wl_test_bags(const Bag& b1, const Bag& b2, BaseRefiner base = BaseRefiner::kWl1,
                        std::optional<std::uint32_t> max_rounds = std::nullopt,
                        bool keep_trace = false);

/// Tester selected by a config string: `wl`, `fwl2`, `ds:<policy>[:wl|:fwl2]`,
/// `dss:<policy>[:loo]` (`:loo` enables DssOptions::exclude_own_subgraph).
struct TesterConfig {
  enum class Kind { kWl, kFwl2, kDs, kDss };

  Kind kind = Kind::kWl;
  PolicySpec policy{};
  BaseRefiner base = BaseRefiner::kWl1;
  DssOptions dss{};

  bool uses_bags() const { return kind == Kind::kDs || kind == Kind::kDss; }
  friend bool operator==(const TesterConfig&, const TesterConfig&) = default;
};

TesterConfig parse_tester(std::string_view text);
std::string to_string(const TesterConfig& cfg);

Verdict run_tester(const Graph& g1, const Graph& g2, const TesterConfig& cfg,
                   std::optional<std::uint32_t> max_rounds = std::nullopt,
                   bool keep_trace = false);
/// Bag testers only; throws UsageError for `wl` / `fwl2`.
Verdict run_tester_on_bags(const Bag& b1, const Bag& b2, const TesterConfig& cfg,
                           std::optional<std::uint32_t> max_rounds = std::nullopt,
                           bool keep_trace = false);

/// Pairwise verdicts of one tester over a graph list, row-major.
struct VerdictMatrix {
  TesterConfig tester;
  std::size_t size = 0;
  std::vector<Verdict> cells;

  const Verdict& at(std::size_t i, std::size_t j) const { return cells[i * size + j]; }
};

/// One matrix per tester. Pairs are fanned out over `jobs` worker threads;
/// results are placed by pair index, so output does not depend on `jobs`.
std::vector<VerdictMatrix> power_matrix(const std::vector<Graph>& graphs,
                                        const std::vector<TesterConfig>& testers,
                                        std::optional<std::uint32_t> max_rounds = std::nullopt,
                                        unsigned jobs = 1);

}  // namespace bagwl
