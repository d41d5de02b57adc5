#include "bagwl/wl.hpp"

#include <algorithm>

#include "refine_detail.hpp"

namespace bagwl {

std::string to_string(const Verdict& v) {
  return std::string(v.distinguished() ? "DISTINGUISHED@" : "POSSIBLY_ISOMORPHIC@") +
         std::to_string(v.round);
}

namespace {

std::vector<ColorId> initial_colors(const Graph& g, ColorInterner& interner, KeyBuilder& kb) {
  std::vector<ColorId> colors(g.num_nodes());
  for (NodeId v = 0; v < g.num_nodes(); ++v) {
    colors[v] = detail::initial_node_color(interner, kb, g.label(v), false);
  }
  return colors;
}

std::uint32_t default_wl_rounds(std::size_t n) {
  return static_cast<std::uint32_t>(std::max<std::size_t>(n, 1));
}

std::uint32_t default_fwl_rounds(std::size_t n) {
  return static_cast<std::uint32_t>(std::max<std::size_t>(n * n, 1));
}

std::vector<Label> labels_of(const Graph& g) {
  std::vector<Label> out(g.num_nodes());
  for (NodeId v = 0; v < g.num_nodes(); ++v) out[v] = g.label(v);
  return out;
}

class WlGraphState {
 public:
  WlGraphState(const Graph& g, ColorInterner& interner, KeyBuilder& kb)
      : cells_(detail::Csr(g.num_nodes(), g.edges()), initial_colors(g, interner, kb)) {}

  std::vector<ColorId> readout(ColorInterner&, KeyBuilder&) const {
    return sorted_multiset(cells_.colors());
  }
  void step(ColorInterner& interner, KeyBuilder& kb) { cells_.step(interner, kb); }
  std::span<const ColorId> cells() const { return cells_.colors(); }

 private:
  detail::WlCells cells_;
};

class Fwl2GraphState {
 public:
  Fwl2GraphState(const Graph& g, ColorInterner& interner, KeyBuilder& kb)
      : cells_(g.num_nodes(), g.edges(), labels_of(g), interner, kb) {}

  std::vector<ColorId> readout(ColorInterner&, KeyBuilder&) const {
    return sorted_multiset(cells_.colors());
  }
  void step(ColorInterner& interner, KeyBuilder& kb) { cells_.step(interner, kb); }
  std::span<const ColorId> cells() const { return cells_.colors(); }
  const detail::Fwl2Cells& raw() const { return cells_; }

 private:
  detail::Fwl2Cells cells_;
};

}  // namespace

ColoringHistory wl_refine(const Graph& g, std::optional<std::uint32_t> max_rounds,
                          ColorInterner& interner) {
  const std::uint32_t budget = max_rounds.value_or(default_wl_rounds(g.num_nodes()));
  if (budget < 1) throw UsageError("wl_refine: max_rounds must be >= 1");
  KeyBuilder kb;
  detail::WlCells cells(detail::Csr(g.num_nodes(), g.edges()), initial_colors(g, interner, kb));

  ColoringHistory h;
  auto record = [&] {
    h.rounds.emplace_back(cells.colors().begin(), cells.colors().end());
    h.fingerprint_per_round.push_back(sorted_multiset(cells.colors()));
  };
  record();
  std::uint32_t classes = count_distinct(cells.colors());
  for (std::uint32_t t = 1; t <= budget; ++t) {
    cells.step(interner, kb);
    record();
    const std::uint32_t now = count_distinct(cells.colors());
    if (now == classes) {
      h.converged_at = t;
      h.converged = true;
      return h;
    }
    classes = now;
  }
  h.converged_at = budget;
  return h;
}

ColoringHistory wl_refine(const Graph& g, std::optional<std::uint32_t> max_rounds) {
  ColorInterner interner;
  return wl_refine(g, max_rounds, interner);
}

Verdict wl_test(const Graph& g1, const Graph& g2, std::optional<std::uint32_t> max_rounds,
                bool keep_trace) {
  ColorInterner interner;
  KeyBuilder kb;
  WlGraphState a(g1, interner, kb);
  WlGraphState b(g2, interner, kb);
  const auto budget =
      max_rounds.value_or(default_wl_rounds(std::max(g1.num_nodes(), g2.num_nodes())));
  return detail::drive_pair(a, b, interner, budget, keep_trace);
}

Fwl2Result fwl2_refine(const Graph& g, std::optional<std::uint32_t> max_rounds,
                       ColorInterner& interner) {
  const std::uint32_t budget = max_rounds.value_or(default_fwl_rounds(g.num_nodes()));
  if (budget < 1) throw UsageError("fwl2_refine: max_rounds must be >= 1");
  if (g.num_nodes() < 1) throw UsageError("fwl2_refine: graph must have at least one node");
  KeyBuilder kb;
  Fwl2GraphState state(g, interner, kb);
  Fwl2Result out;
  std::uint32_t classes = count_distinct(state.cells());
  std::uint32_t t = 1;
  for (; t <= budget; ++t) {
    state.step(interner, kb);
    const std::uint32_t now = count_distinct(state.cells());
    if (now == classes) {
      out.converged = true;
      break;
    }
    classes = now;
  }
  out.converged_at = std::min(t, budget);
  out.coloring.num_nodes = g.num_nodes();
  out.coloring.colors.assign(state.cells().begin(), state.cells().end());
  out.coloring.round = out.converged_at;
  out.fingerprint = sorted_multiset(state.cells());
  return out;
}

Fwl2Result fwl2_refine(const Graph& g, std::optional<std::uint32_t> max_rounds) {
  ColorInterner interner;
  return fwl2_refine(g, max_rounds, interner);
}

Verdict fwl2_test(const Graph& g1, const Graph& g2, std::optional<std::uint32_t> max_rounds,
                  bool keep_trace) {
  ColorInterner interner;
  KeyBuilder kb;
  Fwl2GraphState a(g1, interner, kb);
  Fwl2GraphState b(g2, interner, kb);
  const std::size_t n = std::max(g1.num_nodes(), g2.num_nodes());
  return detail::drive_pair(a, b, interner, max_rounds.value_or(default_fwl_rounds(n)),
                            keep_trace);
}

}  // namespace bagwl
