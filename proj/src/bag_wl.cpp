#include "bagwl/bag_wl.hpp"

#include <algorithm>

#include "bagwl/parallel.hpp"
#include "bagwl/wl.hpp"
#include "refine_detail.hpp"

namespace bagwl {
namespace {

std::vector<ColorId> initial_subgraph_colors(const Bag& bag, std::size_t s,
                                             ColorInterner& interner, KeyBuilder& kb) {
  std::vector<ColorId> colors(bag.num_nodes);
  const auto root = bag.root(s);
  for (NodeId v = 0; v < bag.num_nodes; ++v) {
    colors[v] = detail::initial_node_color(interner, kb, bag.source_label(v), root && *root == v);
  }
  return colors;
}

ColorId subgraph_color(std::span<const ColorId> node_colors, ColorInterner& interner,
                       KeyBuilder& kb, std::vector<ColorId>& scratch) {
  scratch.assign(node_colors.begin(), node_colors.end());
  return interner.intern(kb.start(KeyKind::kSubgraph).add_multiset(scratch).key());
}

// All subgraphs of one bag, refined jointly (DSS-WL).
class DssBagState {
 public:
  DssBagState(const Bag& bag, ColorInterner& interner, KeyBuilder& kb, DssOptions options)
      : n_(bag.num_nodes),
        m_(bag.size()),
        options_(options),
        source_(bag.num_nodes, bag.source_edges),
        colors_(n_ * m_) {
    subgraphs_.reserve(m_);
    for (std::size_t s = 0; s < m_; ++s) {
      subgraphs_.emplace_back(n_, bag.subgraphs[s]);
      const auto init = initial_subgraph_colors(bag, s, interner, kb);
      std::copy(init.begin(), init.end(), colors_.begin() + s * n_);
    }
  }

  std::vector<ColorId> readout(ColorInterner& interner, KeyBuilder& kb) {
    std::vector<ColorId> out(m_);
    for (std::size_t s = 0; s < m_; ++s) out[s] = subgraph_color(row(s), interner, kb, scratch_);
    std::sort(out.begin(), out.end());
    return out;
  }

  void step(ColorInterner& interner, KeyBuilder& kb) {
    if (options_.exclude_own_subgraph) {
      step_leave_one_out(interner, kb);
      return;
    }
    compute_needles(interner, kb);
    // M_v: needle colors of v's neighbors in the source graph.
    std::vector<std::vector<ColorId>> m_terms(n_);
    for (NodeId v = 0; v < n_; ++v) {
      for (NodeId w : source_.neighbors(v)) m_terms[v].push_back(needle_[w]);
      std::sort(m_terms[v].begin(), m_terms[v].end());
    }
    next_.resize(colors_.size());
    for (std::size_t s = 0; s < m_; ++s) {
      const auto& adj = subgraphs_[s];
      for (NodeId v = 0; v < n_; ++v) {
        scratch_.clear();
        for (NodeId w : adj.neighbors(v)) scratch_.push_back(colors_[s * n_ + w]);
        kb.start(KeyKind::kDss).add(colors_[s * n_ + v]).add_multiset(scratch_);
        kb.add(needle_[v]).add_sorted(m_terms[v]);
        next_[s * n_ + v] = interner.intern(kb.key());
      }
    }
    colors_.swap(next_);
  }

  std::span<const ColorId> cells() const { return colors_; }

  void compute_needles(ColorInterner& interner, KeyBuilder& kb) {
    needle_.resize(n_);
    for (NodeId v = 0; v < n_; ++v) {
      scratch_.clear();
      for (std::size_t s = 0; s < m_; ++s) scratch_.push_back(colors_[s * n_ + v]);
      needle_[v] = interner.intern(kb.start(KeyKind::kNeedle).add_multiset(scratch_).key());
    }
  }

  BagColoring snapshot(std::uint32_t round, ColorInterner& interner, KeyBuilder& kb) {
    BagColoring bc;
    bc.num_nodes = n_;
    bc.round = round;
    for (std::size_t s = 0; s < m_; ++s) {
      bc.colors.emplace_back(row(s).begin(), row(s).end());
      bc.subgraph_colors.push_back(subgraph_color(row(s), interner, kb, scratch_));
    }
    compute_needles(interner, kb);
    bc.needle = needle_;
    return bc;
  }

 private:
  std::span<const ColorId> row(std::size_t s) const {
    return {colors_.data() + s * n_, n_};
  }

  void step_leave_one_out(ColorInterner& interner, KeyBuilder& kb) {
    // needle_loo[s*n+v] = {{ c_{v,R} : R != S }}
    std::vector<ColorId> needle_loo(colors_.size());
    std::vector<ColorId> full;
    for (NodeId v = 0; v < n_; ++v) {
      full.clear();
      for (std::size_t s = 0; s < m_; ++s) full.push_back(colors_[s * n_ + v]);
      std::sort(full.begin(), full.end());
      for (std::size_t s = 0; s < m_; ++s) {
        scratch_ = full;
        scratch_.erase(std::lower_bound(scratch_.begin(), scratch_.end(), colors_[s * n_ + v]));
        needle_loo[s * n_ + v] =
            interner.intern(kb.start(KeyKind::kNeedle).add_sorted(scratch_).key());
      }
    }
    next_.resize(colors_.size());
    std::vector<ColorId> m_term;
    for (std::size_t s = 0; s < m_; ++s) {
      const auto& adj = subgraphs_[s];
      for (NodeId v = 0; v < n_; ++v) {
        m_term.clear();
        for (NodeId w : source_.neighbors(v)) m_term.push_back(needle_loo[s * n_ + w]);
        scratch_.clear();
        for (NodeId w : adj.neighbors(v)) scratch_.push_back(colors_[s * n_ + w]);
        kb.start(KeyKind::kDss).add(colors_[s * n_ + v]).add_multiset(scratch_);
        kb.add(needle_loo[s * n_ + v]).add_multiset(m_term);
        next_[s * n_ + v] = interner.intern(kb.key());
      }
    }
    colors_.swap(next_);
  }

  std::size_t n_;
  std::size_t m_;
  DssOptions options_;
  detail::Csr source_;
  std::vector<detail::Csr> subgraphs_;
  std::vector<ColorId> colors_;
  std::vector<ColorId> next_;
  std::vector<ColorId> needle_;
  std::vector<ColorId> scratch_;
};

// Independent 1-WL per subgraph (DS-WL).
class DsWlBagState {
 public:
  DsWlBagState(const Bag& bag, ColorInterner& interner, KeyBuilder& kb) {
    subgraphs_.reserve(bag.size());
    for (std::size_t s = 0; s < bag.size(); ++s) {
      subgraphs_.emplace_back(detail::Csr(bag.num_nodes, bag.subgraphs[s]),
                              initial_subgraph_colors(bag, s, interner, kb));
    }
  }

  std::vector<ColorId> readout(ColorInterner& interner, KeyBuilder& kb) {
    std::vector<ColorId> out;
    out.reserve(subgraphs_.size());
    for (const auto& sub : subgraphs_) out.push_back(subgraph_color(sub.colors(), interner, kb, scratch_));
    std::sort(out.begin(), out.end());
    return out;
  }

  void step(ColorInterner& interner, KeyBuilder& kb) {
    for (auto& sub : subgraphs_) sub.step(interner, kb);
  }

  std::vector<ColorId> cells() const {
    std::vector<ColorId> all;
    for (const auto& sub : subgraphs_) all.insert(all.end(), sub.colors().begin(), sub.colors().end());
    return all;
  }

 private:
  std::vector<detail::WlCells> subgraphs_;
  std::vector<ColorId> scratch_;
};

// Independent folklore 2-WL per subgraph.
class DsFwl2BagState {
 public:
  DsFwl2BagState(const Bag& bag, ColorInterner& interner, KeyBuilder& kb) {
    subgraphs_.reserve(bag.size());
    std::vector<Label> labels(bag.num_nodes);
    for (std::size_t s = 0; s < bag.size(); ++s) {
      const auto root = bag.root(s);
      for (NodeId v = 0; v < bag.num_nodes; ++v) {
        labels[v] = 2 * bag.source_label(v) + ((root && *root == v) ? 1 : 0);
      }
      subgraphs_.emplace_back(bag.num_nodes, bag.subgraphs[s], labels, interner, kb);
    }
  }

  std::vector<ColorId> readout(ColorInterner& interner, KeyBuilder& kb) {
    std::vector<ColorId> out;
    out.reserve(subgraphs_.size());
    for (const auto& sub : subgraphs_) out.push_back(subgraph_color(sub.colors(), interner, kb, scratch_));
    std::sort(out.begin(), out.end());
    return out;
  }

  void step(ColorInterner& interner, KeyBuilder& kb) {
    for (auto& sub : subgraphs_) sub.step(interner, kb);
  }

  std::vector<ColorId> cells() const {
    std::vector<ColorId> all;
    for (const auto& sub : subgraphs_) all.insert(all.end(), sub.colors().begin(), sub.colors().end());
    return all;
  }

 private:
  std::vector<detail::Fwl2Cells> subgraphs_;
  std::vector<ColorId> scratch_;
};

// Upper bound on useful rounds: every non-final round splits at least one
// class of the joint partition, which has at most (cells of both bags) classes.
std::uint32_t default_bag_rounds(const Bag& b1, const Bag& b2, BaseRefiner base) {
  auto cells = [&](const Bag& b) {
    const std::size_t per = base == BaseRefiner::kFwl2 ? b.num_nodes * b.num_nodes : b.num_nodes;
    return b.size() * per;
  };
  return static_cast<std::uint32_t>(std::max<std::size_t>(cells(b1) + cells(b2), 1));
}

}  // namespace

BagColoring dss_refine(const Bag& bag, std::uint32_t rounds, ColorInterner& interner,
                       const DssOptions& options) {
  KeyBuilder kb;
  DssBagState state(bag, interner, kb, options);
  for (std::uint32_t t = 0; t < rounds; ++t) state.step(interner, kb);
  return state.snapshot(rounds, interner, kb);
}

std::vector<ColorId> needle_colors(const BagColoring& bc, NodeId v) {
  if (v >= bc.num_nodes) throw UsageError("needle_colors: node out of range");
  std::vector<ColorId> out;
  out.reserve(bc.colors.size());
  for (const auto& row : bc.colors) out.push_back(row[v]);
  std::sort(out.begin(), out.end());
  return out;
}

Verdict dss_wl_test_bags(const Bag& b1, const Bag& b2, std::optional<std::uint32_t> max_rounds,
                         const DssOptions& options, bool keep_trace) {
  if (b1.size() != b2.size()) return Verdict::distinguished_at(0);
  ColorInterner interner;
  KeyBuilder kb;
  DssBagState a(b1, interner, kb, options);
  DssBagState b(b2, interner, kb, options);
  const auto budget = max_rounds.value_or(default_bag_rounds(b1, b2, BaseRefiner::kWl1));
  return detail::drive_pair(a, b, interner, budget, keep_trace);
}

Verdict dss_wl_test(const Graph& g1, const Graph& g2, const PolicySpec& policy,
                    std::optional<std::uint32_t> max_rounds, const DssOptions& options,
                    bool keep_trace) {
  return dss_wl_test_bags(apply_policy(g1, policy), apply_policy(g2, policy), max_rounds,
                          options, keep_trace);
}

Verdict ds_wl_test_bags(const Bag& b1, const Bag& b2, BaseRefiner base,
                        std::optional<std::uint32_t> max_rounds, bool keep_trace) {
  if (b1.size() != b2.size()) return Verdict::distinguished_at(0);
  ColorInterner interner;
  KeyBuilder kb;
  const auto budget = max_rounds.value_or(default_bag_rounds(b1, b2, base));
  if (base == BaseRefiner::kFwl2) {
    DsFwl2BagState a(b1, interner, kb);
    DsFwl2BagState b(b2, interner, kb);
    return detail::drive_pair(a, b, interner, budget, keep_trace);
  }
  DsWlBagState a(b1, interner, kb);
  DsWlBagState b(b2, interner, kb);
  return detail::drive_pair(a, b, interner, budget, keep_trace);
}

Verdict ds_wl_test(const Graph& g1, const Graph& g2, const PolicySpec& policy, BaseRefiner base,
                   std::optional<std::uint32_t> max_rounds, bool keep_trace) {
  return ds_wl_test_bags(apply_policy(g1, policy), apply_policy(g2, policy), base, max_rounds,
                         keep_trace);
}

TesterConfig parse_tester(std::string_view text) {
  TesterConfig cfg;
  if (text == "wl") return cfg;
  if (text == "fwl2") {
    cfg.kind = TesterConfig::Kind::kFwl2;
    return cfg;
  }
  std::string_view rest;
  if (text.starts_with("dss:")) {
    cfg.kind = TesterConfig::Kind::kDss;
    rest = text.substr(4);
    if (rest.ends_with(":loo")) {
      cfg.dss.exclude_own_subgraph = true;
      rest.remove_suffix(4);
    }
  } else if (text.starts_with("ds:")) {
    cfg.kind = TesterConfig::Kind::kDs;
    rest = text.substr(3);
    if (rest.ends_with(":fwl2")) {
      cfg.base = BaseRefiner::kFwl2;
      rest.remove_suffix(5);
    } else if (rest.ends_with(":wl")) {
      rest.remove_suffix(3);
    }
  } else {
    throw UsageError("unknown tester '" + std::string(text) +
                     "' (expected wl, fwl2, ds:<policy>[:fwl2] or dss:<policy>)");
  }
  cfg.policy = parse_policy(rest);
  return cfg;
}

std::string to_string(const TesterConfig& cfg) {
  switch (cfg.kind) {
    case TesterConfig::Kind::kWl: return "wl";
    case TesterConfig::Kind::kFwl2: return "fwl2";
    case TesterConfig::Kind::kDs:
      return "ds:" + to_string(cfg.policy) + (cfg.base == BaseRefiner::kFwl2 ? ":fwl2" : "");
    case TesterConfig::Kind::kDss:
      return "dss:" + to_string(cfg.policy) + (cfg.dss.exclude_own_subgraph ? ":loo" : "");
  }
  return {};
}

Verdict run_tester(const Graph& g1, const Graph& g2, const TesterConfig& cfg,
                   std::optional<std::uint32_t> max_rounds, bool keep_trace) {
  switch (cfg.kind) {
    case TesterConfig::Kind::kWl: return wl_test(g1, g2, max_rounds, keep_trace);
    case TesterConfig::Kind::kFwl2: return fwl2_test(g1, g2, max_rounds, keep_trace);
    case TesterConfig::Kind::kDs:
      return ds_wl_test(g1, g2, cfg.policy, cfg.base, max_rounds, keep_trace);
    case TesterConfig::Kind::kDss:
      return dss_wl_test(g1, g2, cfg.policy, max_rounds, cfg.dss, keep_trace);
  }
  throw UsageError("unhandled tester kind");
}

Verdict run_tester_on_bags(const Bag& b1, const Bag& b2, const TesterConfig& cfg,
                           std::optional<std::uint32_t> max_rounds, bool keep_trace) {
  switch (cfg.kind) {
    case TesterConfig::Kind::kDs: return ds_wl_test_bags(b1, b2, cfg.base, max_rounds, keep_trace);
    case TesterConfig::Kind::kDss:
      return dss_wl_test_bags(b1, b2, max_rounds, cfg.dss, keep_trace);
    default: throw UsageError("tester '" + to_string(cfg) + "' does not operate on bags");
  }
}

std::vector<VerdictMatrix> power_matrix(const std::vector<Graph>& graphs,
                                        const std::vector<TesterConfig>& testers,
                                        std::optional<std::uint32_t> max_rounds, unsigned jobs) {
  if (graphs.size() < 2) throw UsageError("power_matrix needs at least two graphs");
  const std::size_t n = graphs.size();
  std::vector<VerdictMatrix> out;
  for (const auto& t : testers) out.push_back({t, n, std::vector<Verdict>(n * n)});

  struct Task {
    std::size_t tester, i, j;
  };
  std::vector<Task> tasks;
  for (std::size_t t = 0; t < testers.size(); ++t) {
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = i; j < n; ++j) tasks.push_back({t, i, j});
    }
  }
  parallel_for(tasks.size(), jobs, [&](std::size_t k) {
    const Task& task = tasks[k];
    Verdict v = run_tester(graphs[task.i], graphs[task.j], testers[task.tester], max_rounds);
    auto& m = out[task.tester];
    m.cells[task.j * n + task.i] = v;
    m.cells[task.i * n + task.j] = std::move(v);
  });
  return out;
}

}  // namespace bagwl
