#pragma once

// Refinement building blocks shared by the 1-WL, 2-FWL and bag engines.

#include <algorithm>
#include <cstdint>
#include <span>
#include <vector>

#include "bagwl/graph.hpp"
#include "bagwl/interner.hpp"
#include "bagwl/verdict.hpp"

namespace bagwl::detail {

struct Csr {
  std::vector<std::uint32_t> offsets;
  std::vector<NodeId> targets;

  Csr() = default;
  Csr(std::size_t n, std::span<const Edge> edges) : offsets(n + 1, 0) {
    for (const Edge& e : edges) {
      ++offsets[e.u + 1];
      ++offsets[e.v + 1];
    }
    for (std::size_t i = 0; i < n; ++i) offsets[i + 1] += offsets[i];
    targets.resize(offsets[n]);
    std::vector<std::uint32_t> fill(offsets.begin(), offsets.end() - 1);
    for (const Edge& e : edges) {
      targets[fill[e.u]++] = e.v;
      targets[fill[e.v]++] = e.u;
    }
  }

  std::size_t num_nodes() const { return offsets.empty() ? 0 : offsets.size() - 1; }
  std::span<const NodeId> neighbors(NodeId v) const {
    return {targets.data() + offsets[v], targets.data() + offsets[v + 1]};
  }
};

inline ColorId initial_node_color(ColorInterner& interner, KeyBuilder& kb, Label label,
                                  bool is_root) {
  return interner.intern(kb.start(KeyKind::kNodeInit).add(label).add(is_root ? 1 : 0).key());
}

/// 1-WL cells of one graph.
class WlCells {
 public:
  WlCells(Csr adjacency, std::vector<ColorId> initial)
      : adj_(std::move(adjacency)), colors_(std::move(initial)) {}

  void step(ColorInterner& interner, KeyBuilder& kb) {
    next_.resize(colors_.size());
    for (NodeId v = 0; v < colors_.size(); ++v) {
      scratch_.clear();
      for (NodeId w : adj_.neighbors(v)) scratch_.push_back(colors_[w]);
      next_[v] = interner.intern(kb.start(KeyKind::kWl).add(colors_[v]).add_multiset(scratch_).key());
    }
    colors_.swap(next_);
  }

  std::span<const ColorId> colors() const { return colors_; }

 private:
  Csr adj_;
  std::vector<ColorId> colors_;
  std::vector<ColorId> next_;
  std::vector<ColorId> scratch_;
};

/// Folklore 2-WL cells of one graph (n*n ordered pairs).
class Fwl2Cells {
 public:
  Fwl2Cells(std::size_t n, std::span<const Edge> edges, std::span<const Label> node_labels,
            ColorInterner& interner, KeyBuilder& kb)
      : n_(n), colors_(n * n) {
    std::vector<std::uint8_t> adj(n * n, 0);
    for (const Edge& e : edges) {
      adj[e.u * n + e.v] = 1;
      adj[e.v * n + e.u] = 1;
    }
    for (std::size_t u = 0; u < n; ++u) {
      for (std::size_t v = 0; v < n; ++v) {
        colors_[u * n + v] = interner.intern(kb.start(KeyKind::kPairInit)
                                                 .add(node_labels[u])
                                                 .add(node_labels[v])
                                                 .add(adj[u * n + v])
                                                 .add(u == v ? 1 : 0)
                                                 .key());
      }
    }
  }

  void step(ColorInterner& interner, KeyBuilder& kb) {
    next_.resize(colors_.size());
    pairs_.resize(n_);
    for (std::size_t u = 0; u < n_; ++u) {
      for (std::size_t v = 0; v < n_; ++v) {
        for (std::size_t w = 0; w < n_; ++w) {
          pairs_[w] = (std::uint64_t{colors_[u * n_ + w]} << 32) | colors_[w * n_ + v];
        }
        std::sort(pairs_.begin(), pairs_.end());
        kb.start(KeyKind::kFwl).add(colors_[u * n_ + v]).add(static_cast<std::uint32_t>(n_));
        for (std::uint64_t p : pairs_) {
          kb.add(static_cast<std::uint32_t>(p >> 32)).add(static_cast<std::uint32_t>(p));
        }
        next_[u * n_ + v] = interner.intern(kb.key());
      }
    }
    colors_.swap(next_);
  }

  std::size_t num_nodes() const { return n_; }
  std::span<const ColorId> colors() const { return colors_; }

 private:
  std::size_t n_;
  std::vector<ColorId> colors_;
  std::vector<ColorId> next_;
  std::vector<std::uint64_t> pairs_;
};

inline std::uint32_t joint_distinct(std::span<const ColorId> a, std::span<const ColorId> b) {
  std::vector<ColorId> all;
  all.reserve(a.size() + b.size());
  all.insert(all.end(), a.begin(), a.end());
  all.insert(all.end(), b.begin(), b.end());
  return count_distinct(all);
}

// State requirements:
//   std::vector<ColorId> readout(ColorInterner&, KeyBuilder&)   sorted representation
//   void step(ColorInterner&, KeyBuilder&)                       one refinement round
//   std::vector<ColorId> cells() const                           all current cell colors
//
// Runs both states in lock-step under one interner. Stops at the first round
// whose representations differ, or when the joint partition over every cell
// of both inputs stops splitting.
template <class State>
Verdict drive_pair(State& a, State& b, ColorInterner& interner, std::uint32_t max_rounds,
                   bool keep_trace) {
  KeyBuilder kb;
  std::vector<RoundFingerprint> trace;
  auto compare = [&](std::uint32_t t) {
    auto fa = a.readout(interner, kb);
    auto fb = b.readout(interner, kb);
    const bool differ = fa != fb;
    if (keep_trace) trace.push_back({t, std::move(fa), std::move(fb)});
    return differ;
  };
  auto finish = [&](Verdict v) {
    v.trace = std::move(trace);
    return v;
  };

  if (compare(0)) return finish(Verdict::distinguished_at(0));
  std::uint32_t classes = joint_distinct(a.cells(), b.cells());
  if (a.cells().empty() && b.cells().empty()) return finish(Verdict::possibly_isomorphic(0));

  for (std::uint32_t t = 1; t <= max_rounds; ++t) {
    a.step(interner, kb);
    b.step(interner, kb);
    if (compare(t)) return finish(Verdict::distinguished_at(t));
    const std::uint32_t now = joint_distinct(a.cells(), b.cells());
    if (now == classes) return finish(Verdict::possibly_isomorphic(t));
    classes = now;
  }
  return finish(Verdict::possibly_isomorphic(max_rounds, false));
}

}  // namespace bagwl::detail
