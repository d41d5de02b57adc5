#include "bagwl/sampling.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

#include "bagwl/rng.hpp"

namespace bagwl {

void SampleConfig::validate() const {
  if (!(ratio > 0.0 && ratio <= 1.0)) {
    throw UsageError("sample ratio must lie in (0, 1], got " + std::to_string(ratio));
  }
  if (votes < 1 || votes % 2 == 0) {
    throw UsageError("votes must be odd and >= 1, got " + std::to_string(votes));
  }
}

std::size_t sample_size(std::size_t m, double ratio) {
  const auto rounded = static_cast<std::size_t>(std::llround(ratio * static_cast<double>(m)));
  return std::clamp<std::size_t>(rounded, 1, std::max<std::size_t>(m, 1));
}

std::vector<std::size_t> sample_indices(std::size_t m, const SampleConfig& cfg,
                                        std::uint64_t draw_index) {
  cfg.validate();
  if (m == 0) throw UsageError("cannot sample from an empty bag");
  const std::size_t k = sample_size(m, cfg.ratio);
  std::vector<std::size_t> idx(m);
  std::iota(idx.begin(), idx.end(), std::size_t{0});
  if (k == m) return idx;
  Rng rng(cfg.seed, draw_index);
  // Partial Fisher-Yates: the first k slots end up a uniform k-subset.
  for (std::size_t i = 0; i < k; ++i) {
    std::swap(idx[i], idx[i + rng.below(m - i)]);
  }
  idx.resize(k);
  std::sort(idx.begin(), idx.end());
  return idx;
}

Bag sample_bag(const Bag& b, const SampleConfig& cfg, std::uint64_t draw_index) {
  return select_subgraphs(b, sample_indices(b.size(), cfg, draw_index));
}

VoteResult vote_test_bags(const Bag& b1, const Bag& b2, const TesterConfig& tester,
                          const SampleConfig& cfg, std::optional<std::uint32_t> max_rounds) {
  cfg.validate();
  VoteResult out;
  for (std::uint32_t d = 0; d < cfg.votes; ++d) {
    // Empty bags have nothing to sample; they are compared as they are.
    const Bag s1 = b1.size() == 0 ? b1 : sample_bag(b1, cfg, d);
    const Bag s2 = b2.size() == 0 ? b2 : sample_bag(b2, cfg, d);
    Verdict v = run_tester_on_bags(s1, s2, tester, max_rounds);
    if (v.distinguished()) {
      ++out.distinguished_votes;
    } else {
      ++out.possibly_isomorphic_votes;
    }
    out.draws.push_back(std::move(v));
  }
  const bool distinguished = out.distinguished_votes > out.possibly_isomorphic_votes;
  std::optional<std::uint32_t> round;
  bool converged = true;
  for (const Verdict& v : out.draws) {
    if (v.distinguished() != distinguished) continue;
    if (!round) {
      round = v.round;
    } else {
      round = distinguished ? std::min(*round, v.round) : std::max(*round, v.round);
    }
    converged = converged && v.converged;
  }
  out.verdict = distinguished ? Verdict::distinguished_at(*round)
                              : Verdict::possibly_isomorphic(*round, converged);
  return out;
}

VoteResult vote_test(const Graph& g1, const Graph& g2, const TesterConfig& tester,
                     const SampleConfig& cfg, std::optional<std::uint32_t> max_rounds) {
  return vote_test_bags(apply_policy(g1, tester.policy), apply_policy(g2, tester.policy), tester,
                        cfg, max_rounds);
}

}  // namespace bagwl
