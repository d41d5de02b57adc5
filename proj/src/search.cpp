#include "bagwl/search.hpp"

#include "bagwl/iso.hpp"
#include "bagwl/parallel.hpp"

namespace bagwl {

SearchResult find_separations(std::size_t n, const TesterConfig& a, const TesterConfig& b,
                              std::optional<std::uint32_t> max_rounds, unsigned jobs) {
  SearchResult out;
  out.classes = enumerate_graphs(n);
  const std::size_t m = out.classes.size();
  std::vector<std::pair<std::size_t, std::size_t>> all;
  for (std::size_t i = 0; i < m; ++i) {
    for (std::size_t j = i + 1; j < m; ++j) all.emplace_back(i, j);
  }
  std::vector<char> hit(all.size(), 0);
  parallel_for(all.size(), jobs, [&](std::size_t k) {
    const Graph& g = out.classes[all[k].first];
    const Graph& h = out.classes[all[k].second];
    hit[k] = run_tester(g, h, a, max_rounds).distinguished() &&
             !run_tester(g, h, b, max_rounds).distinguished();
  });
  for (std::size_t k = 0; k < all.size(); ++k) {
    if (hit[k]) out.pairs.push_back(all[k]);
  }
  return out;
}

}  // namespace bagwl
