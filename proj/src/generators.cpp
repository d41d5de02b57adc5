#include "bagwl/generators.hpp"

#include <algorithm>
#include <charconv>
#include <numeric>
#include <string>

#include "bagwl/rng.hpp"

namespace bagwl {

Graph csl(std::size_t n, std::size_t k) {
  if (n < 7) throw UsageError("csl: n must be >= 7, got " + std::to_string(n));
  if (k < 2 || k > n - 2) {
    throw UsageError("csl: skip k must lie in [2, n-2], got k=" + std::to_string(k) +
                     " for n=" + std::to_string(n));
  }
  std::vector<Edge> edges;
  edges.reserve(2 * n);
  for (std::size_t i = 0; i < n; ++i) {
    edges.push_back({static_cast<NodeId>(i), static_cast<NodeId>((i + 1) % n)});
    edges.push_back({static_cast<NodeId>(i), static_cast<NodeId>((i + k) % n)});
  }
  return Graph(n, std::move(edges));
}

namespace {

NodeId grid_node(int x, int y) {
  const int xm = ((x % 4) + 4) % 4;
  const int ym = ((y % 4) + 4) % 4;
  return static_cast<NodeId>(xm + 4 * (3 - ym));
}

}  // namespace

Graph rooks4() {
  std::vector<Edge> edges;
  for (int x = 0; x < 4; ++x) {
    for (int y = 0; y < 4; ++y) {
      for (int other = 0; other < 4; ++other) {
        if (other != x) edges.push_back({grid_node(x, y), grid_node(other, y)});
        if (other != y) edges.push_back({grid_node(x, y), grid_node(x, other)});
      }
    }
  }
  return Graph(16, std::move(edges));
}

Graph shrikhande() {
  std::vector<Edge> edges;
  for (int x = 0; x < 4; ++x) {
    for (int y = 0; y < 4; ++y) {
      for (int d : {-1, 1}) {
        edges.push_back({grid_node(x, y), grid_node(x, y + d)});
        edges.push_back({grid_node(x, y), grid_node(x + d, y)});
        edges.push_back({grid_node(x, y), grid_node(x + d, y - d)});
      }
    }
  }
  return Graph(16, std::move(edges));
}

Graph cycle(std::size_t n) {
  if (n < 3) throw UsageError("cycle: n must be >= 3, got " + std::to_string(n));
  const std::size_t sizes[] = {n};
  return disjoint_cycles(sizes);
}

Graph disjoint_cycles(std::span<const std::size_t> sizes) {
  if (sizes.empty()) throw UsageError("disjoint_cycles: no cycles given");
  std::vector<Edge> edges;
  std::size_t offset = 0;
  for (std::size_t len : sizes) {
    if (len < 3) throw UsageError("disjoint_cycles: cycle length must be >= 3");
    for (std::size_t i = 0; i < len; ++i) {
      edges.push_back({static_cast<NodeId>(offset + i),
                       static_cast<NodeId>(offset + (i + 1) % len)});
    }
    offset += len;
  }
  return Graph(offset, std::move(edges));
}

Graph path(std::size_t n) {
  if (n < 1) throw UsageError("path: n must be >= 1");
  std::vector<Edge> edges;
  for (std::size_t i = 0; i + 1 < n; ++i) {
    edges.push_back({static_cast<NodeId>(i), static_cast<NodeId>(i + 1)});
  }
  return Graph(n, std::move(edges));
}

Graph star(std::size_t leaves) {
  if (leaves < 1) throw UsageError("star: need at least one leaf");
  std::vector<Edge> edges;
  for (std::size_t i = 1; i <= leaves; ++i) edges.push_back({0, static_cast<NodeId>(i)});
  return Graph(leaves + 1, std::move(edges));
}

Graph complete(std::size_t n) {
  if (n < 1) throw UsageError("complete: n must be >= 1");
  std::vector<Edge> edges;
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      edges.push_back({static_cast<NodeId>(i), static_cast<NodeId>(j)});
    }
  }
  return Graph(n, std::move(edges));
}

Graph random_graph(std::size_t n, double p, std::uint64_t seed) {
  Rng rng(seed);
  std::vector<Edge> edges;
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      if (rng.unit() < p) edges.push_back({static_cast<NodeId>(i), static_cast<NodeId>(j)});
    }
  }
  return Graph(n, std::move(edges));
}

std::vector<NodeId> random_permutation(std::size_t n, std::uint64_t seed) {
  Rng rng(seed, 1);
  std::vector<NodeId> sigma(n);
  std::iota(sigma.begin(), sigma.end(), NodeId{0});
  for (std::size_t i = n; i > 1; --i) {
    std::swap(sigma[i - 1], sigma[rng.below(i)]);
  }
  return sigma;
}

std::optional<SrParams> sr_parameters(const Graph& g) {
  const std::size_t n = g.num_nodes();
  if (n < 2) throw UsageError("sr_parameters: need at least 2 nodes");
  SrParams params{n, degree(g, 0), 0, 0};
  for (NodeId v = 1; v < n; ++v) {
    if (degree(g, v) != params.k) return std::nullopt;
  }
  std::optional<std::size_t> lambda;
  std::optional<std::size_t> mu;
  for (NodeId u = 0; u < n; ++u) {
    for (NodeId v = u + 1; v < n; ++v) {
      const auto a = g.neighbors(u);
      const auto b = g.neighbors(v);
      std::vector<NodeId> common;
      std::set_intersection(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(common));
      auto& slot = g.has_edge(u, v) ? lambda : mu;
      if (!slot) {
        slot = common.size();
      } else if (*slot != common.size()) {
        return std::nullopt;
      }
    }
  }
  params.lambda = lambda.value_or(0);
  params.mu = mu.value_or(0);
  return params;
}

namespace {

std::vector<std::string_view> split(std::string_view s, char sep) {
  std::vector<std::string_view> out;
  std::size_t start = 0;
  while (true) {
    const auto pos = s.find(sep, start);
    out.push_back(s.substr(start, pos == std::string_view::npos ? pos : pos - start));
    if (pos == std::string_view::npos) break;
    start = pos + 1;
  }
  return out;
}

std::size_t to_size(std::string_view s) {
  std::size_t v = 0;
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc() || ptr != s.data() + s.size()) {
    throw UsageError("expected a non-negative integer, got '" + std::string(s) + "'");
  }
  return v;
}

void expect_params(std::string_view family, const std::vector<std::string_view>& parts,
                   std::size_t count) {
  if (parts.size() != count + 1) {
    throw UsageError("generator '" + std::string(family) + "' takes " + std::to_string(count) +
                     " parameter(s)");
  }
}

}  // namespace

Graph generate(std::string_view spec) {
  const auto parts = split(spec, ':');
  const std::string_view family = parts[0];
  if (family == "csl") {
    expect_params(family, parts, 2);
    return csl(to_size(parts[1]), to_size(parts[2]));
  }
  if (family == "rooks4" || family == "rook") {
    expect_params(family, parts, 0);
    return rooks4();
  }
  if (family == "shrikhande") {
    expect_params(family, parts, 0);
    return shrikhande();
  }
  if (family == "cycle") {
    expect_params(family, parts, 1);
    return cycle(to_size(parts[1]));
  }
  if (family == "2c3") {
    expect_params(family, parts, 0);
    const std::size_t sizes[] = {3, 3};
    return disjoint_cycles(sizes);
  }
  if (family == "cycles") {
    if (parts.size() < 2) throw UsageError("generator 'cycles' needs at least one size");
    std::vector<std::size_t> sizes;
    for (std::size_t i = 1; i < parts.size(); ++i) sizes.push_back(to_size(parts[i]));
    return disjoint_cycles(sizes);
  }
  if (family == "path") {
    expect_params(family, parts, 1);
    return path(to_size(parts[1]));
  }
  if (family == "star") {
    expect_params(family, parts, 1);
    return star(to_size(parts[1]));
  }
  if (family == "complete") {
    expect_params(family, parts, 1);
    return complete(to_size(parts[1]));
  }
  throw UsageError("unknown graph family '" + std::string(family) + "'");
}

}  // namespace bagwl
