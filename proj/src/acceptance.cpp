#include "bagwl/acceptance.hpp"

#include <algorithm>
#include <array>
#include <chrono>
#include <cmath>
#include <functional>
#include <map>
#include <mutex>
#include <sstream>

#include "bagwl/bag_wl.hpp"
#include "bagwl/generators.hpp"
#include "bagwl/iso.hpp"
#include "bagwl/parallel.hpp"
#include "bagwl/policy.hpp"
#include "bagwl/rng.hpp"
#include "bagwl/sampling.hpp"
#include "bagwl/wl.hpp"

namespace bagwl {
namespace {

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point start) {
  return std::chrono::duration<double>(Clock::now() - start).count();
}

struct Ctx {
  const AcceptanceOptions& options;
  std::vector<std::string> failures;
  std::vector<std::string> notes;
  std::string observed;
  std::string expected;

  void expect(bool ok, std::string what) {
    if (!ok) failures.push_back(std::move(what));
  }
};

Verdict run(const Graph& a, const Graph& b, std::string_view tester) {
  return run_tester(a, b, parse_tester(tester));
}

std::string describe(std::string_view tester, std::string_view pair, const Verdict& v) {
  std::string s(tester);
  s += " on ";
  s += pair;
  s += " -> ";
  s += to_string(v);
  return s;
}

std::string csl_name(std::size_t n, std::size_t k) {
  return "CSL(" + std::to_string(n) + "," + std::to_string(k) + ")";
}

std::string fixed(double x, int digits) {
  std::ostringstream os;
  os.setf(std::ios::fixed);
  os.precision(digits);
  os << x;
  return os.str();
}

// Least-squares slope of log(y) against log(x).
double fitted_exponent(const std::vector<double>& xs, const std::vector<double>& ys) {
  double mx = 0, my = 0;
  for (std::size_t i = 0; i < xs.size(); ++i) {
    mx += std::log(xs[i]);
    my += std::log(ys[i]);
  }
  mx /= static_cast<double>(xs.size());
  my /= static_cast<double>(xs.size());
  double num = 0, den = 0;
  for (std::size_t i = 0; i < xs.size(); ++i) {
    const double dx = std::log(xs[i]) - mx;
    num += dx * (std::log(ys[i]) - my);
    den += dx * dx;
  }
  return num / den;
}

Graph delete_edge(const Graph& g, Edge e) {
  std::vector<Edge> kept;
  for (const Edge& f : g.edges()) {
    if (f != e) kept.push_back(f);
  }
  return Graph(g.num_nodes(), std::move(kept), g.labels());
}

void csl_separation(Ctx& ctx) {
  const std::array<const char*, 6> testers{"ds:nd", "ds:ego:1", "ds:ego+:1",
                                           "dss:nd", "dss:ego:1", "dss:ego+:1"};
  std::size_t sep_ok = 0, sep_total = 0, wl_ok = 0, wl_total = 0;
  for (std::size_t n : {12u, 13u, 16u}) {
    const Graph base = csl(n, 2);
    for (std::size_t k = 3; k + 1 <= n / 2; ++k) {
      const Graph other = csl(n, k);
      for (const char* t : testers) {
        const Verdict v = run(base, other, t);
        ++sep_total;
        if (v.distinguished()) ++sep_ok;
        ctx.expect(v.distinguished(), describe(t, csl_name(n, 2) + "/" + csl_name(n, k), v));
      }
    }
    // Every 4-regular member of the family (k = n/2 collapses to 3-regular).
    std::vector<std::size_t> ks;
    for (std::size_t k = 2; k <= n - 2; ++k) {
      if (2 * k != n) ks.push_back(k);
    }
    for (std::size_t i = 0; i < ks.size(); ++i) {
      for (std::size_t j = i + 1; j < ks.size(); ++j) {
        const Verdict v = wl_test(csl(n, ks[i]), csl(n, ks[j]));
        ++wl_total;
        if (!v.distinguished()) ++wl_ok;
        ctx.expect(!v.distinguished(),
                   describe("wl", csl_name(n, ks[i]) + "/" + csl_name(n, ks[j]), v));
      }
    }
  }
  ctx.observed = std::to_string(sep_ok) + "/" + std::to_string(sep_total) +
                 " bag separations Distinguished, " + std::to_string(wl_ok) + "/" +
                 std::to_string(wl_total) + " wl pairs PossiblyIsomorphic";
  ctx.expected = "all bag separations Distinguished, all wl pairs PossiblyIsomorphic";
}

void ego_depth(Ctx& ctx) {
  const Graph a = csl(12, 3);
  const Graph b = csl(12, 5);
  std::string obs;
  for (int depth = 1; depth <= 3; ++depth) {
    const std::string t = "ds:ego:" + std::to_string(depth);
    const Verdict v = run(a, b, t);
    const bool want = depth == 2;
    ctx.expect(v.distinguished() == want, describe(t, "CSL(12,3)/CSL(12,5)", v));
    obs += (obs.empty() ? "" : ", ") + t + "=" + to_string(v);
  }
  ctx.observed = obs;
  ctx.expected = "ego:1 PossiblyIsomorphic, ego:2 Distinguished, ego:3 PossiblyIsomorphic";
}

void ed_cycles(Ctx& ctx) {
  const Graph c6 = cycle(6);
  const Graph two_c3 = generate("2c3");
  std::string obs;
  for (const char* t : {"dss:ed", "ds:ed"}) {
    const Verdict v = run(c6, two_c3, t);
    ctx.expect(v.distinguished() && v.round <= 2, describe(t, "C6/2C3", v));
    obs += std::string(t) + "=" + to_string(v) + ", ";
  }
  const Verdict w = wl_test(c6, two_c3);
  ctx.expect(!w.distinguished() && w.round <= 1, describe("wl", "C6/2C3", w));
  ctx.observed = obs + "wl=" + to_string(w);
  ctx.expected = "dss:ed, ds:ed Distinguished at round <= 2; wl PossiblyIsomorphic by round 1";
}

// Per-node colors of 1-WL on the graph minus nodes 0--1 (1-based nodes 1, 2),
// iterations 1..4 as letters; iteration i is round i-1 here.
constexpr std::array<const char*, 4> kRookTable{"aaaaaaaaaaaaaaaa", "bbcccccccccccccc",
                                                "ddeeffggffggffgg", "hhiijjkkjjkkjjkk"};
constexpr std::array<const char*, 4> kShrikhandeTable{"aaaaaaaaaaaaaaaa", "bbcccccccccccccc",
                                                      "ddfffefgggggefgf", "hhjjlmlnkkkkmlnl"};

std::vector<std::size_t> class_sizes(const std::vector<ColorId>& colors) {
  std::map<ColorId, std::size_t> counts;
  for (ColorId c : colors) ++counts[c];
  std::vector<std::size_t> out;
  for (auto [c, k] : counts) out.push_back(k);
  std::sort(out.begin(), out.end());
  return out;
}

std::string sizes_text(const std::vector<std::size_t>& s) {
  std::string out = "{";
  for (std::size_t i = 0; i < s.size(); ++i) out += (i ? "," : "") + std::to_string(s[i]);
  return out + "}";
}

void sr_trichotomy(Ctx& ctx) {
  const Graph rook = rooks4();
  const Graph shrik = shrikhande();
  const auto pr = sr_parameters(rook);
  const auto ps = sr_parameters(shrik);
  const SrParams want{16, 6, 2, 2};
  ctx.expect(pr && *pr == want, "rooks4 is not SR(16,6,2,2)");
  ctx.expect(ps && *ps == want, "shrikhande is not SR(16,6,2,2)");

  const PolicySpec ed = parse_policy("ed");
  const Bag rb = apply_policy(rook, ed);
  const Bag sb = apply_policy(shrik, ed);
  ctx.expect(rb.size() == 48 && sb.size() == 48, "edge-deleted bags do not hold 48 subgraphs");

  const Verdict nd = run(rook, shrik, "ds:nd");
  ctx.expect(!nd.distinguished(), describe("ds:nd", "rooks4/shrikhande", nd));
  const Verdict ego = run(rook, shrik, "ds:ego+:16");
  ctx.expect(!ego.distinguished(), describe("ds:ego+:16", "rooks4/shrikhande", ego));
  const Verdict edv = run_tester_on_bags(rb, sb, parse_tester("ds:ed"));
  ctx.expect(edv.distinguished() && edv.round == 3, describe("ds:ed", "rooks4/shrikhande", edv));

  // Per-subgraph 1-WL on the graphs minus edge 0--1, under one interner.
  ctx.expect(rook.has_edge(0, 1) && shrik.has_edge(0, 1), "edge 0--1 missing");
  ColorInterner interner;
  const ColoringHistory hr = wl_refine(delete_edge(rook, {0, 1}), 3, interner);
  const ColoringHistory hs = wl_refine(delete_edge(shrik, {0, 1}), 3, interner);
  ctx.expect(hr.rounds.size() >= 4 && hs.rounds.size() >= 4, "fewer than 4 WL rounds recorded");
  std::vector<std::size_t> r2, s2, r3, s3;
  if (hr.rounds.size() >= 4 && hs.rounds.size() >= 4) {
    r2 = class_sizes(hr.rounds[2]);
    s2 = class_sizes(hs.rounds[2]);
    r3 = class_sizes(hr.rounds[3]);
    s3 = class_sizes(hs.rounds[3]);
    // Sizes predicted from (n, k, lambda): 2, lambda, 2(k-1-lambda), n+lambda-2k.
    std::vector<std::size_t> predicted{2, want.lambda, 2 * (want.k - 1 - want.lambda),
                                       want.n + want.lambda - 2 * want.k};
    std::sort(predicted.begin(), predicted.end());
    ctx.expect(r2 == predicted, "rook round-2 class sizes " + sizes_text(r2));
    ctx.expect(s2 == predicted, "shrikhande round-2 class sizes " + sizes_text(s2));
    ctx.expect(r3 == std::vector<std::size_t>{2, 2, 6, 6}, "rook round-3 sizes " + sizes_text(r3));
    ctx.expect(s3 == std::vector<std::size_t>{2, 2, 2, 2, 4, 4},
               "shrikhande round-3 sizes " + sizes_text(s3));
    // Letter tables: a letter must name the same color in both graphs.
    for (std::size_t t = 0; t < 4; ++t) {
      std::map<char, ColorId> letter_to_color;
      std::map<ColorId, char> color_to_letter;
      bool ok = true;
      auto absorb = [&](const char* letters, const std::vector<ColorId>& colors) {
        for (std::size_t v = 0; v < 16; ++v) {
          auto [a, fresh_a] = letter_to_color.emplace(letters[v], colors[v]);
          auto [b, fresh_b] = color_to_letter.emplace(colors[v], letters[v]);
          ok = ok && a->second == colors[v] && b->second == letters[v];
        }
      };
      absorb(kRookTable[t], hr.rounds[t]);
      absorb(kShrikhandeTable[t], hs.rounds[t]);
      ctx.expect(ok, "node colors at iteration " + std::to_string(t + 1) +
                         " do not match the reference letter table");
    }
  }
  ctx.observed = "ds:nd=" + to_string(nd) + ", ds:ego+:16=" + to_string(ego) +
                 ", ds:ed=" + to_string(edv) + ", round-2 sizes " + sizes_text(r2) + "/" +
                 sizes_text(s2) + ", round-3 sizes " + sizes_text(r3) + " vs " + sizes_text(s3);
  ctx.expected =
      "nd, ego+:16 PossiblyIsomorphic; ed DISTINGUISHED@3 (fourth iteration); round-2 sizes "
      "{2,2,6,6} both; round-3 {2,2,6,6} vs {2,2,2,2,4,4}; letter tables matched";
}

void fwl2_base(Ctx& ctx) {
  const Graph rook = rooks4();
  const Graph shrik = shrikhande();
  const Verdict f = fwl2_test(rook, shrik);
  ctx.expect(!f.distinguished(), describe("fwl2", "rooks4/shrikhande", f));
  const Verdict ds = run(rook, shrik, "ds:ego+:1^:fwl2");
  ctx.expect(ds.distinguished(), describe("ds:ego+:1^:fwl2", "rooks4/shrikhande", ds));
  const Verdict c = fwl2_test(cycle(6), generate("2c3"));
  ctx.expect(c.distinguished(), describe("fwl2", "C6/2C3", c));
  const Verdict ds_wl = run(rook, shrik, "ds:ego+:1^");
  ctx.notes.push_back("ds:ego+:1^ (1-WL base) on rooks4/shrikhande -> " + to_string(ds_wl));
  ctx.observed = "fwl2 SR pair=" + to_string(f) + ", ds:ego+:1^:fwl2=" + to_string(ds) +
                 ", fwl2 C6/2C3=" + to_string(c);
  ctx.expected = "fwl2 SR pair PossiblyIsomorphic; ds:ego+:1^:fwl2 Distinguished; fwl2 C6/2C3 "
                 "Distinguished";
}

void se_separation(Ctx& ctx) {
  const Graph p = path(4);
  const Graph s = star(3);
  const Verdict ds = run(p, s, "ds:se");
  ctx.expect(!ds.distinguished(), describe("ds:se", "path(4)/star(3)", ds));
  const Verdict dss = run(p, s, "dss:se");
  ctx.expect(dss.distinguished() && dss.round == 1, describe("dss:se", "path(4)/star(3)", dss));
  for (const char* t : {"ds:se^", "dss:se^", "dss:se^:loo"}) {
    ctx.notes.push_back(std::string(t) + " on C6/2C3 -> " + to_string(run(cycle(6), generate("2c3"), t)));
  }
  ctx.observed = "ds:se=" + to_string(ds) + ", dss:se=" + to_string(dss);
  ctx.expected = "ds:se PossiblyIsomorphic, dss:se DISTINGUISHED@1";
}

void hierarchy(Ctx& ctx) {
  std::vector<Graph> graphs;
  std::vector<std::pair<std::size_t, std::size_t>> pairs;
  for (std::size_t n = 1; n <= 6; ++n) {
    const std::size_t first = graphs.size();
    for (Graph& g : enumerate_graphs(n)) graphs.push_back(std::move(g));
    for (std::size_t i = first; i < graphs.size(); ++i) {
      for (std::size_t j = i + 1; j < graphs.size(); ++j) pairs.emplace_back(i, j);
    }
  }
  const std::array<const char*, 3> policies{"nd", "ed", "ego:2"};
  // Column 0: wl; then per policy: dss:pi, ds:pi^, ds:pi.
  std::vector<TesterConfig> testers{parse_tester("wl")};
  for (const char* p : policies) {
    testers.push_back(parse_tester(std::string("dss:") + p));
    testers.push_back(parse_tester(std::string("ds:") + p + "^"));
    testers.push_back(parse_tester(std::string("ds:") + p));
  }
  std::vector<std::vector<char>> dist(pairs.size(), std::vector<char>(testers.size(), 0));
  parallel_for(pairs.size(), ctx.options.jobs, [&](std::size_t idx) {
    const auto [i, j] = pairs[idx];
    for (std::size_t t = 0; t < testers.size(); ++t) {
      dist[idx][t] = run_tester(graphs[i], graphs[j], testers[t]).distinguished();
    }
  });
  std::size_t violations = 0;
  std::vector<std::size_t> counts(testers.size(), 0);
  for (std::size_t idx = 0; idx < pairs.size(); ++idx) {
    const auto& row = dist[idx];
    for (std::size_t t = 0; t < testers.size(); ++t) counts[t] += row[t];
    for (std::size_t p = 0; p < policies.size(); ++p) {
      const bool dss = row[1 + 3 * p], ds_aug = row[2 + 3 * p], ds = row[3 + 3 * p];
      const auto pair_name = "graphs #" + std::to_string(pairs[idx].first) + "/#" +
                             std::to_string(pairs[idx].second) + " policy " + policies[p];
      if (row[0] && !dss) {
        ++violations;
        ctx.expect(false, "wl distinguishes but dss does not: " + pair_name);
      }
      if (row[0] && !ds_aug) {
        ++violations;
        ctx.expect(false, "wl distinguishes but augmented ds does not: " + pair_name);
      }
      if (ds && !dss) {
        ++violations;
        ctx.expect(false, "ds distinguishes but dss does not: " + pair_name);
      }
    }
  }
  std::string tally;
  for (std::size_t t = 0; t < testers.size(); ++t) {
    tally += (t ? ", " : "") + to_string(testers[t]) + "=" + std::to_string(counts[t]);
  }
  ctx.notes.push_back("distinguished pairs: " + tally);
  ctx.observed = std::to_string(graphs.size()) + " classes, " + std::to_string(pairs.size()) +
                 " same-size pairs, " + std::to_string(violations) + " violations";
  ctx.expected = "0 violations";
}

struct RandomCase {
  Graph g;
  std::vector<NodeId> sigma;
};

std::vector<RandomCase> random_cases(std::size_t count, std::size_t max_n, std::uint64_t seed) {
  const std::array<double, 4> densities{0.15, 0.3, 0.5, 0.8};
  Rng rng(seed, 0);
  std::vector<RandomCase> out;
  for (std::size_t i = 0; i < count; ++i) {
    const std::size_t n = 1 + rng.below(max_n);
    const Graph g = random_graph(n, densities[i % densities.size()], rng.next());
    out.push_back({g, random_permutation(n, rng.next())});
  }
  return out;
}

void soundness(Ctx& ctx) {
  const auto cases = random_cases(200, 10, ctx.options.seed);
  std::vector<TesterConfig> det{parse_tester("wl"), parse_tester("fwl2")};
  for (const char* p : {"nd", "ed", "ego:1", "ego:2", "ego+:1", "ego+:2", "se"}) {
    for (const char* aug : {"", "^"}) {
      const std::string pol = std::string(p) + aug;
      det.push_back(parse_tester("ds:" + pol));
      det.push_back(parse_tester("ds:" + pol + ":fwl2"));
      det.push_back(parse_tester("dss:" + pol));
      det.push_back(parse_tester("dss:" + pol + ":loo"));
    }
  }
  std::vector<TesterConfig> sampled;
  for (const char* p : {"nd", "ed", "ego:2", "ego+:2"}) {
    sampled.push_back(parse_tester(std::string("ds:") + p));
    sampled.push_back(parse_tester(std::string("dss:") + p));
  }
  const std::array<double, 3> ratios{0.05, 0.2, 0.5};

  std::mutex mu;
  std::size_t det_runs = 0;
  std::array<std::size_t, 3> false_dist{}, sampled_runs{};
  parallel_for(cases.size(), ctx.options.jobs, [&](std::size_t i) {
    const Graph& g = cases[i].g;
    const Graph h = apply_permutation(g, cases[i].sigma);
    std::vector<std::string> bad;
    for (const auto& t : det) {
      const Verdict v = run_tester(g, h, t);
      if (v.distinguished()) {
        bad.push_back(to_string(t) + " on case " + std::to_string(i) + " -> " + to_string(v));
      }
    }
    std::array<std::size_t, 3> fd{}, runs{};
    for (std::size_t r = 0; r < ratios.size(); ++r) {
      for (const auto& t : sampled) {
        const SampleConfig cfg{ratios[r], 5, ctx.options.seed + i};
        fd[r] += vote_test(g, h, t, cfg).verdict.distinguished();
        ++runs[r];
      }
    }
    std::lock_guard lock(mu);
    det_runs += det.size();
    for (auto& b : bad) ctx.expect(false, std::move(b));
    for (std::size_t r = 0; r < ratios.size(); ++r) {
      false_dist[r] += fd[r];
      sampled_runs[r] += runs[r];
    }
  });
  std::string rates;
  for (std::size_t r = 0; r < ratios.size(); ++r) {
    rates += (r ? ", " : "") + fixed(ratios[r], 2) + ": " + std::to_string(false_dist[r]) + "/" +
             std::to_string(sampled_runs[r]) + " (" +
             fixed(100.0 * static_cast<double>(false_dist[r]) /
                       static_cast<double>(sampled_runs[r]), 1) +
             "%)";
  }
  ctx.notes.push_back("sampled false-distinguish rate with 5 votes, by ratio: " + rates);
  ctx.observed = std::to_string(det_runs - ctx.failures.size()) + "/" + std::to_string(det_runs) +
                 " deterministic runs PossiblyIsomorphic (" + std::to_string(det.size()) +
                 " testers x 200 cases)";
  ctx.expected = "every deterministic run PossiblyIsomorphic";
}

void policy_invariance(Ctx& ctx) {
  const auto cases = random_cases(100, 12, ctx.options.seed + 1);
  Rng rng(ctx.options.seed, 9);
  std::size_t checks = 0;
  for (std::size_t i = 0; i < cases.size(); ++i) {
    const auto& [g, sigma] = cases[i];
    const Graph h = apply_permutation(g, sigma);
    const std::string k = std::to_string(1 + rng.below(3));
    for (const std::string& p : {std::string("nd"), std::string("ed"), "ego:" + k, "ego+:" + k,
                                 std::string("se")}) {
      for (const char* aug : {"", "^"}) {
        const PolicySpec spec = parse_policy(p + aug);
        const Bag direct = apply_policy(h, spec);
        const Bag moved = permute_bag(apply_policy(g, spec), sigma);
        ++checks;
        ctx.expect(bags_isomorphic(direct, moved),
                   "case " + std::to_string(i) + " policy " + to_string(spec));
      }
    }
  }
  ctx.observed = std::to_string(checks - ctx.failures.size()) + "/" + std::to_string(checks) +
                 " bag pairs isomorphic (5 policies plus augmented, 100 cases)";
  ctx.expected = "all isomorphic";
}

void csl_nd_homogeneity(Ctx& ctx) {
  std::string obs;
  for (std::size_t k : {2u, 3u}) {
    const Graph g = csl(8, k);
    for (const char* p : {"nd", "ego:1"}) {
      const Bag bag = apply_policy(g, parse_policy(p));
      std::size_t iso = 0, total = 0;
      for (std::size_t a = 0; a < bag.size(); ++a) {
        for (std::size_t b = a + 1; b < bag.size(); ++b) {
          ++total;
          const bool ok = are_isomorphic(bag.subgraph_graph(a), bag.subgraph_graph(b)).isomorphic;
          iso += ok;
          ctx.expect(ok, csl_name(8, k) + " " + p + " subgraphs " + std::to_string(a) + "/" +
                             std::to_string(b) + " not isomorphic");
        }
      }
      obs += (obs.empty() ? "" : ", ") + csl_name(8, k) + " " + p + " " + std::to_string(iso) +
             "/" + std::to_string(total);
    }
  }
  ctx.observed = obs + " pairs isomorphic";
  ctx.expected = "all pairs isomorphic";
}

// Smallest wall time of `fn` over repeated calls totalling at least 0.2 s.
double min_time(const std::function<Verdict()>& fn, Verdict& last) {
  double best = 1e300;
  double spent = 0;
  for (int rep = 0; rep < 3 || spent < 0.2; ++rep) {
    const auto start = Clock::now();
    last = fn();
    const double s = seconds_since(start);
    best = std::min(best, s);
    spent += s;
  }
  return best;
}

void complexity(Ctx& ctx) {
  const PolicySpec nd = parse_policy("nd");
  std::vector<double> ns, total, per_round, pair;
  std::string obs;
  for (std::size_t n : {16u, 32u, 64u}) {
    const Graph g = csl(n, 2);
    Verdict v;
    const double t = min_time([&] { return ds_wl_test(g, g, nd); }, v);
    ctx.expect(!v.distinguished(), describe("ds:nd", csl_name(n, 2) + " with itself", v));
    const Graph h = csl(n, 3);
    Verdict w;
    const double tp = min_time([&] { return ds_wl_test(g, h, nd); }, w);
    ns.push_back(static_cast<double>(n));
    total.push_back(t);
    per_round.push_back(t / std::max<std::uint32_t>(v.round, 1));
    pair.push_back(tp);
    obs += "n=" + std::to_string(n) + ": " + fixed(t * 1e3, 3) + " ms over " +
           std::to_string(v.round) + " rounds; ";
  }
  const double e_round = fitted_exponent(ns, per_round);
  const double e_total = fitted_exponent(ns, total);
  const double e_pair = fitted_exponent(ns, pair);
  ctx.expect(e_round < 3.0, "per-round exponent " + fixed(e_round, 2));
  ctx.notes.push_back("exponent of time to convergence on CSL(n,2) with itself: " +
                      fixed(e_total, 2) + " (round count grows with n)");
  ctx.notes.push_back("exponent of CSL(n,2)/CSL(n,3) separation time: " + fixed(e_pair, 2));
  ctx.observed = obs + "per-round exponent " + fixed(e_round, 2);
  ctx.expected = "per-round exponent < 3.0";
}

void csl41(Ctx& ctx) {
  const std::array<std::size_t, 10> ks{2, 3, 4, 5, 6, 9, 11, 12, 13, 16};
  std::vector<Graph> graphs;
  for (std::size_t k : ks) graphs.push_back(csl(41, k));
  const auto m = power_matrix(graphs, {parse_tester("dss:nd")}, std::nullopt, ctx.options.jobs);
  std::size_t dist = 0, total = 0;
  for (std::size_t i = 0; i < ks.size(); ++i) {
    for (std::size_t j = i + 1; j < ks.size(); ++j) {
      ++total;
      const Verdict& v = m[0].at(i, j);
      dist += v.distinguished();
      ctx.expect(v.distinguished(), describe("dss:nd", csl_name(41, ks[i]) + "/" + csl_name(41, ks[j]), v));
    }
  }
  const Graph a = csl(41, 9);
  const Graph b = csl(41, 12);
  std::string ego;
  for (int depth = 2; depth <= 4; ++depth) {
    const std::string t = "ds:ego:" + std::to_string(depth);
    const Verdict v = run(a, b, t);
    ctx.expect(v.distinguished() == (depth == 4), describe(t, "CSL(41,9)/CSL(41,12)", v));
    ego += ", " + t + "=" + to_string(v);
  }
  ctx.observed = "dss:nd " + std::to_string(dist) + "/" + std::to_string(total) +
                 " pairs Distinguished" + ego;
  ctx.expected = "dss:nd all 45 Distinguished; ego:2, ego:3 PossiblyIsomorphic; ego:4 Distinguished";
}

struct Criterion {
  const char* name;
  double limit_seconds;
  void (*fn)(Ctx&);
};

constexpr std::array<Criterion, kCriterionCount> kCriteria{{
    {"csl-separation", 10, csl_separation},
    {"ego-depth", 1, ego_depth},
    {"ed-cycles", 1, ed_cycles},
    {"sr-trichotomy", 30, sr_trichotomy},
    {"fwl2-base", 60, fwl2_base},
    {"se-dss-vs-ds", 1, se_separation},
    {"refinement-hierarchy", 300, hierarchy},
    {"isomorphism-soundness", 120, soundness},
    {"policy-invariance", 120, policy_invariance},
    {"csl-subgraph-homogeneity", 30, csl_nd_homogeneity},
    {"complexity", 120, complexity},
    {"csl41-matrix", 180, csl41},
}};

}  // namespace

CheckResult run_criterion(int id, const AcceptanceOptions& options) {
  if (id < 1 || id > kCriterionCount) {
    throw UsageError("criterion id must be in 1.." + std::to_string(kCriterionCount));
  }
  const Criterion& c = kCriteria[id - 1];
  CheckResult r;
  r.id = id;
  r.name = c.name;
  r.limit_seconds = c.limit_seconds;
  Ctx ctx{options, {}, {}, {}, {}};
  const auto start = Clock::now();
  try {
    c.fn(ctx);
  } catch (const std::exception& e) {
    ctx.failures.push_back(std::string("exception: ") + e.what());
  }
  r.seconds = seconds_since(start);
  if (r.seconds >= r.limit_seconds) {
    ctx.failures.push_back("time " + fixed(r.seconds, 2) + " s exceeds limit");
  }
  r.passed = ctx.failures.empty();
  r.observed = std::move(ctx.observed);
  r.expected = std::move(ctx.expected);
  r.failures = std::move(ctx.failures);
  r.notes = std::move(ctx.notes);
  return r;
}

std::vector<CheckResult> run_acceptance(const AcceptanceOptions& options,
                                        std::span<const int> ids) {
  std::vector<int> all;
  if (ids.empty()) {
    for (int i = 1; i <= kCriterionCount; ++i) all.push_back(i);
    ids = all;
  }
  std::vector<CheckResult> out;
  for (int id : ids) out.push_back(run_criterion(id, options));
  return out;
}

std::string format_result(const CheckResult& r) {
  std::string s = r.passed ? "PASS" : "FAIL";
  s += " [" + std::to_string(r.id) + "] " + r.name + ": observed " + r.observed + " | expected " +
       r.expected + " (" + fixed(r.seconds, 2) + " s, limit " + fixed(r.limit_seconds, 0) + " s)";
  return s;
}

}  // namespace bagwl
