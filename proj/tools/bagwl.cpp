// bagwl: graph generation, pairwise WL-style tests, verdict matrices,
// counterexample search, trace export and the reproduction suite.
//
// Exit codes: 0 ok (the verdict is payload), 1 usage, 2 parse error,
// 3 reproduction check failed.

#include <chrono>
#include <cstdlib>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "bagwl/acceptance.hpp"
#include "bagwl/bag_wl.hpp"
#include "bagwl/generators.hpp"
#include "bagwl/graph.hpp"
#include "bagwl/iso.hpp"
#include "bagwl/report.hpp"
#include "bagwl/sampling.hpp"
#include "bagwl/search.hpp"
#include "bagwl/wl.hpp"

namespace {

using namespace bagwl;

constexpr int kExitUsage = 1;
constexpr int kExitParse = 2;
constexpr int kExitReproduce = 3;

Graph load_graph(const std::string& arg) {
  if (arg.rfind("gen:", 0) == 0) return generate(std::string_view(arg).substr(4));
  return read_edge_list_file(arg);
}

// "gen:csl:16:2,3,5" -> gen:csl:16:2, gen:csl:16:3, gen:csl:16:5
std::vector<std::string> expand_family(const std::string& spec) {
  const auto colon = spec.rfind(':');
  const std::string head = colon == std::string::npos ? "" : spec.substr(0, colon + 1);
  std::string tail = colon == std::string::npos ? spec : spec.substr(colon + 1);
  std::vector<std::string> out;
  std::stringstream ss(tail);
  for (std::string item; std::getline(ss, item, ',');) {
    if (item.empty()) throw UsageError("empty entry in family '" + spec + "'");
    out.push_back(head + item);
  }
  return out;
}

std::vector<std::string> read_list_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open '" + path + "'");
  std::vector<std::string> out;
  for (std::string line; std::getline(in, line);) {
    const auto first = line.find_first_not_of(" \t\r");
    if (first == std::string::npos || line[first] == '#') continue;
    const auto last = line.find_last_not_of(" \t\r");
    out.push_back(line.substr(first, last - first + 1));
  }
  return out;
}

std::vector<TesterConfig> parse_testers(const std::vector<std::string>& items) {
  std::vector<TesterConfig> out;
  for (const auto& item : items) {
    std::stringstream ss(item);
    for (std::string t; std::getline(ss, t, ',');) out.push_back(parse_tester(t));
  }
  if (out.empty()) throw UsageError("no tester given");
  return out;
}

void write_json(const nlohmann::ordered_json& j, const std::string& path) {
  if (path.empty() || path == "-") {
    std::cout << j.dump(2) << "\n";
    return;
  }
  std::ofstream out(path);
  if (!out) throw UsageError("cannot write '" + path + "'");
  out << j.dump(2) << "\n";
}

std::string short_verdict(const Verdict& v) {
  return (v.distinguished() ? "D@" : "PI@") + std::to_string(v.round);
}

unsigned default_jobs() { return std::max(1u, std::thread::hardware_concurrency()); }

struct CommonOptions {
  std::optional<std::uint32_t> max_rounds;
  unsigned jobs = default_jobs();
};

void add_common(CLI::App* cmd, CommonOptions& o) {
  cmd->add_option("--max-rounds", o.max_rounds, "refinement round budget");
  cmd->add_option("--jobs", o.jobs, "worker threads")->check(CLI::PositiveNumber);
}

struct TestArgs {
  std::string g1, g2;
  std::string tester = "wl";
  bool json = false;
  std::string trace;
  std::optional<double> sample;
  std::uint32_t votes = 1;
  std::uint64_t seed = 0;
};

int cmd_test(const TestArgs& a, const CommonOptions& common) {
  const TesterConfig tester = parse_tester(a.tester);
  const Graph g1 = load_graph(a.g1);
  const Graph g2 = load_graph(a.g2);
  const auto start = std::chrono::steady_clock::now();
  Verdict verdict;
  std::optional<VoteTally> tally;
  if (a.sample) {
    if (!tester.uses_bags()) throw UsageError("--sample needs a ds: or dss: tester");
    if (!a.trace.empty()) throw UsageError("--trace cannot be combined with --sample");
    const SampleConfig cfg{*a.sample, a.votes, a.seed};
    VoteResult vr = vote_test(g1, g2, tester, cfg, common.max_rounds);
    verdict = std::move(vr.verdict);
    tally = VoteTally{vr.distinguished_votes, vr.possibly_isomorphic_votes};
  } else {
    verdict = run_tester(g1, g2, tester, common.max_rounds, !a.trace.empty());
  }
  const double ms =
      std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
  RunReport report = make_report(to_string(tester), {a.g1, a.g2}, verdict, ms);
  report.votes = tally;
  if (!a.trace.empty()) {
    write_json(trace_to_json(to_string(tester), verdict), a.trace);
    report.trace_path = a.trace;
  }
  if (a.json) {
    std::cout << to_json(report).dump(2) << "\n";
  } else {
    std::cout << to_string(verdict) << "\n";
    if (!verdict.converged) std::cerr << "round budget exhausted before convergence\n";
    if (tally) {
      std::cerr << "votes: " << tally->distinguished << " distinguished, "
                << tally->possibly_isomorphic << " possibly isomorphic\n";
    }
  }
  return 0;
}

struct MatrixArgs {
  std::vector<std::string> graphs;
  std::string list;
  std::string family;
  std::vector<std::string> testers{"wl"};
  bool json = false;
};

int cmd_matrix(const MatrixArgs& a, const CommonOptions& common) {
  std::vector<std::string> names = a.graphs;
  if (!a.list.empty()) {
    for (auto& s : read_list_file(a.list)) names.push_back(std::move(s));
  }
  if (!a.family.empty()) {
    const std::string spec = a.family.rfind("gen:", 0) == 0 ? a.family : "gen:" + a.family;
    for (auto& s : expand_family(spec)) names.push_back(std::move(s));
  }
  if (names.size() < 2) throw UsageError("matrix needs at least two graphs");
  std::vector<Graph> graphs;
  for (const auto& n : names) graphs.push_back(load_graph(n));
  const auto matrices = power_matrix(graphs, parse_testers(a.testers), common.max_rounds, common.jobs);
  if (a.json) {
    std::cout << matrix_to_json(names, matrices).dump(2) << "\n";
    return 0;
  }
  std::size_t width = 6;
  for (const auto& n : names) width = std::max(width, n.size());
  for (const auto& m : matrices) {
    std::cout << "tester " << to_string(m.tester) << "\n";
    std::cout << std::setw(static_cast<int>(width)) << "";
    for (const auto& n : names) std::cout << "  " << std::setw(static_cast<int>(width)) << n;
    std::cout << "\n";
    for (std::size_t i = 0; i < m.size; ++i) {
      std::cout << std::setw(static_cast<int>(width)) << names[i];
      for (std::size_t j = 0; j < m.size; ++j) {
        std::cout << "  " << std::setw(static_cast<int>(width)) << short_verdict(m.at(i, j));
      }
      std::cout << "\n";
    }
  }
  return 0;
}

std::string inline_edges(const Graph& g) {
  std::string s = "[";
  for (std::size_t i = 0; i < g.num_edges(); ++i) {
    const Edge& e = g.edges()[i];
    s += (i ? " " : "") + std::to_string(e.u) + "-" + std::to_string(e.v);
  }
  return s + "]";
}

struct SearchArgs {
  std::size_t n = 0;
  std::string a, b;
  bool json = false;
};

int cmd_search(const SearchArgs& s, const CommonOptions& common) {
  if (s.n > 7) throw UsageError("search supports n <= 7");
  const TesterConfig a = parse_tester(s.a);
  const TesterConfig b = parse_tester(s.b);
  const SearchResult r = find_separations(s.n, a, b, common.max_rounds, common.jobs);
  if (s.json) {
    nlohmann::ordered_json j;
    j["schema"] = kReportSchema;
    j["n"] = s.n;
    j["a"] = to_string(a);
    j["b"] = to_string(b);
    j["classes"] = r.classes.size();
    auto pairs = nlohmann::ordered_json::array();
    for (auto [i, k] : r.pairs) {
      pairs.push_back({{"first", i}, {"second", k},
                       {"first_edges", inline_edges(r.classes[i])},
                       {"second_edges", inline_edges(r.classes[k])}});
    }
    j["pairs"] = std::move(pairs);
    std::cout << j.dump(2) << "\n";
    return 0;
  }
  for (auto [i, k] : r.pairs) {
    std::cout << "#" << i << " " << inline_edges(r.classes[i]) << " vs #" << k << " "
              << inline_edges(r.classes[k]) << "\n";
  }
  std::cout << r.pairs.size() << " pairs where " << to_string(a) << " distinguishes and "
            << to_string(b) << " does not (" << r.classes.size() << " classes on " << s.n
            << " nodes)\n";
  return 0;
}

struct TraceArgs {
  std::vector<std::string> graphs;
  std::string tester = "wl";
  std::string out;
};

int cmd_trace(const TraceArgs& t, const CommonOptions& common) {
  if (t.graphs.size() == 1) {
    if (parse_tester(t.tester).kind != TesterConfig::Kind::kWl) {
      throw UsageError("single-graph trace supports the wl tester only");
    }
    write_json(history_to_json(wl_refine(load_graph(t.graphs[0]), common.max_rounds)), t.out);
    return 0;
  }
  const TesterConfig tester = parse_tester(t.tester);
  const Verdict v =
      run_tester(load_graph(t.graphs[0]), load_graph(t.graphs[1]), tester, common.max_rounds, true);
  write_json(trace_to_json(to_string(tester), v), t.out);
  if (!t.out.empty() && t.out != "-") std::cout << to_string(v) << "\n";
  return 0;
}

int cmd_oracle(const std::string& a, const std::string& b) {
  const IsoResult r = are_isomorphic(load_graph(a), load_graph(b));
  if (!r.isomorphic) {
    std::cout << "NON_ISOMORPHIC\n";
    return 0;
  }
  std::cout << "ISOMORPHIC\nwitness:";
  for (NodeId v : *r.witness) std::cout << ' ' << v;
  std::cout << "\n";
  return 0;
}

int cmd_gen(const std::string& spec, const std::string& out) {
  const Graph g = generate(spec.rfind("gen:", 0) == 0 ? std::string_view(spec).substr(4) : spec);
  if (out.empty() || out == "-") {
    std::cout << format_edge_list(g);
  } else {
    std::ofstream f(out);
    if (!f) throw UsageError("cannot write '" + out + "'");
    f << format_edge_list(g);
  }
  return 0;
}

int cmd_reproduce(const std::vector<int>& ids, unsigned jobs, bool json) {
  AcceptanceOptions options;
  options.jobs = jobs;
  const auto results = run_acceptance(options, ids);
  bool ok = true;
  for (const auto& r : results) ok = ok && r.passed;
  if (json) {
    nlohmann::ordered_json j;
    j["schema"] = kReportSchema;
    auto checks = nlohmann::ordered_json::array();
    for (const auto& r : results) {
      checks.push_back({{"id", r.id}, {"name", r.name}, {"passed", r.passed},
                        {"observed", r.observed}, {"expected", r.expected},
                        {"failures", r.failures}, {"notes", r.notes},
                        {"seconds", r.seconds}, {"limit_seconds", r.limit_seconds}});
    }
    j["checks"] = std::move(checks);
    j["passed"] = ok;
    std::cout << j.dump(2) << "\n";
  } else {
    for (const auto& r : results) {
      std::cout << format_result(r) << "\n";
      for (const auto& f : r.failures) std::cout << "    failed: " << f << "\n";
      for (const auto& n : r.notes) std::cout << "    note: " << n << "\n";
    }
  }
  return ok ? 0 : kExitReproduce;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Subgraph-bag WL testers"};
  app.require_subcommand(1);
  CommonOptions common;

  std::string gen_spec, gen_out;
  auto* gen = app.add_subcommand("gen", "print a generated graph as an edge list");
  gen->add_option("spec", gen_spec, "family spec, e.g. csl:12:3")->required();
  gen->add_option("-o,--out", gen_out, "output path (default stdout)");

  TestArgs test_args;
  auto* test = app.add_subcommand("test", "run one tester on a pair of graphs");
  test->add_option("g1", test_args.g1, "edge-list file or gen:<family>:<params>")->required();
  test->add_option("g2", test_args.g2, "edge-list file or gen:<family>:<params>")->required();
  test->add_option("--tester", test_args.tester, "wl, fwl2, ds:<policy>[:fwl2], dss:<policy>[:loo]");
  test->add_flag("--json", test_args.json, "print a JSON report");
  test->add_option("--trace", test_args.trace, "write per-round histograms as JSON");
  test->add_option("--sample", test_args.sample, "subgraph sampling ratio in (0, 1]");
  test->add_option("--votes", test_args.votes, "number of sampled draws (odd)");
  test->add_option("--seed", test_args.seed, "sampling seed");
  add_common(test, common);

  MatrixArgs matrix_args;
  auto* matrix = app.add_subcommand("matrix", "pairwise verdicts over a graph list");
  matrix->add_option("graphs", matrix_args.graphs, "edge-list files or gen: specs");
  matrix->add_option("--list", matrix_args.list, "file with one graph per line");
  matrix->add_option("--family", matrix_args.family, "e.g. csl:16:2,3,5,7");
  matrix->add_option("--tester", matrix_args.testers, "testers (repeatable or comma separated)");
  matrix->add_flag("--json", matrix_args.json, "print JSON");
  add_common(matrix, common);

  SearchArgs search_args;
  auto* search = app.add_subcommand("search", "pairs on n nodes separated by A but not B");
  search->add_option("--n", search_args.n, "node count (<= 7)")->required();
  search->add_option("--a", search_args.a, "tester A")->required();
  search->add_option("--b", search_args.b, "tester B")->required();
  search->add_flag("--json", search_args.json, "print JSON");
  add_common(search, common);

  TraceArgs trace_args;
  auto* trace = app.add_subcommand("trace", "export per-round colorings as JSON");
  trace->add_option("graphs", trace_args.graphs, "one graph (wl history) or two (pair trace)")
      ->required()
      ->expected(1, 2);
  trace->add_option("--tester", trace_args.tester, "tester");
  trace->add_option("-o,--out", trace_args.out, "output path (default stdout)");
  add_common(trace, common);

  std::string oracle_a, oracle_b;
  auto* oracle = app.add_subcommand("oracle", "exact isomorphism check");
  oracle->add_option("g1", oracle_a)->required();
  oracle->add_option("g2", oracle_b)->required();

  std::vector<int> criteria;
  bool reproduce_json = false;
  unsigned reproduce_jobs = default_jobs();
  auto* reproduce = app.add_subcommand("reproduce", "run the acceptance suite");
  reproduce->add_option("--criteria", criteria, "subset of criterion ids")
      ->delimiter(',')
      ->check(CLI::Range(1, kCriterionCount));
  reproduce->add_option("--jobs", reproduce_jobs, "worker threads")->check(CLI::PositiveNumber);
  reproduce->add_flag("--json", reproduce_json, "print JSON");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitUsage;
  }

  try {
    if (*gen) return cmd_gen(gen_spec, gen_out);
    if (*test) return cmd_test(test_args, common);
    if (*matrix) return cmd_matrix(matrix_args, common);
    if (*search) return cmd_search(search_args, common);
    if (*trace) return cmd_trace(trace_args, common);
    if (*oracle) return cmd_oracle(oracle_a, oracle_b);
    if (*reproduce) return cmd_reproduce(criteria, reproduce_jobs, reproduce_json);
  } catch (const UsageError& e) {
    std::cerr << "usage error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const ParseError& e) {
    std::cerr << "parse error: " << e.what() << "\n";
    return kExitParse;
  } catch (const nlohmann::json::exception& e) {
    std::cerr << "parse error: " << e.what() << "\n";
    return kExitParse;
  }
  return kExitUsage;
}
