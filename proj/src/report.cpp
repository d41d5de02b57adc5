#include "bagwl/report.hpp"

#include <map>

namespace bagwl {

using nlohmann::ordered_json;

namespace {

ordered_json histogram(const std::vector<ColorId>& sorted_colors) {
  std::map<ColorId, std::size_t> counts;
  for (ColorId c : sorted_colors) ++counts[c];
  ordered_json out = ordered_json::array();
  for (auto [color, count] : counts) out.push_back({color, count});
  return out;
}

const char* outcome_name(const Verdict& v) {
  return v.distinguished() ? "DISTINGUISHED" : "POSSIBLY_ISOMORPHIC";
}

}  // namespace

RunReport make_report(const std::string& tester, std::vector<std::string> graphs,
                      const Verdict& v, double wall_ms) {
  RunReport r;
  r.tester = tester;
  r.graphs = std::move(graphs);
  r.verdict = outcome_name(v);
  r.round = v.round;
  r.converged = v.converged;
  r.wall_ms = wall_ms;
  return r;
}

ordered_json to_json(const RunReport& r) {
  ordered_json j;
  j["schema"] = kReportSchema;
  j["tester"] = r.tester;
  j["graphs"] = r.graphs;
  j["verdict"] = r.verdict;
  j["round"] = r.round;
  j["converged"] = r.converged;
  j["wall_ms"] = r.wall_ms;
  j["trace"] = r.trace_path ? ordered_json(*r.trace_path) : ordered_json(nullptr);
  if (r.votes) {
    j["votes"] = {{"distinguished", r.votes->distinguished},
                  {"possibly_isomorphic", r.votes->possibly_isomorphic}};
  }
  return j;
}

RunReport run_report_from_json(const nlohmann::json& j) {
  if (j.at("schema").get<int>() != kReportSchema) {
    throw ParseError("unsupported report schema " + j.at("schema").dump());
  }
  RunReport r;
  r.tester = j.at("tester").get<std::string>();
  r.graphs = j.at("graphs").get<std::vector<std::string>>();
  r.verdict = j.at("verdict").get<std::string>();
  r.round = j.at("round").get<std::uint32_t>();
  r.converged = j.at("converged").get<bool>();
  r.wall_ms = j.at("wall_ms").get<double>();
  if (j.contains("trace") && !j["trace"].is_null()) r.trace_path = j["trace"].get<std::string>();
  if (j.contains("votes")) {
    r.votes = VoteTally{j["votes"].at("distinguished").get<std::uint32_t>(),
                        j["votes"].at("possibly_isomorphic").get<std::uint32_t>()};
  }
  return r;
}

ordered_json trace_to_json(const std::string& tester, const Verdict& v) {
  ordered_json j;
  j["schema"] = kReportSchema;
  j["tester"] = tester;
  j["verdict"] = to_string(v);
  ordered_json rounds = ordered_json::array();
  for (const auto& rf : v.trace) {
    rounds.push_back({{"round", rf.round},
                      {"first", histogram(rf.first)},
                      {"second", histogram(rf.second)}});
  }
  j["rounds"] = std::move(rounds);
  return j;
}

ordered_json history_to_json(const ColoringHistory& h) {
  ordered_json j;
  j["schema"] = kReportSchema;
  j["converged_at"] = h.converged_at;
  j["converged"] = h.converged;
  ordered_json rounds = ordered_json::array();
  for (std::size_t t = 0; t < h.rounds.size(); ++t) {
    rounds.push_back({{"round", t},
                      {"colors", h.rounds[t]},
                      {"histogram", histogram(h.fingerprint_per_round[t])}});
  }
  j["rounds"] = std::move(rounds);
  return j;
}

ordered_json matrix_to_json(const std::vector<std::string>& graph_names,
                            const std::vector<VerdictMatrix>& matrices) {
  ordered_json j;
  j["schema"] = kReportSchema;
  j["graphs"] = graph_names;
  ordered_json testers = ordered_json::array();
  for (const auto& m : matrices) {
    ordered_json rows = ordered_json::array();
    for (std::size_t i = 0; i < m.size; ++i) {
      ordered_json row = ordered_json::array();
      for (std::size_t k = 0; k < m.size; ++k) row.push_back(to_string(m.at(i, k)));
      rows.push_back(std::move(row));
    }
    testers.push_back({{"tester", to_string(m.tester)}, {"verdicts", std::move(rows)}});
  }
  j["testers"] = std::move(testers);
  return j;
}

}  // namespace bagwl
