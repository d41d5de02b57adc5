#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "json.hpp"

#include "bagwl/bag_wl.hpp"
#include "bagwl/verdict.hpp"
#include "bagwl/wl.hpp"

namespace bagwl {

inline constexpr int kReportSchema = 1;

struct VoteTally {
  std::uint32_t distinguished = 0;
  std::uint32_t possibly_isomorphic = 0;

  friend bool operator==(const VoteTally&, const VoteTally&) = default;
};

/// Outcome of one `test` invocation.
struct RunReport {
  std::string tester;
  std::vector<std::string> graphs;
  std::string verdict;  // DISTINGUISHED / POSSIBLY_ISOMORPHIC
  std::uint32_t round = 0;
  bool converged = true;
  double wall_ms = 0.0;
  std::optional<std::string> trace_path;
  std::optional<VoteTally> votes;

  friend bool operator==(const RunReport&, const RunReport&) = default;
};

RunReport make_report(const std::string& tester, std::vector<std::string> graphs,
                      const Verdict& v, double wall_ms);

nlohmann::ordered_json to_json(const RunReport& r);
RunReport run_report_from_json(const nlohmann::json& j);

/// Per-round representation histograms of a pairwise run.
nlohmann::ordered_json trace_to_json(const std::string& tester, const Verdict& v);

/// Per-round node colors and histograms of a single 1-WL run.
nlohmann::ordered_json history_to_json(const ColoringHistory& h);

nlohmann::ordered_json matrix_to_json(const std::vector<std::string>& graph_names,
                                      const std::vector<VerdictMatrix>& matrices);

}  // namespace bagwl
