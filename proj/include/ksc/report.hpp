// Copyright 2026 The ksc Authors
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.
//
// Machine-readable run reports. The canonical JSON form is what gets
// diffed for reproducibility, so it contains only deterministic fields;
// wall-clock duration lives next to it and goes to the human-readable
// rendering only.

#ifndef KSC_REPORT_HPP_
#define KSC_REPORT_HPP_

#include <optional>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

#include "ksc/exact.hpp"
#include "ksc/solver.hpp"

namespace ksc {

struct ExactSummary {
  double weight = 0.0;
  double utility = 0.0;
  bool feasible = false;
};

struct RunReport {
  std::string algorithm;  // "known-guess" | "two-pass" | "single-pass"
  std::optional<std::string> selection;

  // config echo
  double tau = 0.0;
  double epsilon = 0.0;
  bool monotone = true;
  int r = 2;
  std::optional<double> guess;
  std::optional<double> upper_bound_B;
  std::optional<std::uint64_t> permute_seed;

  // instance echo
  std::string instance_path;
  std::string instance_kind;
  int n = 0;
  int k = 0;

  // outcome; weight and utility are recomputed from the solution on emit
  bool infeasible = false;
  std::string infeasible_reason;
  std::vector<std::pair<std::string, Position>> solution;
  double weight = 0.0;
  double utility = 0.0;
  std::optional<double> chosen_guess;

  StreamStats stats;

  bool in_contract = true;  // false when the supplied guess/B undershot the optimum
  std::optional<BoundVerdict> bounds;
  std::optional<ExactSummary> exact;

  double duration_ms = 0.0;  // not part of the canonical form
};

inline nlohmann::json bounds_to_json(const BoundVerdict& v) {
  return {
      {"alpha", v.alpha},
      {"beta", v.beta},
      {"reference_weight", v.reference_weight},
      {"weight", v.weight},
      {"weight_bound", v.weight_bound},
      {"weight_slack", v.weight_slack},
      {"weight_ok", v.weight_ok},
      {"utility", v.utility},
      {"utility_bar", v.utility_bar},
      {"utility_slack", v.utility_slack},
      {"utility_ok", v.utility_ok},
      {"passed", v.passed},
  };
}

inline nlohmann::json to_canonical_json(const RunReport& r) {
  nlohmann::json doc;
  doc["algorithm"] = r.algorithm;
  if (r.selection) doc["selection"] = *r.selection;
  doc["config"] = {
      {"tau", r.tau},
      {"epsilon", r.epsilon},
      {"monotone", r.monotone},
      {"r", r.r},
  };
  if (r.guess) doc["config"]["guess"] = *r.guess;
  if (r.upper_bound_B) doc["config"]["upper_bound_B"] = *r.upper_bound_B;
  if (r.permute_seed) doc["config"]["permute_seed"] = *r.permute_seed;
  doc["instance"] = {
      {"path", r.instance_path},
      {"kind", r.instance_kind},
      {"n", r.n},
      {"k", r.k},
  };
  doc["infeasible"] = r.infeasible;
  if (r.infeasible) doc["infeasible_reason"] = r.infeasible_reason;
  doc["solution"] = nlohmann::json::array();
  for (const auto& [name, position] : r.solution) {
    doc["solution"].push_back({name, position});
  }
  doc["weight"] = r.weight;
  doc["utility"] = r.utility;
  if (r.chosen_guess) doc["chosen_guess"] = *r.chosen_guess;
  doc["stats"] = {
      {"elements_seen", r.stats.elements_seen},
      {"peak_stored_pairs", r.stats.peak_stored_pairs},
      {"live_instances_max", r.stats.live_instances_max},
      {"oracle_queries", r.stats.oracle_queries},
      {"w_min", r.stats.elements_seen == 0 ? 0.0 : r.stats.w_min},
      {"w_max", r.stats.w_max},
      {"gamma", r.stats.gamma()},
      {"kappa", r.stats.kappa},
  };
  doc["in_contract"] = r.in_contract;
  if (r.bounds) doc["bounds"] = bounds_to_json(*r.bounds);
  if (r.exact) {
    doc["exact"] = {
        {"weight", r.exact->weight},
        {"utility", r.exact->utility},
        {"feasible", r.exact->feasible},
    };
  }
  return doc;
}

inline std::string serialize_report(const RunReport& r) {
  return to_canonical_json(r).dump(2) + "\n";
}

inline std::string report_to_text(const RunReport& r) {
  std::ostringstream out;
  out << r.algorithm;
  if (r.selection) out << " (" << *r.selection << ")";
  out << " on " << (r.instance_path.empty() ? r.instance_kind : r.instance_path) << "  n=" << r.n
      << " k=" << r.k << "\n";
  out << "  tau=" << r.tau << " epsilon=" << r.epsilon << " r=" << r.r
      << (r.monotone ? " (monotone)" : " (non-monotone)") << "\n";
  if (r.infeasible) {
    out << "  infeasible: " << r.infeasible_reason << "\n";
  } else {
    out << "  solution:";
    for (const auto& [name, position] : r.solution) out << " (" << name << "," << position << ")";
    out << "\n  weight=" << r.weight << " utility=" << r.utility;
    if (r.chosen_guess) out << " chosen_guess=" << *r.chosen_guess;
    out << "\n";
  }
  out << "  stats: elements=" << r.stats.elements_seen
      << " peak_pairs=" << r.stats.peak_stored_pairs
      << " live_max=" << r.stats.live_instances_max << " queries=" << r.stats.oracle_queries
      << "\n";
  if (r.exact) {
    out << "  exact: weight=" << r.exact->weight << " utility=" << r.exact->utility
        << (r.exact->feasible ? "" : " (infeasible)") << "\n";
  }
  if (!r.in_contract) out << "  out of contract: supplied guess/B is below the optimum weight\n";
  if (r.bounds) {
    out << "  bounds: weight " << r.bounds->weight << " <= " << r.bounds->weight_bound
        << (r.bounds->weight_ok ? " ok" : " VIOLATED") << "; utility " << r.bounds->utility
        << " >= " << r.bounds->utility_bar << (r.bounds->utility_ok ? " ok" : " VIOLATED") << "\n";
  }
  out << "  duration_ms=" << r.duration_ms << "\n";
  return out.str();
}

}  // namespace ksc

#endif  // KSC_REPORT_HPP_
