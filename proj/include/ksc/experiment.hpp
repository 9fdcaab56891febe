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
// Experiment orchestration: one solver run on one instance, optionally
// anchored by the exact baseline, with verdicts and a deterministic report.

#ifndef KSC_EXPERIMENT_HPP_
#define KSC_EXPERIMENT_HPP_

#include <chrono>
#include <cmath>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "ksc/errors.hpp"
#include "ksc/exact.hpp"
#include "ksc/instance.hpp"
#include "ksc/ladder.hpp"
#include "ksc/report.hpp"
#include "ksc/solver.hpp"
#include "ksc/stream.hpp"
#include "ksc/verify.hpp"

namespace ksc {

enum class ExitStatus : int {
  ok = 0,
  infeasible = 2,          // the threshold is not attainable / nothing cleared the bar
  contract_violation = 3,  // out-of-contract inputs, or an in-contract bound failure
  input_error = 4,
};

struct ExperimentSpec {
  const InstanceFile* instance = nullptr;
  std::string instance_path;

  int algorithm = 2;  // 1 known-guess, 2 two-pass, 3 single-pass
  std::optional<double> tau;
  std::optional<double> tau_fraction;  // tau = fraction * max_utility, needs enumeration
  double epsilon = 0.1;

  enum class Monotonicity { declared, monotone, non_monotone, auto_verify };
  Monotonicity monotonicity = Monotonicity::declared;

  std::optional<double> guess;  // known-guess solver
  bool guess_from_exact = false;

  std::optional<double> upper_bound_B;  // single-pass solver
  bool auto_B = false;                  // B = n * w_max

  SelectionMode selection = SelectionMode::min_weight;
  std::optional<std::uint64_t> permute_seed;

  bool with_exact = true;  // run the exact baseline and check the bicriteria bounds
  std::uint64_t enumeration_budget = kEnumerationBudget;
  std::vector<TraceRecord>* trace = nullptr;
};

struct ExperimentResult {
  ExitStatus status = ExitStatus::ok;
  RunReport report;
};

namespace detail {

inline bool resolve_monotone(const ExperimentSpec& spec, const UtilityOracle& oracle) {
  const InstanceFile& inst = *spec.instance;
  switch (spec.monotonicity) {
    case ExperimentSpec::Monotonicity::monotone:
      return true;
    case ExperimentSpec::Monotonicity::non_monotone:
      return false;
    case ExperimentSpec::Monotonicity::declared:
      if (!inst.declared_monotone) {
        throw config_error(
            "instance declares no monotonicity; pass --monotone/--non-monotone or --auto-monotone");
      }
      return *inst.declared_monotone;
    case ExperimentSpec::Monotonicity::auto_verify: {
      bool verified = verify_monotone(oracle, inst.n(), inst.k, spec.enumeration_budget).passed();
      if (inst.declared_monotone && *inst.declared_monotone != verified) {
        throw validation_error(std::string("instance declares monotone=") +
                               (*inst.declared_monotone ? "true" : "false") +
                               " but exhaustive verification says otherwise");
      }
      return verified;
    }
  }
  throw config_error("unreachable monotonicity mode");
}

inline const char* algorithm_name(int algorithm) {
  switch (algorithm) {
    case 1: return "known-guess";
    case 2: return "two-pass";
    case 3: return "single-pass";
  }
  throw config_error("algorithm must be 1, 2 or 3, got " + std::to_string(algorithm));
}

}  // namespace detail

inline ExperimentResult run_experiment(const ExperimentSpec& spec) {
  if (spec.instance == nullptr) throw config_error("run_experiment: no instance");
  const InstanceFile& inst = *spec.instance;
  std::unique_ptr<UtilityOracle> oracle = make_oracle(inst);
  WeightTable weights = make_weight_table(inst);
  const int n = inst.n();

  bool monotone = detail::resolve_monotone(spec, *oracle);

  if (spec.tau && spec.tau_fraction) throw config_error("give either tau or tau_fraction, not both");
  double tau;
  if (spec.tau) {
    tau = *spec.tau;
  } else if (spec.tau_fraction) {
    tau = *spec.tau_fraction * max_utility(*oracle, n, inst.k, spec.enumeration_budget);
  } else {
    throw config_error("no utility threshold: give tau or tau_fraction");
  }

  std::optional<ExactSolution> exact;
  if (spec.with_exact || spec.guess_from_exact) {
    exact = exact_cover(*oracle, weights, tau, n, inst.k, spec.enumeration_budget);
  }

  ProblemConfig cfg;
  cfg.tau = tau;
  cfg.epsilon = spec.epsilon;
  cfg.monotone = monotone;
  cfg.k = inst.k;

  RunReport report;
  report.algorithm = detail::algorithm_name(spec.algorithm);
  report.tau = tau;
  report.epsilon = spec.epsilon;
  report.monotone = monotone;
  report.r = cfg.r();
  report.permute_seed = spec.permute_seed;
  report.instance_path = spec.instance_path;
  report.instance_kind = to_string(inst.kind);
  report.n = n;
  report.k = inst.k;
  if (exact) report.exact = ExactSummary{exact->weight, exact->utility, exact->feasible};

  ExperimentResult result;

  if (spec.algorithm == 1) {
    if (spec.guess && spec.guess_from_exact) {
      throw config_error("give either an explicit guess or guess_from_exact, not both");
    }
    if (spec.guess) {
      cfg.guessed_opt = *spec.guess;
    } else if (spec.guess_from_exact) {
      if (!exact->feasible) {
        report.infeasible = true;
        report.infeasible_reason = "exact baseline: no k-set reaches the threshold";
        result.status = ExitStatus::infeasible;
        result.report = report;
        return result;
      }
      cfg.guessed_opt = exact->weight;
    } else {
      throw config_error("known-guess solver needs a guess (explicit or from the exact baseline)");
    }
    report.guess = cfg.guessed_opt;
  } else if (spec.algorithm == 3) {
    if (spec.upper_bound_B && spec.auto_B) {
      throw config_error("give either an explicit upper_bound_B or auto_B, not both");
    }
    if (spec.upper_bound_B) {
      cfg.upper_bound_B = *spec.upper_bound_B;
    } else if (spec.auto_B) {
      double w_max = 0.0;
      for (double wx : weights.values()) w_max = std::max(w_max, wx);
      cfg.upper_bound_B = static_cast<double>(n) * w_max;
    } else {
      throw config_error("single-pass solver needs upper_bound_B (explicit or auto)");
    }
    report.upper_bound_B = cfg.upper_bound_B;
    report.selection = to_string(spec.selection);
  } else {
    detail::algorithm_name(spec.algorithm);  // validates the id
  }

  std::vector<ElementId> order =
      spec.permute_seed ? permuted_order(n, *spec.permute_seed) : identity_order(n);
  TraceSink sink;
  if (spec.trace != nullptr) {
    sink = [trace = spec.trace](const TraceRecord& rec) { trace->push_back(rec); };
  }

  auto started = std::chrono::steady_clock::now();
  SolveOutcome outcome;
  if (spec.algorithm == 1) {
    VectorStream stream(order);
    outcome = run_known_guess(stream, cfg, *oracle, weights, sink);
  } else if (spec.algorithm == 2) {
    outcome = run_two_pass(vector_stream_factory(order), cfg, *oracle, weights, sink);
  } else {
    VectorStream stream(order);
    outcome = run_single_pass(stream, cfg, *oracle, weights, spec.selection, sink);
  }
  report.duration_ms = std::chrono::duration<double, std::milli>(
                           std::chrono::steady_clock::now() - started)
                           .count();

  report.infeasible = outcome.infeasible;
  report.infeasible_reason = outcome.infeasible_reason;
  report.stats = outcome.stats;
  report.chosen_guess = outcome.chosen_guess;
  for (const auto& [x, i] : outcome.solution.pairs()) {
    report.solution.push_back({inst.element_names[static_cast<std::size_t>(x)], i});
  }
  // Report numbers are recomputed from the solution; the solver's running
  // values must agree with the recomputation.
  report.weight = kset_weight(weights, outcome.solution);
  report.utility = oracle->eval(outcome.solution);
  if (!outcome.infeasible &&
      (std::abs(report.weight - outcome.weight) > 1e-9 ||
       std::abs(report.utility - outcome.utility) > 1e-9)) {
    throw std::logic_error("solver bookkeeping diverged from the reported solution");
  }

  if (outcome.infeasible) {
    result.status = ExitStatus::infeasible;
    result.report = report;
    return result;
  }
  if (exact && !exact->feasible) {
    // The solver cleared its own bar, but the cover problem itself has no
    // feasible solution to compare against.
    result.status = ExitStatus::infeasible;
    result.report = report;
    return result;
  }
  if (exact) {
    double reference = spec.algorithm == 1 ? *cfg.guessed_opt : exact->weight;
    if (spec.algorithm == 1) {
      report.in_contract = *cfg.guessed_opt >= exact->weight;
    } else if (spec.algorithm == 3) {
      report.in_contract = *cfg.upper_bound_B >= exact->weight;
    }
    BoundFactors factors = theorem_factors(spec.epsilon, monotone, spec.algorithm);
    report.bounds =
        check_bicriteria(outcome.solution, *exact, factors, tau, *oracle, weights, reference);
    if (!report.in_contract) {
      result.status = ExitStatus::contract_violation;
    } else if (!report.bounds->passed) {
      result.status = ExitStatus::contract_violation;
    }
  }
  result.report = report;
  return result;
}

}  // namespace ksc

#endif  // KSC_EXPERIMENT_HPP_
