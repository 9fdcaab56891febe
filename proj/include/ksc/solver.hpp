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
// Threshold-greedy streaming core. One ThresholdState is a single run of
// the known-guess solver: a running k-set, a gain-density threshold theta
// and a weight budget A derived from a guessed optimum. All threshold
// comparisons are exact floating-point comparisons with the strict/non-strict
// choices fixed (>= theta, <= A); introducing tolerances here would silently
// change which elements are accepted.

#ifndef KSC_SOLVER_HPP_
#define KSC_SOLVER_HPP_

#include <cassert>
#include <cstdint>
#include <functional>
#include <limits>
#include <optional>
#include <string>
#include <vector>

#include "ksc/errors.hpp"
#include "ksc/kset.hpp"
#include "ksc/oracle.hpp"
#include "ksc/stream.hpp"

namespace ksc {

struct ProblemConfig {
  double tau = 0.0;      // utility threshold, > 0
  double epsilon = 0.0;  // in (0,1); 1 would degenerate the utility bar and the ladders
  bool monotone = true;
  int k = 0;
  std::optional<double> guessed_opt;    // known-guess solver: guess >= w(optimum)
  std::optional<double> upper_bound_B;  // single-pass solver: upper bound on w(optimum)

  int r() const { return monotone ? 2 : 3; }

  // The utility floor every returned solution must clear: (1-eps)*tau/r.
  double utility_bar() const { return (1.0 - epsilon) * tau / static_cast<double>(r()); }

  void validate() const {
    if (!(tau > 0.0)) throw config_error("tau must be positive, got " + std::to_string(tau));
    if (!(epsilon > 0.0 && epsilon < 1.0)) {
      throw config_error("epsilon must lie in (0,1), got " + std::to_string(epsilon));
    }
    if (k < 1) throw config_error("k must be >= 1, got " + std::to_string(k));
  }
};

struct ThresholdState {
  KSet solution;
  double guess = 0.0;     // the guessed optimum this instance was built from
  double theta = 0.0;     // gain-density threshold eps*tau/guess
  double budget_A = 0.0;  // weight budget
  double weight = 0.0;    // w(solution), maintained incrementally
  double utility = 0.0;   // g(solution), always the value of an actual eval
  bool found_big = false;
};

// theta = eps*tau/guess; A = (3-eps)/(2*eps)*guess when monotone, else
// (4-eps)/(3*eps)*guess.
inline ThresholdState make_threshold_state(const ProblemConfig& cfg, double guess) {
  cfg.validate();
  if (!(guess > 0.0)) {
    throw config_error("guessed optimum must be positive, got " + std::to_string(guess));
  }
  ThresholdState st;
  st.solution = KSet(cfg.k);
  st.guess = guess;
  st.theta = cfg.epsilon * cfg.tau / guess;
  st.budget_A = cfg.monotone ? (3.0 - cfg.epsilon) / (2.0 * cfg.epsilon) * guess
                             : (4.0 - cfg.epsilon) / (3.0 * cfg.epsilon) * guess;
  return st;
}

enum class StepKind { skipped, inserted, big };

struct StepResult {
  StepKind kind = StepKind::skipped;
  Position position = 0;
  double gain = 0.0;  // marginal gain for inserted/skipped, singleton value for big
};

struct TraceRecord {
  ElementId element = -1;
  int guess_index = -1;  // ladder index, or -1 for a standalone instance
  StepKind kind = StepKind::skipped;
  Position position = 0;
  double gain = 0.0;
  double weight_after = 0.0;
  double utility_after = 0.0;
};

using TraceSink = std::function<void(const TraceRecord&)>;

// One arriving element against one threshold instance. The caller supplies
// the element's best singleton (shared across ladder instances); the
// marginal scan runs only when the big-element test fails, so the instance
// costs at most 2k queries per element. A big element replaces the whole
// running solution with its single pair.
inline StepResult process_element(ThresholdState& st, const ProblemConfig& cfg,
                                  const UtilityOracle& g, const WeightTable& w, ElementId x,
                                  const BestChoice& singleton_best) {
  if (st.solution.contains(x)) {
    throw instance_error("element " + std::to_string(x) + " arrived twice");
  }
  const double wx = w.at(x);
  if (wx <= st.budget_A && singleton_best.value >= cfg.tau) {
    st.solution = insert(KSet(cfg.k), x, singleton_best.position);
    st.weight = wx;
    st.utility = singleton_best.value;
    st.found_big = true;
    return {StepKind::big, singleton_best.position, singleton_best.value};
  }
  MarginalChoice m = best_marginal(g, st.solution, x, st.utility);
  if (m.gain / wx >= st.theta && st.weight + wx <= st.budget_A) {
    st.solution = insert(st.solution, x, m.position);
    st.weight += wx;
    st.utility = m.value_at;
    assert(st.weight <= st.budget_A);
    return {StepKind::inserted, m.position, m.gain};
  }
  return {StepKind::skipped, 0, m.gain};
}

// Convenience overload that runs its own singleton scan (k extra queries).
inline StepResult process_element(ThresholdState& st, const ProblemConfig& cfg,
                                  const UtilityOracle& g, const WeightTable& w, ElementId x) {
  return process_element(st, cfg, g, w, x, best_singleton(g, x));
}

struct StreamStats {
  double w_min = std::numeric_limits<double>::infinity();
  double w_max = 0.0;
  double kappa = 0.0;  // max over seen elements of best-singleton value / weight
  std::size_t elements_seen = 0;
  std::size_t peak_stored_pairs = 0;   // max over time of assigned pairs across live instances
  std::size_t live_instances_max = 0;  // max number of simultaneously live guesses
  std::uint64_t oracle_queries = 0;

  double gamma() const { return elements_seen == 0 ? 0.0 : w_min / w_max; }
};

struct SolveOutcome {
  KSet solution;
  double weight = 0.0;
  double utility = 0.0;
  bool found_big = false;
  bool infeasible = false;
  std::string infeasible_reason;
  std::optional<int> chosen_guess_index;  // ladder solvers: index of the returned instance
  std::optional<double> chosen_guess;
  StreamStats stats;
};

namespace detail {

// Duplicate detection for one stream pass.
class SeenSet {
 public:
  explicit SeenSet(int n) : seen_(static_cast<std::size_t>(n), 0) {}

  void mark(ElementId x) {
    if (x < 0 || x >= static_cast<int>(seen_.size())) {
      throw instance_error("stream element " + std::to_string(x) + " outside the ground set");
    }
    if (seen_[static_cast<std::size_t>(x)]) {
      throw instance_error("element " + std::to_string(x) + " arrived twice in one pass");
    }
    seen_[static_cast<std::size_t>(x)] = 1;
  }

 private:
  std::vector<char> seen_;
};

inline void note_weight(StreamStats& stats, double wx) {
  if (wx < stats.w_min) stats.w_min = wx;
  if (wx > stats.w_max) stats.w_max = wx;
}

inline void note_density(StreamStats& stats, const BestChoice& singles, double wx) {
  double density = singles.value / wx;
  if (density > stats.kappa) stats.kappa = density;
}

}  // namespace detail

// Single pass with a caller-supplied guess of the optimum weight. The
// guarantees only hold when guess >= w(optimum); that is the caller's
// contract, checked post hoc by the experiment harness at desk scale.
inline SolveOutcome run_known_guess(ElementStream& stream, const ProblemConfig& cfg,
                                    const UtilityOracle& oracle, const WeightTable& w,
                                    const TraceSink& trace = {}) {
  cfg.validate();
  if (!cfg.guessed_opt) throw config_error("known-guess solver requires a guessed optimum");
  CountingOracle g(oracle);
  ThresholdState st = make_threshold_state(cfg, *cfg.guessed_opt);
  SolveOutcome out;
  out.stats.live_instances_max = 1;
  detail::SeenSet seen(w.size());
  while (auto x = stream.next()) {
    seen.mark(*x);
    double wx = w.at(*x);
    detail::note_weight(out.stats, wx);
    BestChoice singles = best_singleton(g, *x);
    detail::note_density(out.stats, singles, wx);
    StepResult step = process_element(st, cfg, g, w, *x, singles);
    ++out.stats.elements_seen;
    std::size_t pairs = static_cast<std::size_t>(st.solution.size());
    if (pairs > out.stats.peak_stored_pairs) out.stats.peak_stored_pairs = pairs;
    if (trace) trace({*x, -1, step.kind, step.position, step.gain, st.weight, st.utility});
  }
  out.solution = st.solution;
  out.weight = st.weight;
  out.utility = st.utility;
  out.found_big = st.found_big;
  out.chosen_guess = st.guess;
  out.stats.oracle_queries = g.queries();
  return out;
}

struct WeightExtremes {
  double w_min = 0.0;
  double w_max = 0.0;
  std::size_t count = 0;
  std::uint64_t order_fingerprint = 0;  // FNV-1a over the id sequence
};

// Exact min/max element weight over one full pass.
inline WeightExtremes weight_extremes(ElementStream& stream, const WeightTable& w) {
  WeightExtremes out;
  out.w_min = std::numeric_limits<double>::infinity();
  out.w_max = -std::numeric_limits<double>::infinity();
  out.order_fingerprint = 1469598103934665603ull;
  detail::SeenSet seen(w.size());
  while (auto x = stream.next()) {
    seen.mark(*x);
    double wx = w.at(*x);
    if (wx < out.w_min) out.w_min = wx;
    if (wx > out.w_max) out.w_max = wx;
    out.order_fingerprint ^= static_cast<std::uint64_t>(*x);
    out.order_fingerprint *= 1099511628211ull;
    ++out.count;
  }
  if (out.count == 0) throw instance_error("weight_extremes: empty stream");
  return out;
}

}  // namespace ksc

#endif  // KSC_SOLVER_HPP_
