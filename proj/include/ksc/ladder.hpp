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
// Guess-ladder solvers. Both run one threshold instance per guessed optimum
// value lambda_j = (1-eps)^j * base. The two-pass solver fixes the ladder
// from the weight extremes of a first pass; the single-pass solver grows and
// prunes the ladder dynamically between a lower bound L (from the densest
// singleton seen so far) and a shrinking upper bound U (from instances that
// already clear the utility bar).

#ifndef KSC_LADDER_HPP_
#define KSC_LADDER_HPP_

#include <cmath>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "ksc/errors.hpp"
#include "ksc/kset.hpp"
#include "ksc/oracle.hpp"
#include "ksc/solver.hpp"
#include "ksc/stream.hpp"

namespace ksc {

// Rung j of a geometric ladder, by repeated multiplication so that the same
// (base, j) always yields bit-identical values.
inline double ladder_rung(double base, double one_minus_eps, int index) {
  double rung = base;
  for (int j = 0; j < index; ++j) rung *= one_minus_eps;
  return rung;
}

// Number of rungs in the fixed ladder: ceil(l) + 1 with
// l = ln(gamma/n) / ln(1-eps), gamma = w_min/w_max. l is snapped to the
// nearest integer when within 1e-9 so that ratios which are exact powers of
// (1-eps) do not gain or lose a rung to floating-point rounding.
inline int guess_ladder_size(double w_min, double w_max, std::size_t n, double epsilon) {
  if (!(w_min > 0.0) || !(w_max >= w_min)) {
    throw config_error("guess ladder requires 0 < w_min <= w_max");
  }
  if (n < 1) throw config_error("guess ladder requires n >= 1");
  if (!(epsilon > 0.0 && epsilon < 1.0)) throw config_error("epsilon must lie in (0,1)");
  double gamma = w_min / w_max;
  double l = std::log(gamma / static_cast<double>(n)) / std::log(1.0 - epsilon);
  double snapped = std::round(l);
  if (std::abs(l - snapped) < 1e-9) l = snapped;
  if (l < 0.0) l = 0.0;
  return static_cast<int>(std::ceil(l)) + 1;
}

// The guesses lambda_j = (1-eps)^j * n * w_max for j = 0..ceil(l), running
// from n*w_max down to the first value <= w_min. Any optimum weight in
// [w_min, n*w_max] falls between two consecutive rungs.
inline std::vector<double> build_guess_set(double w_min, double w_max, std::size_t n,
                                           double epsilon) {
  int count = guess_ladder_size(w_min, w_max, n, epsilon);
  std::vector<double> rungs(static_cast<std::size_t>(count));
  double rung = static_cast<double>(n) * w_max;
  for (int j = 0; j < count; ++j) {
    rungs[static_cast<std::size_t>(j)] = rung;
    rung *= 1.0 - epsilon;
  }
  return rungs;
}

// Two passes: weight extremes first, then every element through every rung's
// threshold instance. Returns the lightest solution among those clearing the
// utility bar (ties to the largest guess).
inline SolveOutcome run_two_pass(const StreamFactory& make_stream, const ProblemConfig& cfg,
                                 const UtilityOracle& oracle, const WeightTable& w,
                                 const TraceSink& trace = {}) {
  cfg.validate();
  CountingOracle g(oracle);
  auto first_pass = make_stream();
  WeightExtremes extremes = weight_extremes(*first_pass, w);

  std::vector<double> rungs = build_guess_set(extremes.w_min, extremes.w_max, extremes.count,
                                              cfg.epsilon);
  std::vector<ThresholdState> instances;
  instances.reserve(rungs.size());
  for (double rung : rungs) instances.push_back(make_threshold_state(cfg, rung));

  SolveOutcome out;
  out.stats.w_min = extremes.w_min;
  out.stats.w_max = extremes.w_max;
  out.stats.live_instances_max = instances.size();

  auto second_pass = make_stream();
  detail::SeenSet seen(w.size());
  std::uint64_t fingerprint = 1469598103934665603ull;
  std::size_t count = 0;
  while (auto x = second_pass->next()) {
    seen.mark(*x);
    fingerprint ^= static_cast<std::uint64_t>(*x);
    fingerprint *= 1099511628211ull;
    ++count;
    double wx = w.at(*x);
    BestChoice singles = best_singleton(g, *x);
    detail::note_density(out.stats, singles, wx);
    std::size_t pairs = 0;
    for (std::size_t j = 0; j < instances.size(); ++j) {
      StepResult step = process_element(instances[j], cfg, g, w, *x, singles);
      pairs += static_cast<std::size_t>(instances[j].solution.size());
      if (trace) {
        trace({*x, static_cast<int>(j), step.kind, step.position, step.gain, instances[j].weight,
               instances[j].utility});
      }
    }
    ++out.stats.elements_seen;
    if (pairs > out.stats.peak_stored_pairs) out.stats.peak_stored_pairs = pairs;
  }
  if (count != extremes.count || fingerprint != extremes.order_fingerprint) {
    throw instance_error("two-pass solver: second pass does not replay the first");
  }

  const double bar = cfg.utility_bar();
  int best = -1;
  for (std::size_t j = 0; j < instances.size(); ++j) {
    if (instances[j].utility < bar) continue;
    if (best < 0 || instances[j].weight < instances[static_cast<std::size_t>(best)].weight) {
      best = static_cast<int>(j);
    }
  }
  out.stats.oracle_queries = g.queries();
  if (best < 0) {
    out.solution = KSet(cfg.k);
    out.infeasible = true;
    out.infeasible_reason =
        "no guess reached the utility bar; the threshold may exceed what the stream can cover";
    return out;
  }
  const ThresholdState& chosen = instances[static_cast<std::size_t>(best)];
  out.solution = chosen.solution;
  out.weight = chosen.weight;
  out.utility = chosen.utility;
  out.found_big = chosen.found_big;
  out.chosen_guess_index = best;
  out.chosen_guess = chosen.guess;
  return out;
}

// Dynamic guess window for the single-pass solver. lower_L unset stands for
// the -infinity sentinel: the window stays empty until the first element
// with a positive best singleton, which is also the first element any rung
// could accept.
struct GuessLadder {
  double base = 0.0;  // upper bound B on the optimum weight
  double one_minus_eps = 0.0;
  std::optional<double> lower_L;
  double upper_U = 0.0;
  std::map<int, ThresholdState> instances;  // ascending index = descending guess

  std::size_t stored_pairs() const {
    std::size_t pairs = 0;
    for (const auto& [j, st] : instances) pairs += static_cast<std::size_t>(st.solution.size());
    return pairs;
  }
};

inline GuessLadder make_guess_ladder(const ProblemConfig& cfg) {
  cfg.validate();
  if (!cfg.upper_bound_B) throw config_error("single-pass solver requires upper_bound_B");
  if (!(*cfg.upper_bound_B > 0.0)) throw config_error("upper_bound_B must be positive");
  GuessLadder ladder;
  ladder.base = *cfg.upper_bound_B;
  ladder.one_minus_eps = 1.0 - cfg.epsilon;
  ladder.upper_U = ladder.base;
  return ladder;
}

namespace detail {

// Rebuild the live window {(1-eps)^j * B in [L, U]}. Rungs above U are
// discarded for good (U never increases); rungs newly revealed at the bottom
// start from the empty k-set and never see earlier elements.
inline void regenerate_window(GuessLadder& ladder, const ProblemConfig& cfg) {
  if (!ladder.lower_L) return;
  int j = 0;
  double rung = ladder.base;
  while (rung > ladder.upper_U) {
    ++j;
    rung *= ladder.one_minus_eps;
  }
  ladder.instances.erase(ladder.instances.begin(), ladder.instances.lower_bound(j));
  for (; rung >= *ladder.lower_L; ++j, rung *= ladder.one_minus_eps) {
    if (ladder.instances.find(j) == ladder.instances.end()) {
      ladder.instances.emplace(j, make_threshold_state(cfg, rung));
    }
  }
}

}  // namespace detail

// Lower-bound update from one arriving element. The guess lower bound is
// eps*tau divided by the densest singleton seen so far, so it only ever
// decreases; each decrease reveals lower rungs.
inline void update_lower_bound(GuessLadder& ladder, const ProblemConfig& cfg,
                               const BestChoice& singleton_best, double element_weight) {
  bool update = false;
  if (singleton_best.value > 0.0) {
    update = !ladder.lower_L ||
             singleton_best.value / element_weight > cfg.epsilon * cfg.tau / *ladder.lower_L;
  }
  if (update) {
    ladder.lower_L = cfg.epsilon * cfg.tau * element_weight / singleton_best.value;
  }
  detail::regenerate_window(ladder, cfg);
}

inline void update_lower_bound(GuessLadder& ladder, const ProblemConfig& cfg,
                               const UtilityOracle& g, ElementId x, const WeightTable& w) {
  update_lower_bound(ladder, cfg, best_singleton(g, x), w.at(x));
}

enum class SelectionMode {
  min_weight,     // lightest instance among those clearing the utility bar
  paper_literal,  // highest-utility live instance
};

inline const char* to_string(SelectionMode mode) {
  return mode == SelectionMode::min_weight ? "min-weight" : "paper-literal";
}

// One pass with a caller-supplied upper bound B >= w(optimum). Per element:
// update L, rebuild the window, run every live instance, and pull U down to
// the smallest rung whose instance clears the utility bar. U updates take
// effect at the next element's window rebuild.
inline SolveOutcome run_single_pass(ElementStream& stream, const ProblemConfig& cfg,
                                    const UtilityOracle& oracle, const WeightTable& w,
                                    SelectionMode mode = SelectionMode::min_weight,
                                    const TraceSink& trace = {}) {
  GuessLadder ladder = make_guess_ladder(cfg);
  CountingOracle g(oracle);
  SolveOutcome out;
  detail::SeenSet seen(w.size());
  const double bar = cfg.utility_bar();
  while (auto x = stream.next()) {
    seen.mark(*x);
    double wx = w.at(*x);
    detail::note_weight(out.stats, wx);
    BestChoice singles = best_singleton(g, *x);
    detail::note_density(out.stats, singles, wx);
    update_lower_bound(ladder, cfg, singles, wx);
    if (ladder.instances.size() > out.stats.live_instances_max) {
      out.stats.live_instances_max = ladder.instances.size();
    }
    for (auto& [j, st] : ladder.instances) {
      StepResult step = process_element(st, cfg, g, w, *x, singles);
      if (trace) trace({*x, j, step.kind, step.position, step.gain, st.weight, st.utility});
      if (st.utility >= bar) ladder.upper_U = st.guess;
    }
    ++out.stats.elements_seen;
    std::size_t pairs = ladder.stored_pairs();
    if (pairs > out.stats.peak_stored_pairs) out.stats.peak_stored_pairs = pairs;
  }
  out.stats.oracle_queries = g.queries();

  int best = -1;
  const ThresholdState* best_state = nullptr;
  for (const auto& [j, st] : ladder.instances) {
    bool better;
    if (mode == SelectionMode::min_weight) {
      better = st.utility >= bar && (best_state == nullptr || st.weight < best_state->weight);
    } else {
      better = best_state == nullptr || st.utility > best_state->utility;
    }
    if (better) {
      best = j;
      best_state = &st;
    }
  }
  // Either mode reports infeasibility when nothing clears the bar; returning
  // a below-bar solution would be a silent guarantee violation.
  if (best_state == nullptr || best_state->utility < bar) {
    out.solution = KSet(cfg.k);
    out.infeasible = true;
    out.infeasible_reason =
        "no live guess reached the utility bar; the threshold may exceed what the stream can cover";
    return out;
  }
  out.solution = best_state->solution;
  out.weight = best_state->weight;
  out.utility = best_state->utility;
  out.found_big = best_state->found_big;
  out.chosen_guess_index = best;
  out.chosen_guess = best_state->guess;
  return out;
}

}  // namespace ksc

#endif  // KSC_LADDER_HPP_
