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
// Test-only reference implementations, coded independently of the library
// paths they check: a recursive exact enumerator with a different iteration
// order, and an uncached literal transcription of the threshold pass.

#ifndef KSC_TESTS_REFERENCE_HPP_
#define KSC_TESTS_REFERENCE_HPP_

#include <vector>

#include "ksc/kset.hpp"
#include "ksc/oracle.hpp"
#include "ksc/solver.hpp"

namespace ksc_tests {

struct RefExact {
  bool feasible = false;
  double weight = 0.0;
  double utility = 0.0;
};

namespace detail {

inline void ref_exact_recurse(const ksc::UtilityOracle& g, const ksc::WeightTable& w, double tau,
                              ksc::ElementId next, ksc::KSet& partial, RefExact& best) {
  if (next < 0) {
    double utility = g.eval(partial);
    if (utility >= tau) {
      double weight = ksc::kset_weight(w, partial);
      if (!best.feasible || weight < best.weight) {
        best.feasible = true;
        best.weight = weight;
        best.utility = utility;
      }
    }
    return;
  }
  // positions high to low, elements last to first: deliberately the
  // opposite order of the library enumerator
  for (ksc::Position i = g.arity(); i >= 1; --i) {
    ksc::KSet extended = ksc::insert(partial, next, i);
    ref_exact_recurse(g, w, tau, next - 1, extended, best);
  }
  ref_exact_recurse(g, w, tau, next - 1, partial, best);
}

}  // namespace detail

inline RefExact reference_exact_cover(const ksc::UtilityOracle& g, const ksc::WeightTable& w,
                                      double tau) {
  RefExact best;
  ksc::KSet empty(g.arity());
  detail::ref_exact_recurse(g, w, tau, g.ground_size() - 1, empty, best);
  return best;
}

// Literal threshold pass with a known guess: fresh evals everywhere, weight
// recomputed from scratch, no caching. Must produce exactly the same k-set
// as the production engine.
inline ksc::KSet reference_known_guess(const std::vector<ksc::ElementId>& order,
                                       const ksc::ProblemConfig& cfg, const ksc::UtilityOracle& g,
                                       const ksc::WeightTable& w) {
  const int k = cfg.k;
  const double guess = *cfg.guessed_opt;
  const double theta = cfg.epsilon * cfg.tau / guess;
  const double budget = cfg.monotone ? (3.0 - cfg.epsilon) / (2.0 * cfg.epsilon) * guess
                                     : (4.0 - cfg.epsilon) / (3.0 * cfg.epsilon) * guess;
  ksc::KSet solution(k);
  for (ksc::ElementId x : order) {
    ksc::Position best_pos = 0;
    double best_value = 0.0;
    for (ksc::Position i = 1; i <= k; ++i) {
      double v = g.eval(ksc::insert(ksc::KSet(k), x, i));
      if (best_pos == 0 || v > best_value) {
        best_pos = i;
        best_value = v;
      }
    }
    if (w.at(x) <= budget && best_value >= cfg.tau) {
      solution = ksc::insert(ksc::KSet(k), x, best_pos);
      continue;
    }
    ksc::Position gain_pos = 0;
    double gain = 0.0;
    for (ksc::Position i = 1; i <= k; ++i) {
      double delta = g.eval(ksc::insert(solution, x, i)) - g.eval(solution);
      if (gain_pos == 0 || delta > gain) {
        gain_pos = i;
        gain = delta;
      }
    }
    if (gain / w.at(x) >= theta && ksc::kset_weight(w, solution) + w.at(x) <= budget) {
      solution = ksc::insert(solution, x, gain_pos);
    }
  }
  return solution;
}

}  // namespace ksc_tests

#endif  // KSC_TESTS_REFERENCE_HPP_
