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
// Exact ground truth by full enumeration, plus the bicriteria bound checker
// that certifies solver outputs against it. Enumeration is guarded, never
// sampled: a partial enumeration could silently certify a wrong bound.

#ifndef KSC_EXACT_HPP_
#define KSC_EXACT_HPP_

#include <cstdint>
#include <optional>
#include <string>

#include "ksc/enumeration.hpp"
#include "ksc/errors.hpp"
#include "ksc/kset.hpp"
#include "ksc/oracle.hpp"

namespace ksc {

struct ExactSolution {
  KSet solution;
  double weight = 0.0;
  double utility = 0.0;
  bool feasible = false;
};

// Minimum-weight k-set with g >= tau, by enumerating all (k+1)^n k-sets in
// ascending code order; the first optimum kept is the lexicographically
// smallest assignment vector.
inline ExactSolution exact_cover(const UtilityOracle& g, const WeightTable& w, double tau, int n,
                                 int k, std::uint64_t budget = kEnumerationBudget) {
  CodeSpace codes(n, k, budget);
  std::optional<std::uint64_t> best;
  double best_weight = 0.0;
  double best_utility = 0.0;
  for (std::uint64_t c = 0; c < codes.size(); ++c) {
    KSet s = codes.to_kset(c);
    double utility = g.eval(s);
    if (utility < tau) continue;
    double weight = kset_weight(w, s);
    if (!best || weight < best_weight) {
      best = c;
      best_weight = weight;
      best_utility = utility;
    }
  }
  ExactSolution out;
  if (best) {
    out.solution = codes.to_kset(*best);
    out.weight = best_weight;
    out.utility = best_utility;
    out.feasible = true;
  } else {
    out.solution = KSet(k);
  }
  return out;
}

// Maximum of g over all k-sets; used to validate that a threshold is
// attainable before a run is expected to succeed.
inline double max_utility(const UtilityOracle& g, int n, int k,
                          std::uint64_t budget = kEnumerationBudget) {
  CodeSpace codes(n, k, budget);
  double best = 0.0;  // the empty k-set always evaluates to 0
  for (std::uint64_t c = 0; c < codes.size(); ++c) {
    double v = g.eval(codes.to_kset(c));
    if (v > best) best = v;
  }
  return best;
}

struct BoundFactors {
  double alpha = 0.0;  // weight factor vs the reference (guess or optimum weight)
  double beta = 0.0;   // utility factor, as a fraction of tau
};

// The proven bicriteria factors. The known-guess solver (algorithm 1) is
// measured against its guess; the ladder solvers (2 and 3) pay an extra
// 1/(1-eps) against the true optimum weight.
inline BoundFactors theorem_factors(double epsilon, bool monotone, int algorithm) {
  if (!(epsilon > 0.0 && epsilon < 1.0)) throw config_error("epsilon must lie in (0,1)");
  if (algorithm < 1 || algorithm > 3) {
    throw config_error("algorithm must be 1, 2 or 3, got " + std::to_string(algorithm));
  }
  BoundFactors f;
  f.alpha = monotone ? (3.0 - epsilon) / (2.0 * epsilon) : (4.0 - epsilon) / (3.0 * epsilon);
  if (algorithm != 1) f.alpha /= 1.0 - epsilon;
  f.beta = (1.0 - epsilon) / (monotone ? 2.0 : 3.0);
  return f;
}

struct BoundVerdict {
  double reference_weight = 0.0;  // what alpha multiplies
  double alpha = 0.0;
  double beta = 0.0;
  double weight = 0.0;
  double weight_bound = 0.0;  // alpha * reference
  double weight_slack = 0.0;  // bound - weight; pass while >= -1e-9
  double utility = 0.0;
  double utility_bar = 0.0;    // beta * tau
  double utility_slack = 0.0;  // utility - bar; pass while >= -1e-9
  bool weight_ok = false;
  bool utility_ok = false;
  bool passed = false;
};

inline constexpr double kBoundTolerance = 1e-9;

// Checks w(result) <= alpha * reference and g(result) >= beta * tau. The
// reference defaults to the exact optimum weight; the known-guess solver is
// checked against its guess instead.
inline BoundVerdict check_bicriteria(const KSet& result, const ExactSolution& exact,
                                     const BoundFactors& factors, double tau,
                                     const UtilityOracle& g, const WeightTable& w,
                                     std::optional<double> reference_weight = std::nullopt) {
  if (!exact.feasible) {
    throw precondition_error("check_bicriteria: exact baseline found the instance infeasible");
  }
  BoundVerdict v;
  v.reference_weight = reference_weight ? *reference_weight : exact.weight;
  v.alpha = factors.alpha;
  v.beta = factors.beta;
  v.weight = kset_weight(w, result);
  v.weight_bound = factors.alpha * v.reference_weight;
  v.weight_slack = v.weight_bound - v.weight;
  v.utility = g.eval(result);
  v.utility_bar = factors.beta * tau;
  v.utility_slack = v.utility - v.utility_bar;
  v.weight_ok = v.weight_slack >= -kBoundTolerance;
  v.utility_ok = v.utility_slack >= -kBoundTolerance;
  v.passed = v.weight_ok && v.utility_ok;
  return v;
}

}  // namespace ksc

#endif  // KSC_EXACT_HPP_
