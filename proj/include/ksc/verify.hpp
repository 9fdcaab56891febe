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
// Exhaustive structural verifiers. Each verifier tabulates g over all
// (k+1)^n k-sets and checks the defining inequality over every relevant
// pair. An inequality counts as violated only when its slack drops below
// -kVerifierTolerance; coverage arithmetic is exact at desk scale but
// tabulated values may carry rounding from summation.

#ifndef KSC_VERIFY_HPP_
#define KSC_VERIFY_HPP_

#include <cstdint>
#include <string>
#include <vector>

#include "ksc/enumeration.hpp"
#include "ksc/errors.hpp"
#include "ksc/kset.hpp"
#include "ksc/oracle.hpp"

namespace ksc {

inline constexpr double kVerifierTolerance = 1e-9;

struct Violation {
  std::uint64_t code_s = 0;
  std::uint64_t code_t = 0;   // second k-set of the pair, when the check is pairwise
  ElementId element = -1;     // element involved, when the check is a marginal
  Position position = 0;      // position involved (first of the two for pairwise monotonicity)
  Position position2 = 0;
  double slack = 0.0;         // lhs - rhs of the defining inequality; < -tolerance
};

struct VerifierReport {
  std::string property;
  int n = 0;
  int k = 0;
  std::uint64_t checks = 0;
  std::vector<Violation> violations;

  bool passed() const { return violations.empty(); }
};

namespace detail {

// One eval per k-set, shared by all checks of a verifier run.
inline std::vector<double> tabulate(const UtilityOracle& g, const CodeSpace& codes) {
  std::vector<double> table(codes.size());
  for (std::uint64_t c = 0; c < codes.size(); ++c) {
    table[c] = g.eval(codes.to_kset(c));
  }
  return table;
}

inline CodeSpace make_codes(const UtilityOracle& g, int n, int k, std::uint64_t budget) {
  if (n != g.ground_size() || k != g.arity()) {
    throw config_error("verifier: (n,k) = (" + std::to_string(n) + "," + std::to_string(k) +
                       ") does not match the oracle's (" + std::to_string(g.ground_size()) + "," +
                       std::to_string(g.arity()) + ")");
  }
  return CodeSpace(n, k, budget);
}

// Enumerates all comparable pairs s <= t by walking, per element, the
// (2k+1) digit combinations (0,0), (0,i), (i,i).
template <typename Fn>
void for_each_comparable_pair(const CodeSpace& codes, Fn&& fn) {
  int n = codes.n();
  int k = codes.k();
  int states = 2 * k + 1;  // 0 -> (0,0); 1..k -> (0,i); k+1..2k -> (i,i)
  std::vector<int> odo(static_cast<std::size_t>(n), 0);
  while (true) {
    std::uint64_t s = 0;
    std::uint64_t t = 0;
    for (ElementId e = 0; e < n; ++e) {
      int st = odo[static_cast<std::size_t>(e)];
      if (st == 0) continue;
      if (st <= k) {
        t = codes.with_digit(t, e, st);
      } else {
        s = codes.with_digit(s, e, st - k);
        t = codes.with_digit(t, e, st - k);
      }
    }
    fn(s, t);
    int e = n - 1;
    while (e >= 0 && odo[static_cast<std::size_t>(e)] == states - 1) {
      odo[static_cast<std::size_t>(e)] = 0;
      --e;
    }
    if (e < 0) break;
    ++odo[static_cast<std::size_t>(e)];
  }
}

}  // namespace detail

// g(s) + g(t) >= g(meet(s,t)) + g(join(s,t)) over all unordered pairs.
inline VerifierReport verify_ksubmodular(const UtilityOracle& g, int n, int k,
                                         std::uint64_t budget = kEnumerationBudget) {
  CodeSpace codes = detail::make_codes(g, n, k, budget);
  std::vector<double> table = detail::tabulate(g, codes);
  VerifierReport report{"k-submodular", n, k, 0, {}};
  for (std::uint64_t s = 0; s < codes.size(); ++s) {
    for (std::uint64_t t = s; t < codes.size(); ++t) {
      double slack = table[s] + table[t] - table[codes.meet(s, t)] - table[codes.join(s, t)];
      ++report.checks;
      if (slack < -kVerifierTolerance) {
        report.violations.push_back({s, t, -1, 0, 0, slack});
      }
    }
  }
  return report;
}

// Marginal gains shrink along the partial order: for s <= t, x outside E(t),
// gain of (x,i) at s >= gain at t.
inline VerifierReport verify_orthant_submodular(const UtilityOracle& g, int n, int k,
                                                std::uint64_t budget = kEnumerationBudget) {
  CodeSpace codes = detail::make_codes(g, n, k, budget);
  std::vector<double> table = detail::tabulate(g, codes);
  VerifierReport report{"orthant-submodular", n, k, 0, {}};
  detail::for_each_comparable_pair(codes, [&](std::uint64_t s, std::uint64_t t) {
    for (ElementId x = 0; x < n; ++x) {
      if (codes.digit(t, x) != 0) continue;
      for (Position i = 1; i <= k; ++i) {
        double gain_s = table[codes.with_digit(s, x, i)] - table[s];
        double gain_t = table[codes.with_digit(t, x, i)] - table[t];
        double slack = gain_s - gain_t;
        ++report.checks;
        if (slack < -kVerifierTolerance) {
          report.violations.push_back({s, t, x, i, 0, slack});
        }
      }
    }
  });
  return report;
}

// For distinct positions i != j, the two marginals of x at s sum to >= 0.
inline VerifierReport verify_pairwise_monotone(const UtilityOracle& g, int n, int k,
                                               std::uint64_t budget = kEnumerationBudget) {
  CodeSpace codes = detail::make_codes(g, n, k, budget);
  std::vector<double> table = detail::tabulate(g, codes);
  VerifierReport report{"pairwise-monotone", n, k, 0, {}};
  for (std::uint64_t s = 0; s < codes.size(); ++s) {
    for (ElementId x = 0; x < n; ++x) {
      if (codes.digit(s, x) != 0) continue;
      for (Position i = 1; i <= k; ++i) {
        double gain_i = table[codes.with_digit(s, x, i)] - table[s];
        for (Position j = i + 1; j <= k; ++j) {
          double gain_j = table[codes.with_digit(s, x, j)] - table[s];
          double slack = gain_i + gain_j;
          ++report.checks;
          if (slack < -kVerifierTolerance) {
            report.violations.push_back({s, s, x, i, j, slack});
          }
        }
      }
    }
  }
  return report;
}

// g(s) <= g(t) for all comparable pairs s <= t.
inline VerifierReport verify_monotone(const UtilityOracle& g, int n, int k,
                                      std::uint64_t budget = kEnumerationBudget) {
  CodeSpace codes = detail::make_codes(g, n, k, budget);
  std::vector<double> table = detail::tabulate(g, codes);
  VerifierReport report{"monotone", n, k, 0, {}};
  detail::for_each_comparable_pair(codes, [&](std::uint64_t s, std::uint64_t t) {
    double slack = table[t] - table[s];
    ++report.checks;
    if (slack < -kVerifierTolerance) {
      report.violations.push_back({s, t, -1, 0, 0, slack});
    }
  });
  return report;
}

// For s <= t: g(t) <= g(s) + sum over x in E(t)\E(s) of the gain of
// (x, t(x)) at s. Holds for every k-submodular g.
inline bool check_lemma1(const UtilityOracle& g, const KSet& s, const KSet& t) {
  if (!precedes(s, t)) {
    throw precondition_error("check_lemma1: first argument must precede the second");
  }
  double lhs = g.eval(t);
  double rhs = g.eval(s);
  for (const auto& [x, i] : t.pairs()) {
    if (!s.contains(x)) rhs += marginal_gain(g, s, x, i);
  }
  return rhs - lhs >= -kVerifierTolerance;
}

}  // namespace ksc

#endif  // KSC_VERIFY_HPP_
