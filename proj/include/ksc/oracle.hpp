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
// Utility-function oracle interface. Utilities are accessed only through
// value queries; complexity is measured in queries, so query accounting is a
// first-class concern (CountingOracle).

#ifndef KSC_ORACLE_HPP_
#define KSC_ORACLE_HPP_

#include <cstdint>
#include <optional>
#include <string>

#include "ksc/errors.hpp"
#include "ksc/kset.hpp"

namespace ksc {

// A non-negative normalized utility function over k-sets. eval must be
// deterministic and eval(empty) must be 0. Implementations are pure and safe
// to query concurrently.
class UtilityOracle {
 public:
  virtual ~UtilityOracle() = default;

  virtual double eval(const KSet& s) const = 0;
  virtual int arity() const = 0;       // k
  virtual int ground_size() const = 0;  // n

 protected:
  // Shared argument validation for implementations.
  void require_compatible(const KSet& s) const {
    if (s.arity() != arity()) {
      throw config_error("oracle eval: k-set arity " + std::to_string(s.arity()) +
                         " does not match oracle arity " + std::to_string(arity()));
    }
    if (!s.empty()) {
      const auto& pairs = s.pairs();
      ElementId last = pairs.rbegin()->first;
      if (pairs.begin()->first < 0 || last >= ground_size()) {
        throw config_error("oracle eval: element id outside ground set of size " +
                           std::to_string(ground_size()));
      }
    }
  }
};

// Forwards eval calls and counts them exactly.
class CountingOracle final : public UtilityOracle {
 public:
  explicit CountingOracle(const UtilityOracle& inner) : inner_(&inner) {}

  double eval(const KSet& s) const override {
    ++queries_;
    return inner_->eval(s);
  }
  int arity() const override { return inner_->arity(); }
  int ground_size() const override { return inner_->ground_size(); }

  std::uint64_t queries() const { return queries_; }
  void reset() { queries_ = 0; }

 private:
  const UtilityOracle* inner_;
  mutable std::uint64_t queries_ = 0;
};

// g(s + (x,i)) - g(s). Two queries; may be negative for non-monotone g.
inline double marginal_gain(const UtilityOracle& g, const KSet& s, ElementId x, Position i) {
  return g.eval(insert(s, x, i)) - g.eval(s);
}

struct BestChoice {
  Position position = 0;
  double value = 0.0;  // g((x, position)) for singletons, the gain for marginals
};

// argmax_i g((x,i)) with ties to the smallest position index. Exactly k queries.
inline BestChoice best_singleton(const UtilityOracle& g, ElementId x) {
  KSet empty(g.arity());
  BestChoice best;
  for (Position i = 1; i <= g.arity(); ++i) {
    double v = g.eval(insert(empty, x, i));
    if (best.position == 0 || v > best.value) best = {i, v};
  }
  return best;
}

struct MarginalChoice {
  Position position = 0;
  double gain = 0.0;      // g(s + (x,position)) - g(s)
  double value_at = 0.0;  // g(s + (x,position)), kept so callers can cache it
};

// argmax_i of the marginal gain at s, ties to the smallest index. Makes
// exactly k queries when the caller supplies g(s); otherwise k+1.
inline MarginalChoice best_marginal(const UtilityOracle& g, const KSet& s, ElementId x,
                                    std::optional<double> value_of_s = std::nullopt) {
  if (s.contains(x)) {
    throw precondition_error("best_marginal: element " + std::to_string(x) + " already assigned");
  }
  double base = value_of_s ? *value_of_s : g.eval(s);
  MarginalChoice best;
  for (Position i = 1; i <= g.arity(); ++i) {
    double v = g.eval(insert(s, x, i));
    if (best.position == 0 || v - base > best.gain) best = {i, v - base, v};
  }
  return best;
}

}  // namespace ksc

#endif  // KSC_ORACLE_HPP_
