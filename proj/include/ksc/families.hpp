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
// Concrete utility-function families. None of their structural properties
// are taken on faith: instances used for verification-grade runs go through
// the exhaustive verifiers first (see verify.hpp).

#ifndef KSC_FAMILIES_HPP_
#define KSC_FAMILIES_HPP_

#include <string>
#include <utility>
#include <vector>

#include "ksc/enumeration.hpp"
#include "ksc/errors.hpp"
#include "ksc/kset.hpp"
#include "ksc/oracle.hpp"

namespace ksc {

// Weighted coverage: each pair (x,i) covers a fixed subset of a weighted
// universe; g(s) is the total weight of the union of covered items.
// Monotone whenever universe weights are non-negative.
class CoverageOracle final : public UtilityOracle {
 public:
  // covers[x][i-1] lists universe item indices covered by the pair (x, i).
  CoverageOracle(int k, std::vector<double> universe_weights,
                 std::vector<std::vector<std::vector<int>>> covers)
      : k_(k), universe_weights_(std::move(universe_weights)), covers_(std::move(covers)) {
    if (k_ < 1) throw config_error("CoverageOracle: k must be >= 1");
    for (std::size_t u = 0; u < universe_weights_.size(); ++u) {
      if (universe_weights_[u] < 0.0) {
        throw validation_error("universe item " + std::to_string(u) + " has negative weight");
      }
    }
    for (std::size_t x = 0; x < covers_.size(); ++x) {
      if (static_cast<int>(covers_[x].size()) != k_) {
        throw validation_error("element " + std::to_string(x) + " must declare exactly k=" +
                               std::to_string(k_) + " cover sets");
      }
      for (const auto& items : covers_[x]) {
        for (int u : items) {
          if (u < 0 || u >= static_cast<int>(universe_weights_.size())) {
            throw validation_error("cover set of element " + std::to_string(x) +
                                   " references universe item " + std::to_string(u) +
                                   " outside the universe");
          }
        }
      }
    }
  }

  double eval(const KSet& s) const override {
    require_compatible(s);
    std::vector<char> hit(universe_weights_.size(), 0);
    double total = 0.0;
    for (const auto& [x, i] : s.pairs()) {
      for (int u : covers_[static_cast<std::size_t>(x)][static_cast<std::size_t>(i - 1)]) {
        if (!hit[static_cast<std::size_t>(u)]) {
          hit[static_cast<std::size_t>(u)] = 1;
          total += universe_weights_[static_cast<std::size_t>(u)];
        }
      }
    }
    return total;
  }

  int arity() const override { return k_; }
  int ground_size() const override { return static_cast<int>(covers_.size()); }

 private:
  int k_;
  std::vector<double> universe_weights_;
  std::vector<std::vector<std::vector<int>>> covers_;
};

// Sum of k per-position coverage functions: g(s) = sum_i f_i(S_i), each f_i a
// weighted coverage over its own universe.
class SeparableOracle final : public UtilityOracle {
 public:
  struct Part {
    std::vector<double> universe_weights;
    std::vector<std::vector<int>> covers;  // covers[x] = items covered by x in this part
  };

  SeparableOracle(int n, std::vector<Part> parts) : n_(n), parts_(std::move(parts)) {
    if (parts_.empty()) throw config_error("SeparableOracle: needs k >= 1 parts");
    for (std::size_t p = 0; p < parts_.size(); ++p) {
      const Part& part = parts_[p];
      if (static_cast<int>(part.covers.size()) != n_) {
        throw validation_error("part " + std::to_string(p + 1) + " must cover exactly n=" +
                               std::to_string(n_) + " elements");
      }
      for (double wu : part.universe_weights) {
        if (wu < 0.0) throw validation_error("part " + std::to_string(p + 1) + " has a negative universe weight");
      }
      for (const auto& items : part.covers) {
        for (int u : items) {
          if (u < 0 || u >= static_cast<int>(part.universe_weights.size())) {
            throw validation_error("part " + std::to_string(p + 1) + " references universe item " +
                                   std::to_string(u) + " outside its universe");
          }
        }
      }
    }
  }

  double eval(const KSet& s) const override {
    require_compatible(s);
    double total = 0.0;
    std::vector<char> hit;
    for (std::size_t p = 0; p < parts_.size(); ++p) {
      const Part& part = parts_[p];
      hit.assign(part.universe_weights.size(), 0);
      for (const auto& [x, i] : s.pairs()) {
        if (static_cast<std::size_t>(i - 1) != p) continue;
        for (int u : part.covers[static_cast<std::size_t>(x)]) {
          if (!hit[static_cast<std::size_t>(u)]) {
            hit[static_cast<std::size_t>(u)] = 1;
            total += part.universe_weights[static_cast<std::size_t>(u)];
          }
        }
      }
    }
    return total;
  }

  int arity() const override { return static_cast<int>(parts_.size()); }
  int ground_size() const override { return n_; }

 private:
  int n_;
  std::vector<Part> parts_;
};

// Arbitrary function given by a full table over all (k+1)^n k-sets, indexed
// by enumeration code. The only way to represent non-monotone instances.
class TabularOracle final : public UtilityOracle {
 public:
  TabularOracle(int n, int k, std::vector<double> values)
      : codes_(n, k), values_(std::move(values)) {
    if (values_.size() != codes_.size()) {
      throw validation_error("table has " + std::to_string(values_.size()) + " entries, expected (k+1)^n = " +
                             std::to_string(codes_.size()));
    }
    if (values_.empty() || values_[0] != 0.0) {
      throw validation_error("table entry for the empty k-set must be exactly 0");
    }
    for (std::size_t c = 0; c < values_.size(); ++c) {
      if (values_[c] < 0.0) {
        throw validation_error("table entry " + std::to_string(c) + " is negative");
      }
    }
  }

  double eval(const KSet& s) const override {
    require_compatible(s);
    return values_[codes_.from_kset(s)];
  }

  int arity() const override { return codes_.k(); }
  int ground_size() const override { return codes_.n(); }

  const CodeSpace& codes() const { return codes_; }
  const std::vector<double>& values() const { return values_; }

 private:
  CodeSpace codes_;
  std::vector<double> values_;
};

}  // namespace ksc

#endif  // KSC_FAMILIES_HPP_
