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
// k-set algebra: a k-set is a k-tuple of pairwise-disjoint subsets of the
// ground set, stored as a sparse element -> position map so that disjointness
// is structural and memory stays proportional to the number of assigned
// pairs. Position 0 ("unassigned") is never stored.

#ifndef KSC_KSET_HPP_
#define KSC_KSET_HPP_

#include <map>
#include <string>
#include <vector>

#include "ksc/errors.hpp"

namespace ksc {

// Dense index into the instance's element table, 0..n-1.
using ElementId = int;

// 1..k for assigned pairs; 0 is the "not in any part" sentinel.
using Position = int;

class KSet {
 public:
  KSet() = default;
  explicit KSet(int arity) : arity_(arity) {
    if (arity < 1) throw config_error("KSet arity must be >= 1, got " + std::to_string(arity));
  }

  int arity() const { return arity_; }
  int size() const { return static_cast<int>(assignment_.size()); }
  bool empty() const { return assignment_.empty(); }

  bool contains(ElementId x) const { return assignment_.count(x) != 0; }

  // 0 when x is unassigned.
  Position position_of(ElementId x) const {
    auto it = assignment_.find(x);
    return it == assignment_.end() ? 0 : it->second;
  }

  // Assigned pairs in element-id order.
  const std::map<ElementId, Position>& pairs() const { return assignment_; }

  bool operator==(const KSet& other) const {
    return arity_ == other.arity_ && assignment_ == other.assignment_;
  }
  bool operator!=(const KSet& other) const { return !(*this == other); }

  friend KSet insert(const KSet& s, ElementId x, Position i);

 private:
  int arity_ = 0;
  std::map<ElementId, Position> assignment_;
};

namespace detail {
inline void require_same_arity(const KSet& s, const KSet& t, const char* op) {
  if (s.arity() != t.arity()) {
    throw config_error(std::string(op) + ": arity mismatch (" + std::to_string(s.arity()) +
                       " vs " + std::to_string(t.arity()) + ")");
  }
}
}  // namespace detail

// Returns s with the pair (x, i) added. Insertion never overwrites: an
// already-assigned x is a contract violation.
inline KSet insert(const KSet& s, ElementId x, Position i) {
  if (i < 1 || i > s.arity()) {
    throw precondition_error("insert: position " + std::to_string(i) + " outside 1.." +
                             std::to_string(s.arity()));
  }
  if (s.contains(x)) {
    throw precondition_error("insert: element " + std::to_string(x) + " already assigned");
  }
  KSet out = s;
  out.assignment_.emplace(x, i);
  return out;
}

// Coordinate-wise intersection: x stays at i iff both arguments assign x to i.
inline KSet meet(const KSet& s, const KSet& t) {
  detail::require_same_arity(s, t, "meet");
  KSet out(s.arity());
  for (const auto& [x, i] : s.pairs()) {
    if (t.position_of(x) == i) out = insert(out, x, i);
  }
  return out;
}

// Coordinate-wise union with cross-coordinate conflicts removed: x keeps
// position i iff it appears at i in at least one argument and at no other
// position in either. Disjointness holds by construction.
inline KSet join(const KSet& s, const KSet& t) {
  detail::require_same_arity(s, t, "join");
  KSet out(s.arity());
  for (const auto& [x, i] : s.pairs()) {
    Position j = t.position_of(x);
    if (j == 0 || j == i) out = insert(out, x, i);
  }
  for (const auto& [x, j] : t.pairs()) {
    if (s.position_of(x) == 0) out = insert(out, x, j);
  }
  return out;
}

// Partial order: every assigned pair of s is assigned identically in t.
inline bool precedes(const KSet& s, const KSet& t) {
  detail::require_same_arity(s, t, "precedes");
  for (const auto& [x, i] : s.pairs()) {
    if (t.position_of(x) != i) return false;
  }
  return true;
}

// The set of assigned elements, in id order.
inline std::vector<ElementId> support(const KSet& s) {
  std::vector<ElementId> out;
  out.reserve(s.pairs().size());
  for (const auto& [x, i] : s.pairs()) out.push_back(x);
  return out;
}

// Per-element positive costs, indexed by dense element id.
class WeightTable {
 public:
  WeightTable() = default;
  explicit WeightTable(std::vector<double> weights) : weights_(std::move(weights)) {
    for (std::size_t x = 0; x < weights_.size(); ++x) {
      if (!(weights_[x] > 0.0)) {
        throw instance_error("weight of element " + std::to_string(x) +
                             " must be strictly positive, got " + std::to_string(weights_[x]));
      }
    }
  }

  int size() const { return static_cast<int>(weights_.size()); }

  double at(ElementId x) const {
    if (x < 0 || x >= size()) {
      throw instance_error("no weight entry for element " + std::to_string(x));
    }
    return weights_[static_cast<std::size_t>(x)];
  }

  const std::vector<double>& values() const { return weights_; }

 private:
  std::vector<double> weights_;
};

// Total cost of the assigned elements, summed in element-id order.
inline double kset_weight(const WeightTable& w, const KSet& s) {
  double total = 0.0;
  for (const auto& [x, i] : s.pairs()) total += w.at(x);
  return total;
}

}  // namespace ksc

#endif  // KSC_KSET_HPP_
