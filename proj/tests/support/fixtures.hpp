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
// Shared fixtures. The two-element coverage instance used throughout:
// ground {a, b} with weights 1 and 2, unit-weight universe {0, 1, 2},
// a covers {0,1} at position 1 and {0} at position 2,
// b covers {2} at position 1 and {1,2} at position 2.
// Utility is covered weight; the full universe is coverable, so the
// exact cover for tau = 3 has weight 3.

#ifndef KSC_TESTS_FIXTURES_HPP_
#define KSC_TESTS_FIXTURES_HPP_

#include <string>
#include <vector>

#include "ksc/instance.hpp"
#include "ksc/kset.hpp"

namespace ksc_tests {

inline ksc::InstanceFile two_element_coverage() {
  ksc::InstanceFile inst;
  inst.kind = ksc::InstanceFile::Kind::coverage;
  inst.k = 2;
  inst.element_names = {"a", "b"};
  inst.element_weights = {1.0, 2.0};
  inst.declared_monotone = true;
  ksc::CoveragePayload cov;
  cov.universe_weights = {1.0, 1.0, 1.0};
  cov.covers = {
      {{0, 1}, {0}},     // a
      {{2}, {1, 2}},     // b
  };
  inst.payload = std::move(cov);
  return inst;
}

// The same instance plus a third element c of weight 1 whose position-1
// pair covers the whole universe: a "big" element for any threshold <= 3.
inline ksc::InstanceFile three_element_coverage_with_big() {
  ksc::InstanceFile inst;
  inst.kind = ksc::InstanceFile::Kind::coverage;
  inst.k = 2;
  inst.element_names = {"a", "b", "c"};
  inst.element_weights = {1.0, 2.0, 1.0};
  inst.declared_monotone = true;
  ksc::CoveragePayload cov;
  cov.universe_weights = {1.0, 1.0, 1.0};
  cov.covers = {
      {{0, 1}, {0}},
      {{2}, {1, 2}},
      {{0, 1, 2}, {}},
  };
  inst.payload = std::move(cov);
  return inst;
}

// Full 9-entry table over n=2, k=2 with one negative and one positive
// marginal of element 0 at {(1,1)}; not k-submodular, only used to pin the
// argmax behavior of marginal scans.
inline ksc::InstanceFile mixed_marginal_tabular() {
  ksc::InstanceFile inst;
  inst.kind = ksc::InstanceFile::Kind::tabular;
  inst.k = 2;
  inst.element_names = {"x", "y"};
  inst.element_weights = {1.0, 1.0};
  // code digits: element x first, then y
  // 00  01  02  10  11  12  20  21  22
  inst.payload = ksc::TabularPayload{{0.0, 0.5, 0.4, 0.1, 0.3, 0.5, 0.6, 1.0, 0.9}};
  return inst;
}

inline ksc::KSet kset_of(int k, std::initializer_list<std::pair<ksc::ElementId, ksc::Position>> pairs) {
  ksc::KSet s(k);
  for (const auto& [x, i] : pairs) s = ksc::insert(s, x, i);
  return s;
}

}  // namespace ksc_tests

#endif  // KSC_TESTS_FIXTURES_HPP_
