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

#include <catch2/catch_amalgamated.hpp>

#include "ksc/enumeration.hpp"
#include "ksc/kset.hpp"
#include "support/fixtures.hpp"

using ksc::CodeSpace;
using ksc::KSet;
using ksc::WeightTable;
using ksc_tests::kset_of;

TEST_CASE("meet basics", "[kset]") {
  KSet s = kset_of(2, {{0, 1}, {1, 2}});
  KSet empty(2);
  CHECK(meet(s, s) == s);
  CHECK(meet(s, empty) == empty);
  CHECK(meet(empty, s) == empty);
  // same element on different positions vanishes
  CHECK(meet(kset_of(2, {{0, 1}}), kset_of(2, {{0, 2}})) == empty);
}

TEST_CASE("join basics", "[kset]") {
  KSet s = kset_of(2, {{0, 1}, {1, 2}});
  KSet empty(2);
  CHECK(join(s, empty) == s);
  CHECK(join(empty, s) == s);
  CHECK(join(kset_of(2, {{0, 1}}), kset_of(2, {{0, 2}})) == empty);
  CHECK(join(kset_of(2, {{0, 1}}), kset_of(2, {{1, 2}})) == kset_of(2, {{0, 1}, {1, 2}}));
}

TEST_CASE("insert adds one pair and rejects reassignment", "[kset]") {
  KSet empty(2);
  KSet a1 = insert(empty, 0, 1);
  CHECK(a1 == kset_of(2, {{0, 1}}));
  CHECK(insert(a1, 1, 2) == kset_of(2, {{0, 1}, {1, 2}}));
  CHECK(a1.size() == 1);
  CHECK_THROWS_AS(insert(a1, 0, 2), ksc::precondition_error);
  CHECK_THROWS_AS(insert(empty, 0, 0), ksc::precondition_error);
  CHECK_THROWS_AS(insert(empty, 0, 3), ksc::precondition_error);
}

TEST_CASE("precedes", "[kset]") {
  KSet empty(2);
  KSet t = kset_of(2, {{0, 1}, {1, 2}});
  CHECK(precedes(empty, t));
  CHECK(precedes(kset_of(2, {{0, 1}}), t));
  CHECK_FALSE(precedes(kset_of(2, {{0, 1}}), kset_of(2, {{0, 2}, {1, 2}})));
  CHECK_FALSE(precedes(t, kset_of(2, {{0, 1}})));
}

TEST_CASE("support", "[kset]") {
  CHECK(support(KSet(2)).empty());
  CHECK(support(kset_of(2, {{0, 1}, {1, 2}})) == std::vector<ksc::ElementId>{0, 1});
  CHECK(support(join(kset_of(2, {{0, 1}}), kset_of(2, {{0, 2}}))).empty());
}

TEST_CASE("arity mismatch is a configuration error", "[kset]") {
  CHECK_THROWS_AS(meet(KSet(2), KSet(3)), ksc::config_error);
  CHECK_THROWS_AS(join(KSet(2), KSet(3)), ksc::config_error);
  CHECK_THROWS_AS(precedes(KSet(2), KSet(3)), ksc::config_error);
}

TEST_CASE("kset_weight", "[kset]") {
  WeightTable w({1.0, 2.0});
  CHECK(kset_weight(w, KSet(2)) == 0.0);
  CHECK(kset_weight(w, kset_of(2, {{0, 1}, {1, 1}})) == 3.0);
  CHECK(kset_weight(w, kset_of(2, {{1, 2}})) == 2.0);
  CHECK_THROWS_AS(kset_weight(w, kset_of(2, {{2, 1}})), ksc::instance_error);
}

TEST_CASE("weights must be strictly positive", "[kset]") {
  CHECK_THROWS_AS(WeightTable({1.0, 0.0}), ksc::instance_error);
  CHECK_THROWS_AS(WeightTable({-2.0}), ksc::instance_error);
}

// Exhaustive algebra properties, cross-checked against the independent
// digit-wise route.
TEST_CASE("lattice laws hold exhaustively", "[kset][exhaustive]") {
  auto [n, k] = GENERATE(std::pair<int, int>{3, 2}, std::pair<int, int>{3, 3},
                         std::pair<int, int>{4, 2});
  CodeSpace codes(n, k);
  std::vector<KSet> all;
  all.reserve(codes.size());
  for (std::uint64_t c = 0; c < codes.size(); ++c) all.push_back(codes.to_kset(c));
  KSet empty(k);

  for (std::uint64_t a = 0; a < codes.size(); ++a) {
    const KSet& s = all[a];
    REQUIRE(join(s, empty) == s);
    REQUIRE(meet(s, empty) == empty);
    for (std::uint64_t b = 0; b < codes.size(); ++b) {
      const KSet& t = all[b];
      KSet st = meet(s, t);
      KSet jt = join(s, t);
      REQUIRE(st == meet(t, s));
      REQUIRE(jt == join(t, s));
      REQUIRE(precedes(st, s));
      REQUIRE(precedes(st, t));
      // digit-wise route agrees with the sparse route
      REQUIRE(codes.from_kset(st) == codes.meet(a, b));
      REQUIRE(codes.from_kset(jt) == codes.join(a, b));
      REQUIRE(ksc::precedes(s, t) == codes.precedes(a, b));
      if (ksc::precedes(s, t)) {
        REQUIRE(st == s);
        REQUIRE(jt == t);
      }
    }
  }
}

TEST_CASE("insert grows support and weight additively", "[kset][exhaustive]") {
  int n = 3, k = 2;
  CodeSpace codes(n, k);
  WeightTable w({1.0, 2.0, 4.0});
  for (std::uint64_t c = 0; c < codes.size(); ++c) {
    KSet s = codes.to_kset(c);
    for (ksc::ElementId x = 0; x < n; ++x) {
      if (s.contains(x)) continue;
      for (ksc::Position i = 1; i <= k; ++i) {
        KSet bigger = insert(s, x, i);
        REQUIRE(bigger.size() == s.size() + 1);
        REQUIRE(bigger.contains(x));
        REQUIRE(precedes(s, bigger));
        REQUIRE(kset_weight(w, bigger) == kset_weight(w, s) + w.at(x));
      }
    }
  }
}
