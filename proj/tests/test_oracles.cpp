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

#include "ksc/families.hpp"
#include "ksc/instance.hpp"
#include "ksc/oracle.hpp"
#include "support/fixtures.hpp"

using ksc_tests::kset_of;
using ksc_tests::mixed_marginal_tabular;
using ksc_tests::two_element_coverage;

TEST_CASE("coverage eval", "[oracles]") {
  auto inst = two_element_coverage();
  auto g = ksc::make_oracle(inst);
  CHECK(g->eval(ksc::KSet(2)) == 0.0);
  CHECK(g->eval(kset_of(2, {{0, 1}})) == 2.0);
  CHECK(g->eval(kset_of(2, {{0, 1}, {1, 1}})) == 3.0);
  CHECK(g->eval(kset_of(2, {{0, 2}})) == 1.0);
  CHECK(g->eval(kset_of(2, {{1, 2}})) == 2.0);
  CHECK(g->eval(kset_of(2, {{0, 1}, {1, 2}})) == 3.0);
}

TEST_CASE("eval rejects arity and ground mismatches", "[oracles]") {
  auto inst = two_element_coverage();
  auto g = ksc::make_oracle(inst);
  CHECK_THROWS_AS(g->eval(ksc::KSet(3)), ksc::config_error);
  CHECK_THROWS_AS(g->eval(kset_of(2, {{5, 1}})), ksc::config_error);
}

TEST_CASE("separable eval sums per-position coverages", "[oracles]") {
  ksc::SeparableOracle g(2, {
                                {{2.0}, {{0}, {}}},        // part 1: a covers the weight-2 item
                                {{1.0, 1.0}, {{0, 1}, {1}}},  // part 2
                            });
  CHECK(g.eval(ksc::KSet(2)) == 0.0);
  CHECK(g.eval(kset_of(2, {{0, 1}})) == 2.0);
  CHECK(g.eval(kset_of(2, {{0, 2}})) == 2.0);
  CHECK(g.eval(kset_of(2, {{1, 1}})) == 0.0);
  CHECK(g.eval(kset_of(2, {{0, 1}, {1, 2}})) == 3.0);
}

TEST_CASE("tabular eval looks up by position vector", "[oracles]") {
  auto inst = mixed_marginal_tabular();
  auto g = ksc::make_oracle(inst);
  CHECK(g->eval(ksc::KSet(2)) == 0.0);
  CHECK(g->eval(kset_of(2, {{1, 1}})) == 0.5);
  CHECK(g->eval(kset_of(2, {{0, 2}, {1, 1}})) == 1.0);
}

TEST_CASE("marginal gain", "[oracles]") {
  auto inst = two_element_coverage();
  auto g = ksc::make_oracle(inst);
  ksc::KSet empty(2);
  CHECK(ksc::marginal_gain(*g, empty, 0, 1) == g->eval(kset_of(2, {{0, 1}})));
  CHECK(ksc::marginal_gain(*g, kset_of(2, {{0, 1}}), 1, 1) == 1.0);
  CHECK_THROWS_AS(ksc::marginal_gain(*g, kset_of(2, {{0, 1}}), 0, 2), ksc::precondition_error);
}

TEST_CASE("marginals can be negative on non-monotone tables", "[oracles]") {
  auto inst = mixed_marginal_tabular();
  auto g = ksc::make_oracle(inst);
  ksc::KSet s = kset_of(2, {{1, 1}});
  CHECK(ksc::marginal_gain(*g, s, 0, 1) == Catch::Approx(-0.2));
  CHECK(ksc::marginal_gain(*g, s, 0, 2) == Catch::Approx(0.5));
  ksc::MarginalChoice choice = ksc::best_marginal(*g, s, 0);
  CHECK(choice.position == 2);
  CHECK(choice.gain == Catch::Approx(0.5));
  CHECK(choice.value_at == 1.0);
}

TEST_CASE("best_singleton picks the max with smallest-index ties", "[oracles]") {
  auto inst = two_element_coverage();
  auto g = ksc::make_oracle(inst);
  ksc::BestChoice a = ksc::best_singleton(*g, 0);
  CHECK(a.position == 1);
  CHECK(a.value == 2.0);

  // symmetric covers tie to position 1
  ksc::CoverageOracle symmetric(2, {1.0}, {{{0}, {0}}});
  ksc::BestChoice s = ksc::best_singleton(symmetric, 0);
  CHECK(s.position == 1);
  CHECK(s.value == 1.0);

  ksc::CoverageOracle single(1, {1.0, 1.0}, {{{0, 1}}});
  ksc::BestChoice one = ksc::best_singleton(single, 0);
  CHECK(one.position == 1);
  CHECK(one.value == 2.0);
}

TEST_CASE("best_marginal on the empty k-set agrees with best_singleton", "[oracles]") {
  auto inst = two_element_coverage();
  auto g = ksc::make_oracle(inst);
  for (ksc::ElementId x = 0; x < 2; ++x) {
    ksc::BestChoice single = ksc::best_singleton(*g, x);
    ksc::MarginalChoice marginal = ksc::best_marginal(*g, ksc::KSet(2), x);
    CHECK(single.position == marginal.position);
    CHECK(single.value == marginal.gain);
  }
}

TEST_CASE("best_marginal tie goes to the smaller position", "[oracles]") {
  auto inst = two_element_coverage();
  auto g = ksc::make_oracle(inst);
  // both positions of b gain exactly 1 on top of {(a,1)}
  ksc::MarginalChoice choice = ksc::best_marginal(*g, kset_of(2, {{0, 1}}), 1);
  CHECK(choice.position == 1);
  CHECK(choice.gain == 1.0);
  CHECK_THROWS_AS(ksc::best_marginal(*g, kset_of(2, {{0, 1}}), 0), ksc::precondition_error);
}

TEST_CASE("counting oracle counts every forwarded eval", "[oracles]") {
  auto inst = two_element_coverage();
  auto g = ksc::make_oracle(inst);
  ksc::CountingOracle counting(*g);
  CHECK(counting.queries() == 0);
  counting.eval(ksc::KSet(2));
  counting.eval(kset_of(2, {{0, 1}}));
  CHECK(counting.queries() == 2);

  ksc::best_singleton(counting, 0);
  CHECK(counting.queries() == 4);  // exactly k

  ksc::best_marginal(counting, kset_of(2, {{0, 1}}), 1, 2.0);
  CHECK(counting.queries() == 6);  // exactly k with the base supplied

  ksc::best_marginal(counting, kset_of(2, {{0, 1}}), 1);
  CHECK(counting.queries() == 9);  // k+1 without it

  counting.reset();
  CHECK(counting.queries() == 0);
}

TEST_CASE("oracles are deterministic", "[oracles]") {
  auto inst = two_element_coverage();
  auto g = ksc::make_oracle(inst);
  ksc::KSet s = kset_of(2, {{0, 1}, {1, 2}});
  CHECK(g->eval(s) == g->eval(s));
}
