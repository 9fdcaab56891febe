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
#include "ksc/generators.hpp"
#include "ksc/instance.hpp"
#include "ksc/verify.hpp"
#include "support/fixtures.hpp"

using ksc_tests::kset_of;
using ksc_tests::two_element_coverage;

namespace {

// All (k+1)^n values of a position-independent additive function; modular,
// hence orthant-submodular with equality everywhere.
std::vector<double> modular_table(const ksc::CodeSpace& codes, const std::vector<double>& gains) {
  std::vector<double> values(codes.size(), 0.0);
  for (std::uint64_t c = 0; c < codes.size(); ++c) {
    for (int x = 0; x < codes.n(); ++x) {
      if (codes.digit(c, x) != 0) values[c] += gains[static_cast<std::size_t>(x)];
    }
  }
  return values;
}

}  // namespace

TEST_CASE("coverage instances satisfy all structural properties", "[verify]") {
  auto inst = two_element_coverage();
  auto g = ksc::make_oracle(inst);
  CHECK(ksc::verify_ksubmodular(*g, 2, 2).passed());
  CHECK(ksc::verify_orthant_submodular(*g, 2, 2).passed());
  CHECK(ksc::verify_pairwise_monotone(*g, 2, 2).passed());
  CHECK(ksc::verify_monotone(*g, 2, 2).passed());
}

TEST_CASE("generated coverage verifies clean at desk scale", "[verify]") {
  ksc::InstanceFile inst = ksc::generate_coverage(7, 4, 2, 6, 0.5);
  auto g = ksc::make_oracle(inst);
  CHECK(ksc::verify_ksubmodular(*g, 4, 2).passed());
  CHECK(ksc::verify_orthant_submodular(*g, 4, 2).passed());
  CHECK(ksc::verify_pairwise_monotone(*g, 4, 2).passed());
  CHECK(ksc::verify_monotone(*g, 4, 2).passed());
}

TEST_CASE("constant zero passes everything", "[verify]") {
  ksc::CodeSpace codes(3, 2);
  ksc::TabularOracle zero(3, 2, std::vector<double>(codes.size(), 0.0));
  CHECK(ksc::verify_ksubmodular(zero, 3, 2).passed());
  CHECK(ksc::verify_orthant_submodular(zero, 3, 2).passed());
  CHECK(ksc::verify_pairwise_monotone(zero, 3, 2).passed());
  CHECK(ksc::verify_monotone(zero, 3, 2).passed());
}

TEST_CASE("modular functions sit on the orthant boundary", "[verify]") {
  ksc::CodeSpace codes(3, 2);
  ksc::TabularOracle g(3, 2, modular_table(codes, {1.0, 2.0, 0.5}));
  ksc::VerifierReport orthant = ksc::verify_orthant_submodular(g, 3, 2);
  CHECK(orthant.passed());
  CHECK(ksc::verify_ksubmodular(g, 3, 2).passed());
  CHECK(ksc::verify_monotone(g, 3, 2).passed());
}

TEST_CASE("an inflated mid-level entry breaks the lattice inequality", "[verify]") {
  ksc::CodeSpace codes(3, 2);
  std::vector<double> values = modular_table(codes, {1.0, 1.0, 1.0});
  values[codes.from_digits("100")] += 50.0;
  ksc::TabularOracle g(3, 2, values);
  ksc::VerifierReport report = ksc::verify_ksubmodular(g, 3, 2);
  REQUIRE_FALSE(report.passed());
  CHECK(report.violations.front().slack < -1.0);
}

TEST_CASE("a supermodular table violates orthant submodularity", "[verify]") {
  // g({x,y}) = 1 with both singletons 0: the gain grows along the order
  ksc::CodeSpace codes(2, 1);
  std::vector<double> values(codes.size(), 0.0);
  values[codes.from_digits("11")] = 1.0;
  ksc::TabularOracle g(2, 1, values);
  CHECK_FALSE(ksc::verify_orthant_submodular(g, 2, 1).passed());
  CHECK_FALSE(ksc::verify_ksubmodular(g, 2, 1).passed());
}

TEST_CASE("two simultaneously negative marginals fail pairwise monotonicity", "[verify]") {
  ksc::CodeSpace codes(2, 2);
  std::vector<double> values(codes.size(), 0.0);
  // y alone is worth 1; adding x at either position destroys the value
  values[codes.from_digits("01")] = 1.0;
  values[codes.from_digits("02")] = 1.0;
  ksc::TabularOracle g(2, 2, values);
  ksc::VerifierReport report = ksc::verify_pairwise_monotone(g, 2, 2);
  REQUIRE_FALSE(report.passed());
  CHECK(report.violations.front().slack == Catch::Approx(-2.0));
  CHECK_FALSE(ksc::verify_monotone(g, 2, 2).passed());
}

TEST_CASE("verifier budget refuses oversized enumerations", "[verify]") {
  auto inst = two_element_coverage();
  auto g = ksc::make_oracle(inst);
  CHECK_THROWS_AS(ksc::verify_ksubmodular(*g, 2, 2, 3), ksc::budget_error);
}

TEST_CASE("verifier rejects mismatched dimensions", "[verify]") {
  auto inst = two_element_coverage();
  auto g = ksc::make_oracle(inst);
  CHECK_THROWS_AS(ksc::verify_ksubmodular(*g, 3, 2), ksc::config_error);
}

TEST_CASE("rejection-sampled tables are k-submodular but not monotone", "[verify]") {
  ksc::InstanceFile inst = ksc::generate_nonmonotone_tabular(11, 3, 2, 200);
  auto g = ksc::make_oracle(inst);
  CHECK(ksc::verify_ksubmodular(*g, 3, 2).passed());
  CHECK(ksc::verify_orthant_submodular(*g, 3, 2).passed());
  CHECK(ksc::verify_pairwise_monotone(*g, 3, 2).passed());
  ksc::VerifierReport monotone = ksc::verify_monotone(*g, 3, 2);
  REQUIRE_FALSE(monotone.passed());
  CHECK(monotone.violations.front().slack < 0.0);
}

TEST_CASE("lemma-1 style bound holds on comparable pairs", "[verify]") {
  auto inst = two_element_coverage();
  auto g = ksc::make_oracle(inst);

  ksc::KSet s = kset_of(2, {{0, 1}});
  CHECK(ksc::check_lemma1(*g, s, s));  // equal arguments: both sides match
  CHECK(ksc::check_lemma1(*g, ksc::KSet(2), kset_of(2, {{0, 1}, {1, 2}})));

  // exhaustively over every comparable pair
  ksc::CodeSpace codes(2, 2);
  for (std::uint64_t a = 0; a < codes.size(); ++a) {
    for (std::uint64_t b = 0; b < codes.size(); ++b) {
      if (!codes.precedes(a, b)) continue;
      REQUIRE(ksc::check_lemma1(*g, codes.to_kset(a), codes.to_kset(b)));
    }
  }
  CHECK_THROWS_AS(ksc::check_lemma1(*g, kset_of(2, {{0, 1}}), kset_of(2, {{0, 2}})),
                  ksc::precondition_error);
}

TEST_CASE("pairwise monotonicity follows from verified k-submodularity", "[verify]") {
  ksc::InstanceFile inst = ksc::generate_nonmonotone_tabular(23, 3, 2, 200);
  auto g = ksc::make_oracle(inst);
  REQUIRE(ksc::verify_ksubmodular(*g, 3, 2).passed());
  ksc::CodeSpace codes(3, 2);
  for (std::uint64_t c = 0; c < codes.size(); ++c) {
    ksc::KSet s = codes.to_kset(c);
    for (ksc::ElementId x = 0; x < 3; ++x) {
      if (s.contains(x)) continue;
      double sum = ksc::marginal_gain(*g, s, x, 1) + ksc::marginal_gain(*g, s, x, 2);
      REQUIRE(sum >= -ksc::kVerifierTolerance);
    }
  }
}
