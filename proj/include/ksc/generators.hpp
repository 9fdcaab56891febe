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
// Seeded instance generators. Draws come straight from the mt19937_64
// output stream (no std distributions, which are implementation-defined),
// and every value lands on a coarse binary grid so that downstream sums stay
// exactly representable. Fixed seed means byte-identical instance files.

#ifndef KSC_GENERATORS_HPP_
#define KSC_GENERATORS_HPP_

#include <random>
#include <string>
#include <utility>
#include <vector>

#include "ksc/errors.hpp"
#include "ksc/instance.hpp"
#include "ksc/verify.hpp"

namespace ksc {

namespace detail {

class Rng {
 public:
  explicit Rng(std::uint64_t seed) : eng_(seed) {}

  std::uint64_t next() { return eng_(); }

  // Uniform-ish draw in [0, m); the modulo bias is irrelevant here and the
  // result is reproducible across standard libraries.
  int below(int m) { return static_cast<int>(next() % static_cast<std::uint64_t>(m)); }

  double unit() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }

 private:
  std::mt19937_64 eng_;
};

inline std::vector<std::string> element_names(int n) {
  std::vector<std::string> names;
  names.reserve(static_cast<std::size_t>(n));
  for (int x = 0; x < n; ++x) names.push_back("e" + std::to_string(x));
  return names;
}

inline std::vector<double> element_weights(Rng& rng, int n) {
  std::vector<double> weights;
  weights.reserve(static_cast<std::size_t>(n));
  for (int x = 0; x < n; ++x) weights.push_back(static_cast<double>(1 + rng.below(8)));
  return weights;
}

}  // namespace detail

// Monotone weighted-coverage instance: each pair (x,i) covers a random
// density-fraction of a small weighted universe.
inline InstanceFile generate_coverage(std::uint64_t seed, int n, int k, int universe_size,
                                      double density) {
  if (n < 1 || k < 1 || universe_size < 1) {
    throw config_error("generate_coverage: n, k and universe_size must be >= 1");
  }
  if (!(density > 0.0 && density <= 1.0)) {
    throw config_error("generate_coverage: density must lie in (0,1]");
  }
  detail::Rng rng(seed);
  InstanceFile inst;
  inst.kind = InstanceFile::Kind::coverage;
  inst.k = k;
  inst.element_names = detail::element_names(n);
  inst.element_weights = detail::element_weights(rng, n);
  inst.declared_monotone = true;

  CoveragePayload cov;
  cov.universe_weights.reserve(static_cast<std::size_t>(universe_size));
  for (int u = 0; u < universe_size; ++u) {
    cov.universe_weights.push_back(static_cast<double>(1 + rng.below(4)));
  }
  cov.covers.assign(static_cast<std::size_t>(n), {});
  for (int x = 0; x < n; ++x) {
    for (int i = 0; i < k; ++i) {
      std::vector<int> items;
      for (int u = 0; u < universe_size; ++u) {
        if (rng.unit() < density) items.push_back(u);
      }
      cov.covers[static_cast<std::size_t>(x)].push_back(std::move(items));
    }
  }
  inst.payload = std::move(cov);
  return inst;
}

// Monotone separable instance: per-position coverage functions over
// independent universes.
inline InstanceFile generate_separable(std::uint64_t seed, int n, int k, int universe_size,
                                       double density) {
  if (n < 1 || k < 1 || universe_size < 1) {
    throw config_error("generate_separable: n, k and universe_size must be >= 1");
  }
  if (!(density > 0.0 && density <= 1.0)) {
    throw config_error("generate_separable: density must lie in (0,1]");
  }
  detail::Rng rng(seed);
  InstanceFile inst;
  inst.kind = InstanceFile::Kind::separable;
  inst.k = k;
  inst.element_names = detail::element_names(n);
  inst.element_weights = detail::element_weights(rng, n);
  inst.declared_monotone = true;

  SeparablePayload sep;
  for (int p = 0; p < k; ++p) {
    SeparableOracle::Part part;
    for (int u = 0; u < universe_size; ++u) {
      part.universe_weights.push_back(static_cast<double>(1 + rng.below(4)));
    }
    part.covers.assign(static_cast<std::size_t>(n), {});
    for (int x = 0; x < n; ++x) {
      for (int u = 0; u < universe_size; ++u) {
        if (rng.unit() < density) part.covers[static_cast<std::size_t>(x)].push_back(u);
      }
    }
    sep.parts.push_back(std::move(part));
  }
  inst.payload = std::move(sep);
  return inst;
}

namespace detail {

// One candidate table: a conflict-penalty function over a random graph.
// Assigned elements earn a per-element reward c_x; every edge whose
// endpoints share a position pays a penalty d_e. With c_x in
// [D_x/2, D_x), where D_x is x's total incident penalty, the table is
// k-submodular (marginals only shrink as parts fill up, and no two
// positions can both be penalized past the reward) yet non-monotone as soon
// as one vertex's neighborhood concentrates in a single part. Values stay
// on a 0.25 grid, bounded by the total reward, with the empty entry 0.
inline std::vector<double> conflict_penalty_table(Rng& rng, const CodeSpace& codes) {
  int n = codes.n();
  std::vector<std::vector<std::pair<int, double>>> adjacency(static_cast<std::size_t>(n));
  std::vector<double> incident(static_cast<std::size_t>(n), 0.0);
  for (int u = 0; u < n; ++u) {
    for (int v = u + 1; v < n; ++v) {
      if (rng.below(2) == 0) continue;
      double penalty = 0.5 * static_cast<double>(1 + rng.below(4));
      adjacency[static_cast<std::size_t>(u)].push_back({v, penalty});
      adjacency[static_cast<std::size_t>(v)].push_back({u, penalty});
      incident[static_cast<std::size_t>(u)] += penalty;
      incident[static_cast<std::size_t>(v)] += penalty;
    }
  }
  std::vector<double> reward(static_cast<std::size_t>(n));
  for (int x = 0; x < n; ++x) {
    double dx = incident[static_cast<std::size_t>(x)];
    if (dx > 0.0) {
      int steps = static_cast<int>(dx / 0.25) - static_cast<int>(dx / 0.5);
      reward[static_cast<std::size_t>(x)] = dx / 2.0 + 0.25 * rng.below(steps);
    } else {
      reward[static_cast<std::size_t>(x)] = 0.25 * static_cast<double>(1 + rng.below(8));
    }
  }
  std::vector<double> table(codes.size(), 0.0);
  for (std::uint64_t c = 1; c < codes.size(); ++c) {
    double value = 0.0;
    for (int x = 0; x < n; ++x) {
      Position i = codes.digit(c, x);
      if (i == 0) continue;
      value += reward[static_cast<std::size_t>(x)];
      for (const auto& [v, penalty] : adjacency[static_cast<std::size_t>(x)]) {
        if (v > x && codes.digit(c, v) == i) value -= penalty;
      }
    }
    table[c] = value;
  }
  return table;
}

}  // namespace detail

// Rejection-samples seeded candidate tables until one is verified
// k-submodular and pairwise monotone but not monotone. The verifiers are
// the acceptance gate; the candidate family only makes acceptance likely.
inline InstanceFile generate_nonmonotone_tabular(std::uint64_t seed, int n, int k,
                                                 int max_attempts) {
  if (n < 1 || k < 1) throw config_error("generate_nonmonotone_tabular: n and k must be >= 1");
  if (k > 9) throw config_error("generate_nonmonotone_tabular: tabular files require k <= 9");
  if (max_attempts < 1) throw config_error("generate_nonmonotone_tabular: max_attempts must be >= 1");
  CodeSpace codes(n, k);
  detail::Rng rng(seed);
  for (int attempt = 0; attempt < max_attempts; ++attempt) {
    std::vector<double> values = detail::conflict_penalty_table(rng, codes);
    TabularOracle oracle(n, k, values);
    if (!verify_ksubmodular(oracle, n, k).passed()) continue;
    if (!verify_pairwise_monotone(oracle, n, k).passed()) continue;
    if (verify_monotone(oracle, n, k).passed()) continue;  // want a monotonicity witness

    InstanceFile inst;
    inst.kind = InstanceFile::Kind::tabular;
    inst.k = k;
    inst.element_names = detail::element_names(n);
    inst.element_weights = detail::element_weights(rng, n);
    inst.declared_monotone = false;
    inst.payload = TabularPayload{std::move(values)};
    return inst;
  }
  throw generation_error("no valid non-monotone table after " + std::to_string(max_attempts) +
                         " attempts (n=" + std::to_string(n) + ", k=" + std::to_string(k) +
                         "); increase the budget or change the seed");
}

}  // namespace ksc

#endif  // KSC_GENERATORS_HPP_
