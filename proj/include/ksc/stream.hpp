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

#ifndef KSC_STREAM_HPP_
#define KSC_STREAM_HPP_

#include <functional>
#include <memory>
#include <optional>
#include <random>
#include <utility>
#include <vector>

#include "ksc/kset.hpp"

namespace ksc {

// One-directional pull stream of element ids.
class ElementStream {
 public:
  virtual ~ElementStream() = default;
  // Next element, or nullopt at end of stream.
  virtual std::optional<ElementId> next() = 0;
};

// Produces a fresh pass over the same elements in the same order; required
// by the two-pass solver.
using StreamFactory = std::function<std::unique_ptr<ElementStream>()>;

class VectorStream final : public ElementStream {
 public:
  explicit VectorStream(std::vector<ElementId> order) : order_(std::move(order)) {}

  std::optional<ElementId> next() override {
    if (pos_ >= order_.size()) return std::nullopt;
    return order_[pos_++];
  }

 private:
  std::vector<ElementId> order_;
  std::size_t pos_ = 0;
};

inline StreamFactory vector_stream_factory(std::vector<ElementId> order) {
  return [order = std::move(order)]() { return std::make_unique<VectorStream>(order); };
}

inline std::vector<ElementId> identity_order(int n) {
  std::vector<ElementId> order(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) order[static_cast<std::size_t>(i)] = i;
  return order;
}

// Fisher-Yates with draws taken directly from the engine's output stream.
// std::shuffle and the standard distributions are implementation-defined,
// which would break report reproducibility across toolchains.
inline std::vector<ElementId> permuted_order(int n, std::uint64_t seed) {
  std::vector<ElementId> order = identity_order(n);
  std::mt19937_64 eng(seed);
  for (int i = n - 1; i > 0; --i) {
    std::uint64_t j = eng() % static_cast<std::uint64_t>(i + 1);
    std::swap(order[static_cast<std::size_t>(i)], order[static_cast<std::size_t>(j)]);
  }
  return order;
}

}  // namespace ksc

#endif  // KSC_STREAM_HPP_
