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
// Dense mixed-radix codes for the (k+1)^n k-sets over a ground set of size n.
// Element 0 occupies the most significant digit, so ascending code order is
// ascending lexicographic order of the assignment vector (a_0, ..., a_{n-1}).
// The digit-wise lattice operations here are the enumeration-side counterpart
// of the sparse KSet algebra; tests cross-check the two routes.

#ifndef KSC_ENUMERATION_HPP_
#define KSC_ENUMERATION_HPP_

#include <cstdint>
#include <string>
#include <vector>

#include "ksc/errors.hpp"
#include "ksc/kset.hpp"

namespace ksc {

// Hard cap on exhaustive enumeration: refusing beats silently sampling.
inline constexpr std::uint64_t kEnumerationBudget = 1'000'000;

class CodeSpace {
 public:
  using Code = std::uint64_t;

  CodeSpace(int n, int k, std::uint64_t budget = kEnumerationBudget) : n_(n), k_(k) {
    if (n < 0 || k < 1) throw config_error("CodeSpace requires n >= 0 and k >= 1");
    pow_.resize(static_cast<std::size_t>(n) + 1);
    pow_[0] = 1;
    for (int i = 0; i < n; ++i) {
      pow_[i + 1] = pow_[i] * static_cast<std::uint64_t>(k + 1);
      if (pow_[i + 1] > budget || pow_[i + 1] / (k + 1) != pow_[i]) {
        throw budget_error("(k+1)^n = " + std::to_string(k + 1) + "^" + std::to_string(n) +
                           " exceeds the enumeration budget of " + std::to_string(budget));
      }
    }
  }

  int n() const { return n_; }
  int k() const { return k_; }
  std::uint64_t size() const { return pow_[n_]; }

  // Position of element e (0 unassigned, else 1..k).
  Position digit(Code c, ElementId e) const { return static_cast<Position>(c / place(e) % base()); }

  Code with_digit(Code c, ElementId e, Position i) const {
    return c + (static_cast<Code>(i) - static_cast<Code>(digit(c, e))) * place(e);
  }

  int support_size(Code c) const {
    int count = 0;
    for (ElementId e = 0; e < n_; ++e) count += digit(c, e) != 0;
    return count;
  }

  Code meet(Code a, Code b) const {
    Code out = 0;
    for (ElementId e = 0; e < n_; ++e) {
      Position i = digit(a, e);
      if (i != 0 && i == digit(b, e)) out += static_cast<Code>(i) * place(e);
    }
    return out;
  }

  Code join(Code a, Code b) const {
    Code out = 0;
    for (ElementId e = 0; e < n_; ++e) {
      Position i = digit(a, e);
      Position j = digit(b, e);
      Position keep = (i == j) ? i : (i == 0 ? j : (j == 0 ? i : 0));
      out += static_cast<Code>(keep) * place(e);
    }
    return out;
  }

  bool precedes(Code a, Code b) const {
    for (ElementId e = 0; e < n_; ++e) {
      Position i = digit(a, e);
      if (i != 0 && digit(b, e) != i) return false;
    }
    return true;
  }

  KSet to_kset(Code c) const {
    KSet s(k_);
    for (ElementId e = 0; e < n_; ++e) {
      Position i = digit(c, e);
      if (i != 0) s = insert(s, e, i);
    }
    return s;
  }

  Code from_kset(const KSet& s) const {
    if (s.arity() != k_) throw config_error("from_kset: arity mismatch");
    Code c = 0;
    for (const auto& [x, i] : s.pairs()) {
      if (x < 0 || x >= n_) throw config_error("from_kset: element id out of range");
      c += static_cast<Code>(i) * place(x);
    }
    return c;
  }

  // Digit string with element 0 first, e.g. "0210". Only defined for k <= 9.
  std::string to_digits(Code c) const {
    std::string out(static_cast<std::size_t>(n_), '0');
    for (ElementId e = 0; e < n_; ++e) out[static_cast<std::size_t>(e)] = static_cast<char>('0' + digit(c, e));
    return out;
  }

  Code from_digits(const std::string& digits) const {
    if (static_cast<int>(digits.size()) != n_) {
      throw parse_error("position vector '" + digits + "' must have " + std::to_string(n_) + " digits");
    }
    Code c = 0;
    for (ElementId e = 0; e < n_; ++e) {
      char ch = digits[static_cast<std::size_t>(e)];
      if (ch < '0' || ch > '9') throw parse_error("position vector '" + digits + "' has a non-digit");
      int i = ch - '0';
      if (i > k_) {
        throw parse_error("position vector '" + digits + "' uses position " + std::to_string(i) +
                          " > k = " + std::to_string(k_));
      }
      c += static_cast<Code>(i) * place(e);
    }
    return c;
  }

 private:
  Code base() const { return static_cast<Code>(k_) + 1; }
  Code place(ElementId e) const { return pow_[static_cast<std::size_t>(n_ - 1 - e)]; }

  int n_;
  int k_;
  std::vector<Code> pow_;
};

}  // namespace ksc

#endif  // KSC_ENUMERATION_HPP_
