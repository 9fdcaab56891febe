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

#ifndef KSC_ERRORS_HPP_
#define KSC_ERRORS_HPP_

#include <stdexcept>
#include <string>

namespace ksc {

// Invalid solver/oracle configuration: arity mismatch, epsilon out of range,
// missing guess or upper bound.
class config_error : public std::invalid_argument {
 public:
  explicit config_error(const std::string& what) : std::invalid_argument(what) {}
};

// An operation was called outside its stated contract (e.g. inserting an
// element that is already assigned).
class precondition_error : public std::logic_error {
 public:
  explicit precondition_error(const std::string& what) : std::logic_error(what) {}
};

// Bad instance data: non-positive weight, duplicate stream element, missing
// weight entry.
class instance_error : public std::runtime_error {
 public:
  explicit instance_error(const std::string& what) : std::runtime_error(what) {}
};

// An exhaustive enumeration would exceed the configured budget. Enumeration
// is all-or-nothing; there is no partial fallback.
class budget_error : public std::runtime_error {
 public:
  explicit budget_error(const std::string& what) : std::runtime_error(what) {}
};

// Rejection sampling ran out of attempts.
class generation_error : public std::runtime_error {
 public:
  explicit generation_error(const std::string& what) : std::runtime_error(what) {}
};

// Instance file could not be parsed (syntax) or failed semantic validation.
class parse_error : public std::runtime_error {
 public:
  explicit parse_error(const std::string& what) : std::runtime_error(what) {}
};

class validation_error : public std::runtime_error {
 public:
  explicit validation_error(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace ksc

#endif  // KSC_ERRORS_HPP_
