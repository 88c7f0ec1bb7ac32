// Copyright 2026 The wks Authors
//
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

#ifndef WKS_ERROR_HPP_
#define WKS_ERROR_HPP_

#include <stdexcept>
#include <string>

namespace wks {

// Malformed input: wrong dimensions, invalid indices, bad parameters.
class StructuralError : public std::runtime_error {
 public:
  explicit StructuralError(const std::string& what) : std::runtime_error(what) {}
};

// A guarantee that should hold by construction was observed to fail
// (uncoverable request, capacity overflow, unsolvable LP). These indicate
// an upstream bug rather than bad input.
class InfeasibilityError : public std::runtime_error {
 public:
  explicit InfeasibilityError(const std::string& what)
      : std::runtime_error(what) {}
};

// Exact computation refused because it would exceed a configured budget.
class BudgetExceeded : public std::runtime_error {
 public:
  explicit BudgetExceeded(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace wks

#endif  // WKS_ERROR_HPP_
