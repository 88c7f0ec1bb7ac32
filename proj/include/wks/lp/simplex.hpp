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

#ifndef WKS_LP_SIMPLEX_HPP_
#define WKS_LP_SIMPLEX_HPP_

#include <string>
#include <vector>

#include "wks/lp/program.hpp"

namespace wks::lp {

enum class Status { kOptimal, kInfeasible, kUnbounded, kIterationLimit };

std::string to_string(Status status);

struct SolveOptions {
  double tolerance = 1e-9;
  long max_iterations = 2'000'000;
  // Rebuild the basis inverse from scratch every this many pivots.
  int refactor_interval = 50;
};

struct Solution {
  Status status = Status::kIterationLimit;
  std::vector<double> values;
  double objective = 0.0;
  long iterations = 0;
};

// Two-phase dense revised simplex. The basis inverse is kept explicitly and
// updated with eta transformations; entering and leaving variables follow
// Bland's rule, so the method cannot cycle. Deterministic for identical input.
Solution solve_lp(const LpProgram& prog, const SolveOptions& options = {});

}  // namespace wks::lp

#endif  // WKS_LP_SIMPLEX_HPP_
