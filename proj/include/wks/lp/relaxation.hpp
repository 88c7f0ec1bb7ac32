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

#ifndef WKS_LP_RELAXATION_HPP_
#define WKS_LP_RELAXATION_HPP_

#include <vector>

#include "wks/fractional.hpp"
#include "wks/instance.hpp"
#include "wks/lp/intervals.hpp"
#include "wks/lp/program.hpp"
#include "wks/lp/simplex.hpp"

namespace wks::lp {

// Time-indexed relaxation. Variables x(v, j, t) for t in 1..T plus a pair
// (p, q) per entry with x_t - x_{t-1} = p - q, costed W_j / 2 each. The
// t = 0 layer is the integral initial placement and enters as a constant.
struct TimeIndexedModel {
  LpProgram program;
  int n = 0;
  int l = 0;
  int horizon = 0;
  std::vector<int> x_var;  // indexed by x_slot(v, j, t)

  int x_slot(int v, int j, int t) const { return (v * l + j) * horizon + (t - 1); }
};

TimeIndexedModel build_lp(const Instance& inst);

// Interval relaxation over every [s, e) with 0 <= s < e <= T + 1; the
// t = 0 coverage equals the initial placement. Costs W_j per unit of y.
struct IntervalModel {
  LpProgram program;
  std::vector<IntervalKey> keys;  // keys[var]
};

IntervalModel build_lp2(const Instance& inst);

struct RelaxationResult {
  Status status = Status::kIterationLimit;
  FractionalSolution x;
  double objective = 0.0;  // solver objective
  Rational exact_cost;     // fractional_cost of the extracted x
  long iterations = 0;
};

// Solves build_lp(inst). Solver values are snapped to nearby rationals with
// small denominators (<= 10^4, within 1e-9) and otherwise taken as exact
// doubles; tiny negatives become 0.
RelaxationResult solve_relaxation(const Instance& inst, const SolveOptions& options = {});

FractionalSolution extract_fractional(const Instance& inst, const TimeIndexedModel& model,
                                      const Solution& solution, double tolerance);

struct IntervalRelaxationResult {
  Status status = Status::kIterationLimit;
  IntervalSolution y;
  double objective = 0.0;
};

IntervalRelaxationResult solve_interval_relaxation(const Instance& inst,
                                                   const SolveOptions& options = {});

}  // namespace wks::lp

#endif  // WKS_LP_RELAXATION_HPP_
