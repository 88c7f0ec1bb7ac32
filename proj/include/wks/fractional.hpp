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

#ifndef WKS_FRACTIONAL_HPP_
#define WKS_FRACTIONAL_HPP_

#include <cstddef>
#include <vector>

#include "wks/instance.hpp"
#include "wks/rational.hpp"

namespace wks {

class Schedule;

// Dense server mass x(v, j, t) for t in 0..T. Entry t = 0 holds the initial
// placement.
class FractionalSolution {
 public:
  FractionalSolution() = default;
  FractionalSolution(int num_vertices, int num_classes, int horizon);

  int num_vertices() const { return n_; }
  int num_classes() const { return l_; }
  int horizon() const { return horizon_; }

  const Rational& at(int v, int j, int t) const { return x_[index(v, j, t)]; }
  Rational& at(int v, int j, int t) { return x_[index(v, j, t)]; }

  bool operator==(const FractionalSolution& other) const = default;

 private:
  std::size_t index(int v, int j, int t) const {
    return (static_cast<std::size_t>(v) * l_ + j) * (horizon_ + 1) + t;
  }

  int n_ = 0;
  int l_ = 0;
  int horizon_ = 0;
  std::vector<Rational> x_;
};

// All-zero solution with x(., ., 0) set from the initial positions.
FractionalSolution initial_fractional(const Instance& inst);

// x(v, j, t) = number of class-j servers of `sched` at v at time t.
FractionalSolution fractional_from_schedule(const Instance& inst,
                                            const Schedule& sched);

// 1/2 sum_j W_j sum_{t=1..T} sum_v |x(v,j,t) - x(v,j,t-1)|.
Rational fractional_cost(const Instance& inst, const FractionalSolution& frac);

struct FeasibilityReport {
  bool ok = true;
  Rational worst_packing_excess;  // max_{j,t} sum_v x - k_j (<= 0 when ok)
  Rational worst_covering_gap;    // max_t 1 - sum_j x(sigma_t) (<= 0 when ok)
  Rational most_negative;         // min entry (>= 0 when ok)
};

// Checks the LP constraints exactly, allowing `tolerance` slack on each.
FeasibilityReport check_lp_feasibility(const Instance& inst,
                                       const FractionalSolution& frac,
                                       const Rational& tolerance = 0);

}  // namespace wks

#endif  // WKS_FRACTIONAL_HPP_
