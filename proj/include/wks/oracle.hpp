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

#ifndef WKS_ORACLE_HPP_
#define WKS_ORACLE_HPP_

#include <cstdint>
#include <string>
#include <vector>

#include "wks/generators.hpp"
#include "wks/instance.hpp"
#include "wks/parallel.hpp"
#include "wks/rational.hpp"
#include "wks/schedule.hpp"

namespace wks::oracle {

// Transition budget: WKS_ORACLE_BUDGET when set, else 10^7.
std::int64_t default_budget();

struct OracleOptions {
  std::vector<int> capacities;  // servers per class; empty means k_j
  std::int64_t budget = -1;     // < 0 means default_budget()
  Execution exec = Execution::kSerial;
};

struct OracleResult {
  Schedule schedule;
  Rational cost;
  std::int64_t transitions = 0;
  std::int64_t peak_layer = 0;
};

// Exact optimum by dynamic programming over configurations (one sorted
// multiset of positions per class). Only lazy steps are expanded: a
// configuration that already holds sigma_t stays, otherwise one server of
// some class jumps to sigma_t. Every schedule can be made lazy without
// extra cost on the uniform metric, so this is exact. Classes with more
// servers than k_j start the extras at augmented_initial_positions. Throws
// BudgetExceeded once the transition count passes the budget.
OracleResult brute_force_opt(const Instance& inst, const OracleOptions& options = {});

// W_j * (c - |a and b|) summed over classes: the cheapest way to turn
// configuration a into b when every server move costs its weight.
Rational transition_cost(const Instance& inst, const std::vector<std::vector<int>>& a,
                         const std::vector<std::vector<int>>& b);

struct GapBoundReport {
  std::vector<int> capacities;
  Rational oracle_cost;
  Rational fractional_cost;
  double ratio = 0.0;
};

// Oracle optimum of the gap instance with floor(factor * k_j) servers per
// class (at least 1) against the explicit fractional solution's cost.
GapBoundReport verify_gap_lower_bound(const GapParams& p, const Rational& factor,
                                      const OracleOptions& options = {});

}  // namespace wks::oracle

#endif  // WKS_ORACLE_HPP_
