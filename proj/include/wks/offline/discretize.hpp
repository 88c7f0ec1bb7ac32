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

#ifndef WKS_OFFLINE_DISCRETIZE_HPP_
#define WKS_OFFLINE_DISCRETIZE_HPP_

#include <string>
#include <vector>

#include "json.hpp"
#include "wks/fractional.hpp"
#include "wks/instance.hpp"
#include "wks/lp/intervals.hpp"
#include "wks/parallel.hpp"
#include "wks/rational.hpp"

namespace wks::offline {

enum class LevelEventKind { kUp, kDown };

struct LevelEvent {
  LevelEventKind kind;
  int time;  // a DOWN at T + 1 is the end-of-timeline close
};

// Events and intervals of one (v, j, level) sweep. Events alternate
// starting with UP (the implicit DOWN at time 0 is not stored).
struct LevelTrace {
  int v = 0;
  int j = 0;
  int level = 0;
  std::vector<LevelEvent> events;
  std::vector<std::pair<int, int>> intervals;  // [start, end)
};

struct DiscretizedSolution {
  IntervalSolution ybar;
  FractionalSolution xbar;
  Rational eps;
  Rational scale;                  // (2 + eps/2) * l
  std::vector<LevelTrace> trace;   // ordered by (v, j, level)
};

// Hysteresis discretization of every profile x(v, j, .), scaled by
// (2 + eps/2) l. Level h goes UP at the first time the scaled value reaches
// h and DOWN at the first later time it falls to h - eps/2 or below; an
// open level closes when the timeline ends. Requires 0 < eps < 1.
DiscretizedSolution scale_round(const Instance& inst, const FractionalSolution& x,
                                const Rational& eps, Execution exec = Execution::kSerial);

struct DiscretizationReport {
  bool ok = true;  // every guaranteed property holds
  // x~ - 1 < xbar < x~ + eps/2; margins are the minima of the two gaps.
  bool sandwich_ok = true;
  Rational sandwich_lower_margin;
  Rational sandwich_upper_margin;
  // Covering at requests: min_t sum_j xbar(sigma_t, j, t).
  bool covering_ok = true;         // >= l
  bool covering_strict_ok = true;  // >= l + 1
  Rational min_covering;
  // Packing: max_{j,t} sum_v xbar - (2 + eps) l k_j.
  bool packing_ok = true;
  Rational worst_packing_excess;
  // cost(ybar) <= (2 (2 + eps/2) l / eps) cost(y), y the canonical
  // decomposition of x. measured_constant = eps cost(ybar) / cost(y).
  bool cost_ok = true;
  Rational ybar_cost;
  Rational y_cost;
  Rational cost_bound_constant;
  Rational measured_constant;
  std::vector<std::string> violations;
};

DiscretizationReport check_discretization(const DiscretizedSolution& disc, const Instance& inst,
                                          const FractionalSolution& x);

nlohmann::json report_to_json(const DiscretizationReport& report);

}  // namespace wks::offline

#endif  // WKS_OFFLINE_DISCRETIZE_HPP_
