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

#ifndef WKS_OFFLINE_PIPELINE_HPP_
#define WKS_OFFLINE_PIPELINE_HPP_

#include <vector>

#include "json.hpp"
#include "wks/fractional.hpp"
#include "wks/instance.hpp"
#include "wks/lp/simplex.hpp"
#include "wks/offline/discretize.hpp"
#include "wks/parallel.hpp"
#include "wks/rational.hpp"
#include "wks/schedule.hpp"

namespace wks::offline {

struct OfflineOptions {
  Rational eps = Rational(1, 2);
  Execution exec = Execution::kSerial;
  lp::SolveOptions lp;
};

struct OfflineResult {
  Schedule schedule;
  CostReport cost;
  FractionalSolution x;
  Rational lp_value;          // fractional_cost of x
  DiscretizationReport stage1;
  Rational cover_cost;        // sum of W_j over chosen intervals
  std::vector<int> augmentation;
  std::vector<int> caps;
  nlohmann::json diagnostics;
};

// LP -> Stage I -> Stage II -> assembly. Throws StructuralError for bad
// input and InfeasibilityError when a guaranteed property fails.
OfflineResult round_offline(const Instance& inst, const OfflineOptions& options = {});

// Same pipeline starting from a given fractional solution.
OfflineResult round_offline_from_fractional(const Instance& inst, const FractionalSolution& x,
                                            const OfflineOptions& options = {});

}  // namespace wks::offline

#endif  // WKS_OFFLINE_PIPELINE_HPP_
