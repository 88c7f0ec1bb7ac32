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

#include "wks/offline/pipeline.hpp"

#include "wks/error.hpp"
#include "wks/lp/relaxation.hpp"
#include "wks/offline/assemble.hpp"
#include "wks/offline/cover.hpp"

namespace wks::offline {

OfflineResult round_offline(const Instance& inst, const OfflineOptions& options) {
  const auto relaxed = lp::solve_relaxation(inst, options.lp);
  if (relaxed.status != lp::Status::kOptimal) {
    throw StructuralError("LP relaxation not solved: " + lp::to_string(relaxed.status));
  }
  OfflineResult result = round_offline_from_fractional(inst, relaxed.x, options);
  result.diagnostics["lp_objective"] = relaxed.objective;
  result.diagnostics["lp_iterations"] = relaxed.iterations;
  return result;
}

OfflineResult round_offline_from_fractional(const Instance& inst, const FractionalSolution& x,
                                            const OfflineOptions& options) {
  OfflineResult result;
  result.x = x;
  result.lp_value = fractional_cost(inst, x);
  const DiscretizedSolution disc = scale_round(inst, x, options.eps, options.exec);
  result.stage1 = check_discretization(disc, inst, x);
  const auto covers = cover_all(inst, disc, options.exec);
  result.cover_cost = 0;
  for (const auto& c : covers) result.cover_cost += c.cost;
  result.schedule = assemble_schedule(inst, covers, options.eps);
  const auto verdict = verify_schedule(inst, result.schedule);
  if (!verdict.ok) throw InfeasibilityError("assembled schedule infeasible: " + verdict.violation);
  result.cost = schedule_cost(inst, result.schedule);
  result.augmentation = result.schedule.class_counts();
  for (int j = 0; j < inst.num_classes(); ++j) {
    result.caps.push_back(augmentation_cap(inst, j, options.eps));
  }

  nlohmann::json& d = result.diagnostics;
  d["eps"] = to_rational_string(options.eps);
  d["lp_value"] = to_rational_string(result.lp_value);
  d["stage1"] = report_to_json(result.stage1);
  d["stage1_cost"] = to_rational_string(result.stage1.ybar_cost);
  d["cover_cost"] = to_rational_string(result.cover_cost);
  d["final_cost"] = to_rational_string(result.cost.total);
  d["augmentation"] = result.augmentation;
  d["caps"] = result.caps;
  if (result.lp_value > 0) {
    d["ratio_final_to_lp"] = to_double(Rational(result.cost.total / result.lp_value));
  } else {
    d["ratio_final_to_lp"] = nullptr;
  }
  return result;
}

}  // namespace wks::offline
