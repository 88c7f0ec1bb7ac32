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

#include "wks/online/pipeline.hpp"

#include <cmath>
#include <cstdio>
#include <numeric>

#include "wks/error.hpp"

namespace wks::online {

namespace {

double run_cost(const Instance& inst, const RoundingPlan& plan, const std::vector<double>& omega) {
  const Schedule sched = plan.realize(inst, omega);
  double cost = 0.0;
  for (int i = 0; i < sched.num_servers(); ++i) {
    const double w = inst.weight(sched.class_of_server(i)).get_d();
    for (int t = 1; t <= sched.horizon(); ++t) {
      if (sched.position(i, t) != sched.position(i, t - 1)) cost += w;
    }
  }
  return cost;
}

}  // namespace

OnlineResult run_online(const Instance& inst, std::uint64_t seed) {
  const auto traj = run_fractional(inst);
  const auto scaled = scale_trajectory(traj);
  const RoundingPlan plan(inst, scaled);
  OnlineResult result;
  result.schedule = plan.realize(inst, run_omegas(inst.num_classes(), seed));
  const auto check = verify_schedule(inst, result.schedule);
  if (!check.ok) throw InfeasibilityError("online schedule infeasible: " + check.violation);
  result.cost = schedule_cost(inst, result.schedule).total;
  result.fractional_cost_per_class.assign(inst.num_classes(), 0.0);
  for (const auto& s : traj.steps) {
    for (int j = 0; j < inst.num_classes(); ++j) result.fractional_cost_per_class[j] += s.cost[j];
  }
  result.fractional_cost = std::accumulate(result.fractional_cost_per_class.begin(),
                                           result.fractional_cost_per_class.end(), 0.0);
  result.expected_cost = plan.expected_cost();
  std::vector<int> counts;
  for (int j = 0; j < inst.num_classes(); ++j) counts.push_back(plan.slots(j));
  result.diagnostics = {{"seed", seed},
                        {"fractional_cost", result.fractional_cost},
                        {"fractional_cost_per_class", result.fractional_cost_per_class},
                        {"paging_fractional_cost", plan.paging_fractional_cost()},
                        {"expected_rounded_cost", result.expected_cost},
                        {"cost", to_rational_string(result.cost)},
                        {"server_counts", counts}};
  return result;
}

BatchResult run_online_batch(const Instance& inst, int runs, std::uint64_t seed, Execution exec) {
  const auto traj = run_fractional(inst);
  const RoundingPlan plan(inst, scale_trajectory(traj));
  BatchResult out = run_online_batch(inst, plan, runs, seed, exec);
  out.fractional_cost = 0.0;
  for (const auto& s : traj.steps) out.fractional_cost += std::accumulate(s.cost.begin(), s.cost.end(), 0.0);
  return out;
}

BatchResult run_online_batch(const Instance& inst, const RoundingPlan& plan, int runs,
                             std::uint64_t seed, Execution exec) {
  const auto omegas = batch_omegas(plan.num_classes(), runs, seed);
  BatchResult out;
  out.costs.assign(runs, 0.0);
  if (exec == Execution::kParallel) {
#pragma omp parallel for schedule(dynamic)
    for (int i = 0; i < runs; ++i) out.costs[i] = run_cost(inst, plan, omegas[i]);
  } else {
    for (int i = 0; i < runs; ++i) out.costs[i] = run_cost(inst, plan, omegas[i]);
  }
  out.mean = std::accumulate(out.costs.begin(), out.costs.end(), 0.0) / runs;
  double ss = 0.0;
  for (double c : out.costs) ss += (c - out.mean) * (c - out.mean);
  out.stddev = runs > 1 ? std::sqrt(ss / (runs - 1)) : 0.0;
  out.expected_cost = plan.expected_cost();
  return out;
}

std::string z_hash(const FractionalTrajectory& traj, int t) {
  std::uint64_t h = 1469598103934665603ULL;
  char buf[40];
  for (double x : traj.x[t]) {
    const int len = std::snprintf(buf, sizeof buf, "%.17g;", 1.0 - x);
    for (int i = 0; i < len; ++i) {
      h ^= static_cast<unsigned char>(buf[i]);
      h *= 1099511628211ULL;
    }
  }
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
  return buf;
}

void write_trajectory_jsonl(const Instance& inst, const FractionalTrajectory& traj,
                            std::ostream& out, const AuditReport* audit) {
  for (int t = 0; t < static_cast<int>(traj.x.size()); ++t) {
    nlohmann::json line{{"t", t}};
    if (t > 0) {
      const auto& s = traj.steps[t - 1];
      line["request"] = inst.request(t);
      line["moved"] = s.moved;
      line["events"] = s.events;
      line["duration"] = s.duration;
      line["cost"] = s.cost;
      if (audit != nullptr) {
        const auto& a = audit->steps.at(t - 1);
        line["audit"] = {{"alg_cost", a.alg_cost}, {"ref_cost", a.ref_cost},
                         {"phi", a.phi_after},     {"lhs", a.lhs},
                         {"rhs", a.rhs},           {"ok", a.ok}};
      }
    }
    line["z_hash"] = z_hash(traj, t);
    nlohmann::json z = nlohmann::json::array();
    for (int v = 0; v < traj.n; ++v) {
      std::vector<double> row(traj.l);
      for (int j = 0; j < traj.l; ++j) row[j] = 1.0 - traj.at(t, v, j);
      z.push_back(row);
    }
    line["z"] = std::move(z);
    out << line.dump() << '\n';
  }
}

}  // namespace wks::online
