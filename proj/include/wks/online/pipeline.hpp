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

#ifndef WKS_ONLINE_PIPELINE_HPP_
#define WKS_ONLINE_PIPELINE_HPP_

#include <cstdint>
#include <ostream>
#include <string>
#include <vector>

#include "json.hpp"
#include "wks/online/audit.hpp"
#include "wks/instance.hpp"
#include "wks/online/fractional.hpp"
#include "wks/online/rounding.hpp"
#include "wks/parallel.hpp"
#include "wks/rational.hpp"
#include "wks/schedule.hpp"

namespace wks::online {

struct OnlineResult {
  Schedule schedule;  // 2 l k_j servers per class
  Rational cost;
  double fractional_cost = 0.0;
  std::vector<double> fractional_cost_per_class;
  double expected_cost = 0.0;  // over omega, from the segment transport
  nlohmann::json diagnostics;
};

OnlineResult run_online(const Instance& inst, std::uint64_t seed);

struct BatchResult {
  std::vector<double> costs;  // one per run
  double mean = 0.0;
  double stddev = 0.0;
  double fractional_cost = 0.0;
  double expected_cost = 0.0;
};

// Runs share the fractional trajectory and segment history; run i uses the
// stratified omegas of batch_omegas(). The parallel path splits runs over
// threads and produces the same numbers as the serial one.
BatchResult run_online_batch(const Instance& inst, int runs, std::uint64_t seed,
                             Execution exec = Execution::kParallel);
BatchResult run_online_batch(const Instance& inst, const RoundingPlan& plan, int runs,
                             std::uint64_t seed, Execution exec);

// FNV-1a over the %.17g rendering of the z values at time t.
std::string z_hash(const FractionalTrajectory& traj, int t);

// One JSON object per line for t = 0..T: t, request, moved, events,
// duration, cost, z_hash, z and, when an audit is given, its row.
void write_trajectory_jsonl(const Instance& inst, const FractionalTrajectory& traj,
                            std::ostream& out, const AuditReport* audit = nullptr);

}  // namespace wks::online

#endif  // WKS_ONLINE_PIPELINE_HPP_
