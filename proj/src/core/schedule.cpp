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

#include "wks/schedule.hpp"

#include <algorithm>
#include <string>
#include <utility>

#include "wks/error.hpp"

namespace wks {

Schedule::Schedule(std::vector<int> class_counts, const std::vector<int>& initial,
                   int horizon)
    : horizon_(horizon), class_counts_(std::move(class_counts)) {
  if (horizon_ < 0) throw StructuralError("negative horizon");
  int total = 0;
  for (std::size_t j = 0; j < class_counts_.size(); ++j) {
    if (class_counts_[j] < 0) throw StructuralError("negative server count");
    first_server_.push_back(total);
    for (int i = 0; i < class_counts_[j]; ++i) server_class_.push_back(static_cast<int>(j));
    total += class_counts_[j];
  }
  if (static_cast<int>(initial.size()) != total) {
    throw StructuralError("schedule initial positions do not match server count");
  }
  positions_.reserve(total);
  for (int v : initial) positions_.emplace_back(horizon_ + 1, v);
}

Schedule stationary_schedule(const Instance& inst, std::vector<int> counts) {
  if (static_cast<int>(counts.size()) != inst.num_classes()) {
    throw StructuralError("one server count per class required");
  }
  std::vector<int> initial;
  for (int j = 0; j < inst.num_classes(); ++j) {
    auto pos = augmented_initial_positions(inst.setup(), j, counts[j]);
    initial.insert(initial.end(), pos.begin(), pos.end());
  }
  return Schedule(std::move(counts), initial, inst.horizon());
}

Schedule stationary_schedule(const Instance& inst) {
  std::vector<int> counts;
  for (int j = 0; j < inst.num_classes(); ++j) counts.push_back(inst.count(j));
  return stationary_schedule(inst, std::move(counts));
}

namespace {

void check_structure(const Instance& inst, const Schedule& sched) {
  if (sched.horizon() != inst.horizon()) {
    throw StructuralError("schedule horizon " + std::to_string(sched.horizon()) +
                          " does not match instance horizon " +
                          std::to_string(inst.horizon()));
  }
  if (sched.num_classes() != inst.num_classes()) {
    throw StructuralError("schedule has " + std::to_string(sched.num_classes()) +
                          " classes, instance has " + std::to_string(inst.num_classes()));
  }
  for (int i = 0; i < sched.num_servers(); ++i) {
    for (int v : sched.trajectory(i)) {
      if (v < 0 || v >= inst.num_vertices()) {
        throw StructuralError("server " + std::to_string(i) + " visits invalid vertex " +
                              std::to_string(v));
      }
    }
  }
}

}  // namespace

VerifyResult verify_schedule(const Instance& inst, const Schedule& sched) {
  check_structure(inst, sched);
  for (int j = 0; j < inst.num_classes(); ++j) {
    const auto declared = inst.setup().initial_positions(j);
    const int originals = std::min<int>(sched.class_counts()[j], inst.count(j));
    for (int r = 0; r < originals; ++r) {
      const int i = sched.first_server(j) + r;
      if (sched.position(i, 0) != declared[r]) {
        return {false, "server " + std::to_string(i) + " of class " + std::to_string(j) +
                           " does not start at its declared vertex " +
                           std::to_string(declared[r])};
      }
    }
  }
  for (int t = 1; t <= inst.horizon(); ++t) {
    const int sigma = inst.request(t);
    bool served = false;
    for (int i = 0; i < sched.num_servers() && !served; ++i) {
      served = sched.position(i, t) == sigma;
    }
    if (!served) {
      return {false, "t=" + std::to_string(t) + ": no server at requested vertex " +
                         std::to_string(sigma)};
    }
  }
  return {};
}

CostReport schedule_cost(const Instance& inst, const Schedule& sched) {
  check_structure(inst, sched);
  CostReport report;
  report.per_class.assign(inst.num_classes(), Rational(0));
  report.moves.assign(inst.num_classes(), 0);
  for (int i = 0; i < sched.num_servers(); ++i) {
    const auto& traj = sched.trajectory(i);
    std::int64_t moves = 0;
    for (int t = 1; t <= sched.horizon(); ++t) moves += traj[t] != traj[t - 1];
    const int j = sched.class_of_server(i);
    report.moves[j] += moves;
    report.per_class[j] += inst.weight(j) * moves;
  }
  report.total = 0;
  for (const auto& c : report.per_class) report.total += c;
  return report;
}

}  // namespace wks
