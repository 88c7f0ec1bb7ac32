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

#include "wks/online/audit.hpp"

#include <algorithm>
#include <cmath>

#include "wks/error.hpp"

namespace wks::online {

namespace {

std::vector<char> occupancy(const Instance& inst, const Schedule& ref, int t) {
  const int l = inst.num_classes();
  std::vector<char> occ(static_cast<std::size_t>(inst.num_vertices()) * l, 0);
  for (int i = 0; i < ref.num_servers(); ++i) {
    occ[ref.position(i, t) * l + ref.class_of_server(i)] = 1;
  }
  return occ;
}

}  // namespace

double potential(const Instance& inst, const FractionalTrajectory& traj, const Schedule& reference,
                 int t) {
  const int l = inst.num_classes();
  const double delta = 1.0 / (2.0 * l);
  const auto occ = occupancy(inst, reference, t);
  double phi = 0.0;
  for (int v = 0; v < inst.num_vertices(); ++v) {
    for (int j = 0; j < l; ++j) {
      if (occ[v * l + j]) continue;
      const double z = std::clamp(1.0 - traj.at(t, v, j), 0.0, 1.0);
      phi += inst.weight(j).get_d() * std::log((1.0 + delta) / (z + delta));
    }
  }
  return phi;
}

AuditReport audit_potential(const Instance& inst, const FractionalTrajectory& traj,
                            const Schedule& reference, double tolerance) {
  if (reference.horizon() != inst.horizon() || reference.num_classes() != inst.num_classes() ||
      static_cast<int>(traj.x.size()) != inst.horizon() + 1) {
    throw StructuralError("audit inputs disagree on the horizon or class count");
  }
  const int l = inst.num_classes();
  const double factor = std::log(1.0 + 2.0 * l);  // ln(1 + 1/delta)
  AuditReport report;
  double phi = potential(inst, traj, reference, 0);
  for (int t = 1; t <= inst.horizon(); ++t) {
    AuditStep s;
    s.t = t;
    for (double c : traj.steps[t - 1].cost) s.alg_cost += c;
    for (int i = 0; i < reference.num_servers(); ++i) {
      if (reference.position(i, t) != reference.position(i, t - 1)) {
        s.ref_cost += inst.weight(reference.class_of_server(i)).get_d();
      }
    }
    s.phi_before = phi;
    s.phi_after = potential(inst, traj, reference, t);
    s.lhs = s.alg_cost / (4.0 * l) + s.phi_after - s.phi_before;
    s.rhs = factor * s.ref_cost;
    s.ok = s.lhs <= s.rhs + tolerance;
    if (!s.ok) {
      report.ok = false;
      ++report.violations;
    }
    report.worst_excess = t == 1 ? s.lhs - s.rhs : std::max(report.worst_excess, s.lhs - s.rhs);
    phi = s.phi_after;
    report.steps.push_back(s);
  }
  return report;
}

}  // namespace wks::online
