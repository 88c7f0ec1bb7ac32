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

#ifndef WKS_ONLINE_AUDIT_HPP_
#define WKS_ONLINE_AUDIT_HPP_

#include <vector>

#include "wks/instance.hpp"
#include "wks/online/fractional.hpp"
#include "wks/schedule.hpp"

namespace wks::online {

// Phi(t) = sum over (v, j) where the reference has no class-j server at v
// at time t of W_j ln((1 + delta) / (z(v, j, t) + delta)).
double potential(const Instance& inst, const FractionalTrajectory& traj, const Schedule& reference,
                 int t);

struct AuditStep {
  int t = 0;
  double alg_cost = 0.0;  // fractional movement cost of step t
  double ref_cost = 0.0;  // reference movement cost of step t
  double phi_before = 0.0;
  double phi_after = 0.0;
  double lhs = 0.0;  // alg_cost / (4 l) + phi_after - phi_before
  double rhs = 0.0;  // ln(1 + 1/delta) * ref_cost
  bool ok = true;
};

struct AuditReport {
  bool ok = true;
  int violations = 0;
  double worst_excess = 0.0;  // max over steps of lhs - rhs
  std::vector<AuditStep> steps;
};

// Per-step check of alg/(4 l) + dPhi <= ln(1 + 1/delta) ref + tolerance.
AuditReport audit_potential(const Instance& inst, const FractionalTrajectory& traj,
                            const Schedule& reference, double tolerance = 1e-6);

}  // namespace wks::online

#endif  // WKS_ONLINE_AUDIT_HPP_
