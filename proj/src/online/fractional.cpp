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

#include "wks/online/fractional.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <string>

#include "wks/error.hpp"

namespace wks::online {

OnlineState::OnlineState(const ProblemSetup& setup)
    : n_(setup.num_vertices()), l_(setup.num_classes()) {
  delta_ = 1.0 / (2.0 * l_);
  threshold_ = 1.0 - 1.0 / (2.0 * l_);
  z_.assign(static_cast<std::size_t>(n_) * l_, 1.0);
  initial_.assign(z_.size(), false);
  cost_.assign(l_, 0.0);
  for (int j = 0; j < l_; ++j) {
    weight_.push_back(setup.weight(j).get_d());
    count_.push_back(setup.count(j));
    if (setup.count(j) > n_) {
      throw StructuralError("class " + std::to_string(j) + " has more servers than vertices");
    }
    int distinct = 0;
    for (int v : setup.initial_positions(j)) {
      if (!initial_[index(v, j)]) {
        initial_[index(v, j)] = true;
        z_[index(v, j)] = 0.0;
        ++distinct;
      }
    }
    if (distinct < n_) {
      const double spread = static_cast<double>(n_ - setup.count(j)) / (n_ - distinct);
      for (int v = 0; v < n_; ++v) {
        if (!initial_[index(v, j)]) z_[index(v, j)] = spread;
      }
    }
  }
}

double OnlineState::total_cost() const { return std::accumulate(cost_.begin(), cost_.end(), 0.0); }

OnlineState::Step OnlineState::serve(int sigma) {
  if (sigma < 0 || sigma >= n_) throw StructuralError("request outside the vertex range");
  ++time_;
  Step step;
  step.inflow.assign(l_, 0.0);
  step.cost.assign(l_, 0.0);
  step.min_outflow_z.assign(l_, 1.0);
  step.min_outflow_z_uninitial.assign(l_, 1.0);
  for (int j = 0; j < l_; ++j) {
    if (z_[index(sigma, j)] <= threshold_) return step;
  }
  step.moved = true;

  std::vector<std::vector<int>> active(l_);
  for (int j = 0; j < l_; ++j) {
    for (int v = 0; v < n_; ++v) {
      if (v == sigma || z_[index(v, j)] >= 1.0) continue;
      active[j].push_back(v);
      step.min_outflow_z[j] = std::min(step.min_outflow_z[j], z_[index(v, j)]);
      if (!initial_[index(v, j)]) {
        step.min_outflow_z_uninitial[j] = std::min(step.min_outflow_z_uninitial[j], z_[index(v, j)]);
      }
    }
  }
  const std::vector<double> start_sigma = [&] {
    std::vector<double> s(l_);
    for (int j = 0; j < l_; ++j) s[j] = z_[index(sigma, j)];
    return s;
  }();

  const int guard = n_ * l_ + 1;
  while (true) {
    if (++step.events > guard) {
      throw std::logic_error("online transfer did not converge within the event guard");
    }
    // Next event in s. With g = exp(s / (W_j |S_j|)), z_v + delta scales by
    // g and z_sigma drops by A_j (g - 1), A_j = sum over S_j of (z + delta).
    double best_s = std::numeric_limits<double>::infinity();
    int best_class = -1;
    int best_vertex = -1;  // -1: the stop condition
    for (int j = 0; j < l_; ++j) {
      if (active[j].empty()) continue;
      const double rate_scale = weight_[j] * static_cast<double>(active[j].size());
      double a = 0.0;
      for (int v : active[j]) a += z_[index(v, j)] + delta_;
      const double stop_g = 1.0 + (z_[index(sigma, j)] - threshold_) / a;
      const double stop_s = rate_scale * std::log(stop_g);
      if (stop_s < best_s) {
        best_s = stop_s;
        best_class = j;
        best_vertex = -1;
      }
      for (int v : active[j]) {
        const double sat_g = (1.0 + delta_) / (z_[index(v, j)] + delta_);
        const double sat_s = rate_scale * std::log(sat_g);
        if (sat_s < best_s) {
          best_s = sat_s;
          best_class = j;
          best_vertex = v;
        }
      }
    }
    if (best_class < 0) throw std::logic_error("online transfer has no active class");
    best_s = std::max(best_s, 0.0);

    // Advance every class by best_s.
    for (int j = 0; j < l_; ++j) {
      if (active[j].empty()) continue;
      const double g = std::exp(best_s / (weight_[j] * static_cast<double>(active[j].size())));
      for (int v : active[j]) {
        double& z = z_[index(v, j)];
        z = std::min(1.0, (z + delta_) * g - delta_);
      }
    }
    step.duration += best_s;

    bool stop = false;
    if (best_vertex >= 0) {
      z_[index(best_vertex, best_class)] = 1.0;
    } else {
      z_[index(sigma, best_class)] = threshold_;
      stop = true;
    }
    // z(sigma) from conservation; the stopping class is pinned exactly.
    for (int j = 0; j < l_; ++j) {
      if (stop && j == best_class) continue;
      double others = 0.0;
      for (int v = 0; v < n_; ++v) {
        if (v != sigma) others += z_[index(v, j)];
      }
      z_[index(sigma, j)] = static_cast<double>(n_ - count_[j]) - others;
    }
    for (int j = 0; j < l_; ++j) {
      if (z_[index(sigma, j)] < 0.0) {
        throw std::logic_error("anti-page value at the request went negative");
      }
      std::erase_if(active[j], [&](int v) { return z_[index(v, j)] >= 1.0; });
    }
    if (stop) {
      step.stopping_class = best_class;
      break;
    }
  }
  for (int j = 0; j < l_; ++j) {
    step.inflow[j] = start_sigma[j] - z_[index(sigma, j)];
    step.cost[j] = weight_[j] * step.inflow[j];
    cost_[j] += step.cost[j];
  }
  return step;
}

FractionalTrajectory run_fractional(const Instance& inst) {
  OnlineState state(inst.setup());
  FractionalTrajectory traj;
  traj.n = inst.num_vertices();
  traj.l = inst.num_classes();
  auto snapshot = [&] {
    std::vector<double> x(static_cast<std::size_t>(traj.n) * traj.l);
    for (int v = 0; v < traj.n; ++v) {
      for (int j = 0; j < traj.l; ++j) x[v * traj.l + j] = state.x(v, j);
    }
    return x;
  };
  traj.x.push_back(snapshot());
  for (int t = 1; t <= inst.horizon(); ++t) {
    traj.steps.push_back(state.serve(inst.request(t)));
    traj.x.push_back(snapshot());
  }
  return traj;
}

}  // namespace wks::online
