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

#ifndef WKS_ONLINE_FRACTIONAL_HPP_
#define WKS_ONLINE_FRACTIONAL_HPP_

#include <vector>

#include "wks/instance.hpp"

namespace wks::online {

// Anti-page state z(v, j) = 1 - x(v, j) of the online fractional algorithm.
// Built from the problem setup only; requests arrive one at a time through
// serve(), so the algorithm cannot look ahead.
class OnlineState {
 public:
  // z = 0 at the initial vertices of each class, and the remaining
  // n - k_j units spread evenly over the other vertices (1 each when the
  // initial vertices are distinct). Throws StructuralError when k_j > n.
  explicit OnlineState(const ProblemSetup& setup);

  int num_vertices() const { return n_; }
  int num_classes() const { return l_; }
  double delta() const { return delta_; }
  // 1 - 1/(2 l): a request is covered once some class has z(sigma) <= this.
  double threshold() const { return threshold_; }
  double weight(int j) const { return weight_[j]; }
  int count(int j) const { return count_[j]; }
  double z(int v, int j) const { return z_[index(v, j)]; }
  double x(int v, int j) const { return 1.0 - z_[index(v, j)]; }
  const std::vector<double>& cost_per_class() const { return cost_; }
  double total_cost() const;
  int time() const { return time_; }
  // Vertices that held class-j mass initially.
  bool initially_occupied(int v, int j) const { return initial_[index(v, j)]; }

  struct Step {
    bool moved = false;
    int events = 0;
    double duration = 0.0;            // elapsed s
    std::vector<double> inflow;       // mass entering sigma, per class
    std::vector<double> cost;         // W_j * inflow
    int stopping_class = -1;
    // Lowest z among vertices that lost mass, per class (1 if none).
    std::vector<double> min_outflow_z;
    // Same, ignoring vertices that held class-j mass initially.
    std::vector<double> min_outflow_z_uninitial;
  };

  // Serves the next request. If some class already has z(sigma) at or
  // below the threshold nothing moves. Otherwise every class pulls mass
  // into sigma from S_j = {v != sigma : z(v, j) < 1} at rate
  // (z + delta) / (W_j |S_j|), all classes in the same time s, until the
  // first class reaches the threshold at sigma. Between events (a vertex
  // emptying or the stop) the flow has a closed form, so the integration
  // is exact up to rounding.
  Step serve(int sigma);

 private:
  int index(int v, int j) const { return v * l_ + j; }

  int n_ = 0;
  int l_ = 0;
  double delta_ = 0.0;
  double threshold_ = 0.0;
  std::vector<double> weight_;
  std::vector<int> count_;
  std::vector<double> z_;
  std::vector<bool> initial_;
  std::vector<double> cost_;
  int time_ = 0;
};

// x snapshots for t = 0..T with per-step records.
struct FractionalTrajectory {
  int n = 0;
  int l = 0;
  std::vector<std::vector<double>> x;  // x[t][v * l + j]
  std::vector<OnlineState::Step> steps;  // steps[t - 1]
  double at(int t, int v, int j) const { return x[t][v * l + j]; }
};

// Feeds inst's requests one at a time.
FractionalTrajectory run_fractional(const Instance& inst);

}  // namespace wks::online

#endif  // WKS_ONLINE_FRACTIONAL_HPP_
