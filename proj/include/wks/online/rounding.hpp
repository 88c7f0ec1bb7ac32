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

#ifndef WKS_ONLINE_ROUNDING_HPP_
#define WKS_ONLINE_ROUNDING_HPP_

#include <cstdint>
#include <vector>

#include "wks/instance.hpp"
#include "wks/online/fractional.hpp"
#include "wks/parallel.hpp"
#include "wks/schedule.hpp"

namespace wks::online {

// x~ = min(2 l x, 1), with values within 1e-12 of 1 snapped to 1.
struct ScaledTrajectory {
  int n = 0;
  int l = 0;
  std::vector<std::vector<double>> x;  // x[t][v * l + j]
  double at(int t, int v, int j) const { return x[t][v * l + j]; }
};

ScaledTrajectory scale_trajectory(const FractionalTrajectory& traj);

// One class's share of the work: the scaled class-j presence at every time
// and the requests assigned to it (those whose lowest fully covering class
// is j).
struct PagingInstance {
  int j = 0;
  int n = 0;
  int slots = 0;                             // 2 l k_j
  std::vector<int> request_at;               // t = 0..T, page or -1
  std::vector<std::vector<double>> presence; // presence[t][v]
  std::vector<int> initial_pages;            // distinct initial vertices
};

// Throws InfeasibilityError if some request has no class at full presence.
std::vector<PagingInstance> split_by_class(const Instance& inst, const ScaledTrajectory& scaled);

// A probability distribution over cache contents, kept as consecutive
// segments of [0, 1). Each step moves the distribution to new marginals
// with a greedy transport: a decrease at page u is paired with an increase
// at page w along a shortest path of swaps (HOLE stands for an empty slot),
// applied to the leftmost states that admit each swap. A run is the path of
// a single omega in [0, 1), so the run's marginals match the targets exactly
// in distribution.
class PagingRounder {
 public:
  struct Segment {
    double width = 0.0;
    std::vector<char> pages;  // membership, size n
  };

  PagingRounder(int n, int slots, const std::vector<int>& initial_pages);

  // Returns the expected number of page loads of the step.
  double step(const std::vector<double>& target, int required);

  const std::vector<Segment>& segments() const { return segments_; }
  std::vector<double> marginals() const;

 private:
  double swap(int from, int to, double amount);
  void normalize(int required);

  int n_;
  int slots_;
  std::vector<Segment> segments_;
  double loads_ = 0.0;
};

// Segment history of every class, computed once and shared by all runs.
class RoundingPlan {
 public:
  RoundingPlan(const Instance& inst, const ScaledTrajectory& scaled);

  int num_classes() const { return static_cast<int>(classes_.size()); }
  int horizon() const { return horizon_; }
  int slots(int j) const { return classes_[j].slots; }
  // Expected rounded cost: sum over classes of W_j times expected loads.
  double expected_cost() const { return expected_cost_; }
  // Fractional paging cost: W_j times the positive presence increments.
  double paging_fractional_cost() const { return paging_fractional_cost_; }
  const std::vector<int>& state(int j, int t, double omega) const;
  // Cache states seen by a run, one per class.
  Schedule realize(const Instance& inst, const std::vector<double>& omega) const;

 private:
  struct ClassHistory {
    int slots = 0;
    std::vector<std::vector<int>> states;  // distinct sorted page lists
    // per t: (right endpoint, state index)
    std::vector<std::vector<std::pair<double, int>>> timeline;
  };
  std::vector<ClassHistory> classes_;
  int horizon_ = 0;
  double expected_cost_ = 0.0;
  double paging_fractional_cost_ = 0.0;
};

// Omega for class j of a single run seeded with `seed`.
std::vector<double> run_omegas(int num_classes, std::uint64_t seed);

// Stratified omegas for a batch: run i of N uses (i + u) / N per class,
// with u drawn from mt19937_64(seed).
std::vector<std::vector<double>> batch_omegas(int num_classes, int runs, std::uint64_t seed);

}  // namespace wks::online

#endif  // WKS_ONLINE_ROUNDING_HPP_
