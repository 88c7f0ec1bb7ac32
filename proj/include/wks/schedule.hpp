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

#ifndef WKS_SCHEDULE_HPP_
#define WKS_SCHEDULE_HPP_

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "wks/instance.hpp"
#include "wks/rational.hpp"

namespace wks {

// Integral positions f(i, t) for t in 0..T of every server, possibly with
// more (or fewer) servers per class than the instance declares. Servers are
// stored class-major; within a class the first min(count, k_j) are the
// instance's original servers.
class Schedule {
 public:
  Schedule() = default;
  // Every server starts at `initial[i]` and stays there for `horizon` steps.
  Schedule(std::vector<int> class_counts, const std::vector<int>& initial,
           int horizon);

  int horizon() const { return horizon_; }
  int num_servers() const { return static_cast<int>(positions_.size()); }
  int num_classes() const { return static_cast<int>(class_counts_.size()); }
  const std::vector<int>& class_counts() const { return class_counts_; }
  int class_of_server(int i) const { return server_class_[i]; }
  int first_server(int j) const { return first_server_[j]; }

  int position(int server, int t) const { return positions_[server][t]; }
  void set_position(int server, int t, int vertex) {
    positions_[server][t] = vertex;
  }
  const std::vector<int>& trajectory(int server) const {
    return positions_[server];
  }

 private:
  int horizon_ = 0;
  std::vector<int> class_counts_;
  std::vector<int> first_server_;
  std::vector<int> server_class_;
  std::vector<std::vector<int>> positions_;
};

// A schedule where every class uses `counts[j]` servers placed by
// augmented_initial_positions and nobody moves.
Schedule stationary_schedule(const Instance& inst, std::vector<int> counts);
Schedule stationary_schedule(const Instance& inst);

struct VerifyResult {
  bool ok = true;
  std::string violation;  // first violation, empty when ok
};

// Structural mismatches (horizon, class count, vertex range) throw
// StructuralError; unserved requests and wrong initial positions are
// reported as infeasibility.
VerifyResult verify_schedule(const Instance& inst, const Schedule& sched);

struct CostReport {
  Rational total;
  std::vector<Rational> per_class;
  std::vector<std::int64_t> moves;
};

// Sum over servers of w_i times the number of steps where the server
// changes vertex (a move on the uniform metric is half the L1 change of the
// position indicator, which is 2).
CostReport schedule_cost(const Instance& inst, const Schedule& sched);

}  // namespace wks

#endif  // WKS_SCHEDULE_HPP_
