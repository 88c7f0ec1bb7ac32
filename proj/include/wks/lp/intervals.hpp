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

#ifndef WKS_LP_INTERVALS_HPP_
#define WKS_LP_INTERVALS_HPP_

#include <compare>
#include <map>

#include "wks/fractional.hpp"
#include "wks/instance.hpp"
#include "wks/rational.hpp"

namespace wks {

// Half-open time interval [start, end) at vertex v for class j, with
// 0 <= start < end <= T + 1. An interval with end = T + 1 is still open when
// the timeline stops.
struct IntervalKey {
  int v = 0;
  int j = 0;
  int start = 0;
  int end = 0;

  auto operator<=>(const IntervalKey&) const = default;
};

// Sparse y(v, j, I). Zero entries are never stored.
class IntervalSolution {
 public:
  IntervalSolution() = default;
  IntervalSolution(int num_vertices, int num_classes, int horizon)
      : n_(num_vertices), l_(num_classes), horizon_(horizon) {}

  int num_vertices() const { return n_; }
  int num_classes() const { return l_; }
  int horizon() const { return horizon_; }

  // Adds `amount` to y(key); throws StructuralError when the key is outside
  // the timeline or the result would be negative.
  void add(const IntervalKey& key, const Rational& amount);
  Rational value(const IntervalKey& key) const;
  const std::map<IntervalKey, Rational>& entries() const { return values_; }
  bool empty() const { return values_.empty(); }

  bool operator==(const IntervalSolution&) const = default;

 private:
  int n_ = 0;
  int l_ = 0;
  int horizon_ = 0;
  std::map<IntervalKey, Rational> values_;
};

// x(v, j, t) = sum of y(v, j, I) over intervals containing t, t in 0..T.
FractionalSolution x_from_y(const IntervalSolution& y);

// Canonical level-slab decomposition of each profile t -> x(v, j, t), with
// the profile taken as 0 before t = 0 and after t = T. Every rise opens a
// slab, every fall closes the topmost slabs first.
IntervalSolution y_from_x(const FractionalSolution& x);

// sum_j W_j sum_{v, I} y(v, j, I): every interval is one arrival and one
// departure, each charged half a move.
Rational interval_cost(const Instance& inst, const IntervalSolution& y);

}  // namespace wks

#endif  // WKS_LP_INTERVALS_HPP_
