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

#include "wks/lp/intervals.hpp"

#include <algorithm>
#include <string>
#include <vector>

#include "wks/error.hpp"

namespace wks {

void IntervalSolution::add(const IntervalKey& key, const Rational& amount) {
  if (key.v < 0 || key.v >= n_ || key.j < 0 || key.j >= l_) {
    throw StructuralError("interval references unknown vertex or class");
  }
  if (key.start < 0 || key.start >= key.end || key.end > horizon_ + 1) {
    throw StructuralError("interval [" + std::to_string(key.start) + "," +
                          std::to_string(key.end) + ") outside timeline 0.." +
                          std::to_string(horizon_ + 1));
  }
  if (amount == 0) return;
  auto [it, inserted] = values_.try_emplace(key, amount);
  if (!inserted) it->second += amount;
  if (it->second < 0) throw StructuralError("negative interval value");
  if (it->second == 0) values_.erase(it);
}

Rational IntervalSolution::value(const IntervalKey& key) const {
  auto it = values_.find(key);
  return it == values_.end() ? Rational(0) : it->second;
}

FractionalSolution x_from_y(const IntervalSolution& y) {
  FractionalSolution x(y.num_vertices(), y.num_classes(), y.horizon());
  for (const auto& [key, value] : y.entries()) {
    const int last = std::min(key.end, y.horizon() + 1);
    for (int t = key.start; t < last; ++t) x.at(key.v, key.j, t) += value;
  }
  return x;
}

IntervalSolution y_from_x(const FractionalSolution& x) {
  const int horizon = x.horizon();
  IntervalSolution y(x.num_vertices(), x.num_classes(), horizon);
  struct Slab {
    int start;
    Rational low;
    Rational high;
  };
  for (int v = 0; v < x.num_vertices(); ++v) {
    for (int j = 0; j < x.num_classes(); ++j) {
      std::vector<Slab> stack;
      Rational prev = 0;
      for (int t = 0; t <= horizon + 1; ++t) {
        const Rational cur = t <= horizon ? x.at(v, j, t) : Rational(0);
        if (cur < 0) throw StructuralError("negative server mass");
        if (cur > prev) {
          stack.push_back({t, prev, cur});
        } else {
          while (!stack.empty() && stack.back().high > cur) {
            Slab& top = stack.back();
            if (top.low >= cur) {
              y.add({v, j, top.start, t}, top.high - top.low);
              stack.pop_back();
            } else {
              y.add({v, j, top.start, t}, top.high - cur);
              top.high = cur;
            }
          }
        }
        prev = cur;
      }
    }
  }
  return y;
}

Rational interval_cost(const Instance& inst, const IntervalSolution& y) {
  Rational total = 0;
  for (const auto& [key, value] : y.entries()) total += inst.weight(key.j) * value;
  return total;
}

}  // namespace wks
