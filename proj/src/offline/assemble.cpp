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

#include "wks/offline/assemble.hpp"

#include <algorithm>
#include <string>
#include <tuple>

#include "wks/error.hpp"

namespace wks::offline {

int augmentation_cap(const Instance& inst, int j, const Rational& eps) {
  const Rational cap = (Rational(2) + eps) * inst.num_classes() * inst.count(j);
  return static_cast<int>(floor_rational(cap).get_num().get_si());
}

namespace {

struct Placed {
  int start;
  int end;  // exclusive, <= T + 1
  int v;
};

}  // namespace

Schedule assemble_schedule(const Instance& inst, const std::vector<VertexCover>& covers,
                           const Rational& eps) {
  const int l = inst.num_classes();
  const int horizon = inst.horizon();
  std::vector<std::vector<Placed>> per_class(l);
  for (const auto& cover : covers) {
    for (const auto& c : cover.chosen) {
      const int s = std::max(c.start, 1);
      const int e = std::min(c.end, horizon + 1);
      if (s < e) per_class[c.j].push_back({s, e, cover.v});
    }
  }

  // Per class: assignment of intervals to server slots.
  std::vector<std::vector<std::pair<int, Placed>>> assigned(l);
  std::vector<int> counts(l);
  for (int j = 0; j < l; ++j) {
    auto& items = per_class[j];
    std::sort(items.begin(), items.end(), [](const Placed& a, const Placed& b) {
      return std::tie(a.start, a.end, a.v) < std::tie(b.start, b.end, b.v);
    });
    const int cap = augmentation_cap(inst, j, eps);
    std::vector<int> pos = augmented_initial_positions(inst.setup(), j, inst.count(j));
    std::vector<int> busy_until(pos.size(), 0);
    for (const auto& item : items) {
      int pick = -1;
      for (std::size_t s = 0; s < pos.size(); ++s) {
        if (busy_until[s] <= item.start && pos[s] == item.v) {
          pick = static_cast<int>(s);
          break;
        }
      }
      if (pick < 0) {
        for (std::size_t s = 0; s < pos.size(); ++s) {
          if (busy_until[s] <= item.start) {
            pick = static_cast<int>(s);
            break;
          }
        }
      }
      if (pick < 0) {
        if (static_cast<int>(pos.size()) >= cap) {
          throw InfeasibilityError("class " + std::to_string(j) + " needs more than " +
                                   std::to_string(cap) + " servers at t=" +
                                   std::to_string(item.start));
        }
        const auto fresh = augmented_initial_positions(inst.setup(), j,
                                                       static_cast<int>(pos.size()) + 1);
        pos.push_back(fresh.back());
        busy_until.push_back(0);
        pick = static_cast<int>(pos.size()) - 1;
      }
      pos[pick] = item.v;
      busy_until[pick] = item.end;
      assigned[j].emplace_back(pick, item);
    }
    counts[j] = static_cast<int>(pos.size());
  }

  Schedule sched = stationary_schedule(inst, counts);
  for (int j = 0; j < l; ++j) {
    // Intervals of one server arrive in start order; fill forward.
    std::vector<int> filled_to(counts[j], 0);
    std::vector<int> at(counts[j]);
    for (int s = 0; s < counts[j]; ++s) at[s] = sched.position(sched.first_server(j) + s, 0);
    auto advance = [&](int s, int until) {
      const int i = sched.first_server(j) + s;
      for (int t = filled_to[s] + 1; t < until && t <= horizon; ++t) sched.set_position(i, t, at[s]);
      filled_to[s] = std::max(filled_to[s], std::min(until - 1, horizon));
    };
    for (const auto& [s, item] : assigned[j]) {
      advance(s, item.start);
      const int i = sched.first_server(j) + s;
      for (int t = item.start; t < item.end; ++t) sched.set_position(i, t, item.v);
      at[s] = item.v;
      filled_to[s] = item.end - 1;
    }
    for (int s = 0; s < counts[j]; ++s) advance(s, horizon + 1);
  }
  return sched;
}

}  // namespace wks::offline
