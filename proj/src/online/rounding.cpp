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

#include "wks/online/rounding.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <map>
#include <queue>
#include <random>
#include <stdexcept>

#include "wks/error.hpp"

namespace wks::online {

namespace {

constexpr double kEps = 1e-12;

double unit_double(std::mt19937_64& rng) { return static_cast<double>(rng() >> 11) * 0x1.0p-53; }

}  // namespace

ScaledTrajectory scale_trajectory(const FractionalTrajectory& traj) {
  ScaledTrajectory out;
  out.n = traj.n;
  out.l = traj.l;
  const double factor = 2.0 * traj.l;
  for (const auto& row : traj.x) {
    std::vector<double> scaled(row.size());
    for (std::size_t i = 0; i < row.size(); ++i) {
      const double v = factor * row[i];
      scaled[i] = v >= 1.0 - kEps ? 1.0 : std::max(v, 0.0);
    }
    out.x.push_back(std::move(scaled));
  }
  return out;
}

std::vector<PagingInstance> split_by_class(const Instance& inst, const ScaledTrajectory& scaled) {
  const int n = inst.num_vertices();
  const int l = inst.num_classes();
  const int horizon = inst.horizon();
  std::vector<PagingInstance> out(l);
  for (int j = 0; j < l; ++j) {
    auto& p = out[j];
    p.j = j;
    p.n = n;
    p.slots = 2 * l * inst.count(j);
    p.request_at.assign(horizon + 1, -1);
    for (int t = 0; t <= horizon; ++t) {
      std::vector<double> row(n);
      for (int v = 0; v < n; ++v) row[v] = scaled.at(t, v, j);
      p.presence.push_back(std::move(row));
    }
    for (int v : inst.setup().initial_positions(j)) p.initial_pages.push_back(v);
    std::sort(p.initial_pages.begin(), p.initial_pages.end());
    p.initial_pages.erase(std::unique(p.initial_pages.begin(), p.initial_pages.end()),
                          p.initial_pages.end());
  }
  for (int t = 1; t <= horizon; ++t) {
    const int sigma = inst.request(t);
    int owner = -1;
    for (int j = 0; j < l && owner < 0; ++j) {
      if (scaled.at(t, sigma, j) >= 1.0) owner = j;
    }
    if (owner < 0) {
      throw InfeasibilityError("request " + std::to_string(t) + " has no fully covering class");
    }
    out[owner].request_at[t] = sigma;
  }
  return out;
}

PagingRounder::PagingRounder(int n, int slots, const std::vector<int>& initial_pages)
    : n_(n), slots_(slots) {
  Segment whole;
  whole.width = 1.0;
  whole.pages.assign(n, 0);
  for (int v : initial_pages) whole.pages.at(v) = 1;
  if (static_cast<int>(initial_pages.size()) > slots) {
    throw StructuralError("more initial pages than cache slots");
  }
  segments_.push_back(std::move(whole));
}

std::vector<double> PagingRounder::marginals() const {
  std::vector<double> q(n_, 0.0);
  for (const auto& s : segments_) {
    for (int v = 0; v < n_; ++v) {
      if (s.pages[v]) q[v] += s.width;
    }
  }
  return q;
}

// Replaces `from` by `to` on up to `amount` of probability mass, leftmost
// eligible states first. n_ stands for an empty slot on either side.
double PagingRounder::swap(int from, int to, double amount) {
  double left = amount;
  for (std::size_t i = 0; i < segments_.size() && left > 0.0; ++i) {
    auto& seg = segments_[i];
    const int size = static_cast<int>(std::count(seg.pages.begin(), seg.pages.end(), 1));
    const bool has_from = from == n_ ? size < slots_ : seg.pages[from] != 0;
    const bool lacks_to = to == n_ ? true : seg.pages[to] == 0;
    if (!has_from || !lacks_to || seg.width <= 0.0) continue;
    if (seg.width > left) {
      Segment rest = seg;
      rest.width = seg.width - left;
      seg.width = left;
      segments_.insert(segments_.begin() + static_cast<std::ptrdiff_t>(i) + 1, std::move(rest));
    }
    auto& target = segments_[i];
    if (from != n_) target.pages[from] = 0;
    if (to != n_) {
      target.pages[to] = 1;
      loads_ += target.width;
    }
    left -= target.width;
  }
  return amount - std::max(left, 0.0);
}

void PagingRounder::normalize(int required) {
  if (required >= 0) {
    for (auto& seg : segments_) {
      if (seg.pages[required]) continue;
      const int size = static_cast<int>(std::count(seg.pages.begin(), seg.pages.end(), 1));
      if (size >= slots_) {
        for (int v = 0; v < n_; ++v) {
          if (seg.pages[v]) {
            seg.pages[v] = 0;
            break;
          }
        }
      }
      seg.pages[required] = 1;
      loads_ += seg.width;
    }
  }
  std::vector<Segment> merged;
  for (auto& seg : segments_) {
    if (seg.width <= 0.0) continue;
    if (!merged.empty() && merged.back().pages == seg.pages) {
      merged.back().width += seg.width;
    } else {
      merged.push_back(std::move(seg));
    }
  }
  segments_ = std::move(merged);
}

double PagingRounder::step(const std::vector<double>& target, int required) {
  if (static_cast<int>(target.size()) != n_) throw StructuralError("marginal vector size mismatch");
  loads_ = 0.0;
  const int hole = n_;
  const int guard = 64 * (n_ + 1) * (n_ + 1) + 1024;
  for (int iter = 0; iter < guard; ++iter) {
    const auto q = marginals();
    int u = -1;
    int w = -1;
    for (int v = 0; v < n_; ++v) {
      if (u < 0 && q[v] - target[v] > kEps) u = v;
      if (w < 0 && target[v] - q[v] > kEps) w = v;
    }
    if (u < 0 && w < 0) break;
    const int src = u >= 0 ? u : hole;
    const int dst = w >= 0 ? w : hole;
    double want = std::numeric_limits<double>::infinity();
    if (u >= 0) want = std::min(want, q[u] - target[u]);
    if (w >= 0) want = std::min(want, target[w] - q[w]);

    auto capacity = [&](int a, int b) {
      double c = 0.0;
      for (const auto& seg : segments_) {
        const int size = static_cast<int>(std::count(seg.pages.begin(), seg.pages.end(), 1));
        const bool has_a = a == hole ? size < slots_ : seg.pages[a] != 0;
        const bool lacks_b = b == hole ? true : seg.pages[b] == 0;
        if (has_a && lacks_b) c += seg.width;
      }
      return c;
    };

    // Shortest path by (loads, hops): entering a page costs 1, the hole 0.
    std::vector<int> path;
    if (src != dst && capacity(src, dst) > kEps) {
      path = {src, dst};
    } else {
      const int nodes = n_ + 1;
      std::vector<std::pair<int, int>> dist(nodes, {std::numeric_limits<int>::max(), 0});
      std::vector<int> parent(nodes, -1);
      using Entry = std::pair<std::pair<int, int>, int>;
      std::priority_queue<Entry, std::vector<Entry>, std::greater<>> pq;
      dist[src] = {0, 0};
      pq.push({dist[src], src});
      while (!pq.empty()) {
        const auto [d, a] = pq.top();
        pq.pop();
        if (d != dist[a]) continue;
        if (a == dst) break;
        for (int b = 0; b < nodes; ++b) {
          if (b == a || b == src) continue;
          const std::pair<int, int> nd{d.first + (b == hole ? 0 : 1), d.second + 1};
          if (nd >= dist[b] || capacity(a, b) <= kEps) continue;
          dist[b] = nd;
          parent[b] = a;
          pq.push({nd, b});
        }
      }
      if (parent[dst] < 0) break;  // numerically stuck; normalize() repairs the rest
      for (int a = dst; a != -1; a = parent[a]) path.push_back(a);
      std::reverse(path.begin(), path.end());
    }
    double amount = want;
    for (std::size_t e = 0; e + 1 < path.size(); ++e) {
      amount = std::min(amount, capacity(path[e], path[e + 1]));
    }
    for (std::size_t e = 0; e + 1 < path.size(); ++e) swap(path[e], path[e + 1], amount);
  }
  normalize(required);
  return loads_;
}

RoundingPlan::RoundingPlan(const Instance& inst, const ScaledTrajectory& scaled)
    : horizon_(inst.horizon()) {
  const auto parts = split_by_class(inst, scaled);
  for (const auto& part : parts) {
    ClassHistory hist;
    hist.slots = part.slots;
    std::map<std::vector<int>, int> ids;
    PagingRounder rounder(part.n, part.slots, part.initial_pages);
    const double w = inst.weight(part.j).get_d();
    auto record = [&] {
      std::vector<std::pair<double, int>> line;
      double right = 0.0;
      for (const auto& seg : rounder.segments()) {
        std::vector<int> pages;
        for (int v = 0; v < part.n; ++v) {
          if (seg.pages[v]) pages.push_back(v);
        }
        auto [it, inserted] = ids.try_emplace(pages, static_cast<int>(hist.states.size()));
        if (inserted) hist.states.push_back(pages);
        right += seg.width;
        line.emplace_back(right, it->second);
      }
      line.back().first = std::numeric_limits<double>::infinity();
      hist.timeline.push_back(std::move(line));
    };
    record();
    std::vector<double> prev(part.n, 0.0);
    for (int v : part.initial_pages) prev[v] = 1.0;
    for (int t = 1; t <= horizon_; ++t) {
      expected_cost_ += w * rounder.step(part.presence[t], part.request_at[t]);
      for (int v = 0; v < part.n; ++v) {
        paging_fractional_cost_ += w * std::max(0.0, part.presence[t][v] - prev[v]);
      }
      prev = part.presence[t];
      record();
    }
    classes_.push_back(std::move(hist));
  }
}

const std::vector<int>& RoundingPlan::state(int j, int t, double omega) const {
  const auto& line = classes_[j].timeline[t];
  auto it = std::upper_bound(line.begin(), line.end(), omega,
                             [](double w, const auto& entry) { return w < entry.first; });
  if (it == line.end()) --it;
  return classes_[j].states[it->second];
}

Schedule RoundingPlan::realize(const Instance& inst, const std::vector<double>& omega) const {
  const int l = num_classes();
  std::vector<int> counts(l);
  std::vector<int> initial;
  for (int j = 0; j < l; ++j) {
    counts[j] = classes_[j].slots;
    auto pos = augmented_initial_positions(inst.setup(), j, counts[j]);
    initial.insert(initial.end(), pos.begin(), pos.end());
  }
  Schedule sched(counts, initial, horizon_);
  const int n = inst.num_vertices();
  for (int j = 0; j < l; ++j) {
    const int first = sched.first_server(j);
    const int slots = counts[j];
    std::vector<int> where(initial.begin() + first, initial.begin() + first + slots);
    std::vector<int> holds(slots, -1);
    std::vector<int> server_of(n, -1);
    auto attach = [&](int page) {
      int pick = -1;
      for (int s = 0; s < slots && pick < 0; ++s) {
        if (holds[s] < 0 && where[s] == page) pick = s;
      }
      for (int s = 0; s < slots && pick < 0; ++s) {
        if (holds[s] < 0) pick = s;
      }
      if (pick < 0) throw InfeasibilityError("cache state exceeds the server pool");
      holds[pick] = page;
      where[pick] = page;
      server_of[page] = pick;
    };
    const auto* prev = &state(j, 0, omega[j]);
    for (int page : *prev) attach(page);
    for (int t = 1; t <= horizon_; ++t) {
      const auto& cur = state(j, t, omega[j]);
      for (int page : *prev) {
        if (!std::binary_search(cur.begin(), cur.end(), page)) {
          holds[server_of[page]] = -1;
          server_of[page] = -1;
        }
      }
      for (int page : cur) {
        if (server_of[page] < 0) attach(page);
      }
      for (int s = 0; s < slots; ++s) sched.set_position(first + s, t, where[s]);
      prev = &cur;
    }
  }
  return sched;
}

std::vector<double> run_omegas(int num_classes, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::vector<double> omega(num_classes);
  for (auto& w : omega) w = unit_double(rng);
  return omega;
}

std::vector<std::vector<double>> batch_omegas(int num_classes, int runs, std::uint64_t seed) {
  if (runs <= 0) throw StructuralError("run count must be positive");
  std::mt19937_64 rng(seed);
  std::vector<std::vector<double>> out(runs, std::vector<double>(num_classes));
  for (int i = 0; i < runs; ++i) {
    for (int j = 0; j < num_classes; ++j) out[i][j] = (i + unit_double(rng)) / runs;
  }
  return out;
}

}  // namespace wks::online
