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

#include "wks/offline/cover.hpp"

#include <algorithm>
#include <exception>
#include <optional>
#include <string>
#include <tuple>

#include "wks/error.hpp"

namespace wks::offline {

CoverResult min_weight_cover(const std::vector<int>& points,
                             const std::vector<CoverCandidate>& candidates) {
  const int m = static_cast<int>(points.size());
  if (!std::is_sorted(points.begin(), points.end()) ||
      std::adjacent_find(points.begin(), points.end()) != points.end()) {
    throw StructuralError("cover points must be strictly increasing");
  }
  // [first, last] point indices covered by each candidate, or empty.
  struct Span {
    int first;
    int last;
  };
  std::vector<std::optional<Span>> spans(candidates.size());
  std::vector<std::vector<int>> covering(m);
  for (std::size_t c = 0; c < candidates.size(); ++c) {
    const auto& cand = candidates[c];
    auto lo = std::lower_bound(points.begin(), points.end(), cand.start);
    auto hi = std::lower_bound(points.begin(), points.end(), cand.end);
    if (lo == hi) continue;
    spans[c] = Span{static_cast<int>(lo - points.begin()), static_cast<int>(hi - points.begin()) - 1};
    for (int i = spans[c]->first; i <= spans[c]->last; ++i) covering[i].push_back(static_cast<int>(c));
  }

  std::vector<std::optional<Rational>> g(m + 1);
  g[m] = Rational(0);
  for (int i = m - 1; i >= 0; --i) {
    for (int c : covering[i]) {
      const auto& rest = g[spans[c]->last + 1];
      if (!rest) continue;
      Rational total = candidates[c].weight + *rest;
      if (!g[i] || total < *g[i]) g[i] = std::move(total);
    }
    if (!g[i]) {
      throw InfeasibilityError("no candidate interval covers time " + std::to_string(points[i]));
    }
  }

  CoverResult result;
  result.cost = *g[0];
  int i = 0;
  while (i < m) {
    int pick = -1;
    for (int c : covering[i]) {
      const auto& rest = g[spans[c]->last + 1];
      if (!rest || candidates[c].weight + *rest != *g[i]) continue;
      if (pick < 0 ||
          std::tie(candidates[c].start, candidates[c].end, candidates[c].j) <
              std::tie(candidates[pick].start, candidates[pick].end, candidates[pick].j)) {
        pick = c;
      }
    }
    result.chosen.push_back(pick);
    i = spans[pick]->last + 1;
  }
  return result;
}

VertexCover interval_cover(const Instance& inst, const DiscretizedSolution& disc, int v) {
  VertexCover out;
  out.v = v;
  out.cost = 0;
  std::vector<int> points;
  for (int t = 1; t <= inst.horizon(); ++t) {
    if (inst.request(t) == v) points.push_back(t);
  }
  if (points.empty()) return out;
  std::vector<CoverCandidate> candidates;
  // Map order is (v, j, start, end), so the range for v is contiguous.
  const auto& entries = disc.ybar.entries();
  for (auto it = entries.lower_bound(IntervalKey{v, 0, 0, 0});
       it != entries.end() && it->first.v == v; ++it) {
    candidates.push_back({it->first.j, it->first.start, it->first.end, inst.weight(it->first.j)});
  }
  CoverResult res;
  try {
    res = min_weight_cover(points, candidates);
  } catch (const InfeasibilityError& e) {
    throw InfeasibilityError("vertex " + std::to_string(v) + ": " + e.what());
  }
  for (int c : res.chosen) out.chosen.push_back(candidates[c]);
  out.cost = res.cost;
  return out;
}

std::vector<VertexCover> cover_all(const Instance& inst, const DiscretizedSolution& disc,
                                   Execution exec) {
  const int n = inst.num_vertices();
  std::vector<VertexCover> covers(n);
  if (exec == Execution::kParallel) {
    // Exceptions must not escape an OpenMP region; the first one is rethrown.
    std::vector<std::exception_ptr> errors(n);
#pragma omp parallel for schedule(dynamic)
    for (int v = 0; v < n; ++v) {
      try {
        covers[v] = interval_cover(inst, disc, v);
      } catch (...) {
        errors[v] = std::current_exception();
      }
    }
    for (auto& e : errors) {
      if (e) std::rethrow_exception(e);
    }
  } else {
    for (int v = 0; v < n; ++v) covers[v] = interval_cover(inst, disc, v);
  }
  return covers;
}

}  // namespace wks::offline
