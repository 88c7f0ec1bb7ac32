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

#include "wks/oracle.hpp"

#include <algorithm>
#include <cstdlib>
#include <limits>
#include <numeric>
#include <string>
#include <unordered_map>

#include "wks/error.hpp"

namespace wks::oracle {

std::int64_t default_budget() {
  if (const char* env = std::getenv("WKS_ORACLE_BUDGET")) {
    char* end = nullptr;
    const long long value = std::strtoll(env, &end, 10);
    if (end != env && *end == '\0' && value > 0) return value;
    throw StructuralError("WKS_ORACLE_BUDGET must be a positive integer");
  }
  return 10'000'000;
}

Rational transition_cost(const Instance& inst, const std::vector<std::vector<int>>& a,
                         const std::vector<std::vector<int>>& b) {
  if (a.size() != b.size() || static_cast<int>(a.size()) != inst.num_classes()) {
    throw StructuralError("configurations must list one multiset per class");
  }
  Rational total = 0;
  for (std::size_t j = 0; j < a.size(); ++j) {
    if (a[j].size() != b[j].size()) throw StructuralError("class sizes differ");
    std::vector<int> x = a[j], y = b[j];
    std::sort(x.begin(), x.end());
    std::sort(y.begin(), y.end());
    std::vector<int> common;
    std::set_intersection(x.begin(), x.end(), y.begin(), y.end(), std::back_inserter(common));
    total += inst.weight(static_cast<int>(j)) * static_cast<long>(x.size() - common.size());
  }
  return total;
}

namespace {

using Cost = std::int64_t;
constexpr Cost kInf = std::numeric_limits<Cost>::max() / 4;

// A configuration is the concatenation of the sorted per-class position
// lists, one byte per server, so it can serve as a hash key directly.
using State = std::string;

struct Layout {
  std::vector<int> offset;  // start of class j in a State
  std::vector<int> size;
};

struct Layer {
  std::vector<State> states;  // sorted
  std::unordered_map<State, int> index;
  std::vector<Cost> cost;
  std::vector<int> parent;       // index into the previous layer
  std::vector<int> moved_class;  // -1 when nothing moved
  std::vector<int> moved_from;
};

bool holds(const State& s, int v) {
  return s.find(static_cast<char>(v)) != State::npos;
}

// Replace one server of class j at `from` by one at `to`, keeping order.
State jump(const State& s, const Layout& lay, int j, int from, int to) {
  State out = s;
  auto first = out.begin() + lay.offset[j];
  auto last = first + lay.size[j];
  auto it = std::find(first, last, static_cast<char>(from));
  *it = static_cast<char>(to);
  std::sort(first, last);
  return out;
}

// Best predecessor of every state in `cur`. Pull formulation: each state
// inspects the configurations it could have come from, so states are
// independent and the parallel loop writes disjoint entries.
void relax_state(const Layer& prev, Layer& cur, const Layout& lay,
                 const std::vector<Cost>& weight, int n, int sigma, int s) {
  const State& state = cur.states[s];
  Cost best = kInf;
  int parent = -1, cls = -1, from = -1;
  auto offer = [&](int p, Cost c, int j, int u) {
    if (c < best || (c == best && p < parent)) {
      best = c;
      parent = p;
      cls = j;
      from = u;
    }
  };
  if (auto it = prev.index.find(state); it != prev.index.end()) {
    offer(it->second, prev.cost[it->second], -1, -1);
  }
  for (std::size_t j = 0; j < lay.size.size(); ++j) {
    const int jj = static_cast<int>(j);
    const int begin = lay.offset[jj];
    const int end = begin + lay.size[jj];
    if (std::find(state.begin() + begin, state.begin() + end, static_cast<char>(sigma)) ==
        state.begin() + end) {
      continue;
    }
    for (int u = 0; u < n; ++u) {
      if (u == sigma) continue;
      const State before = jump(state, lay, jj, sigma, u);
      auto it = prev.index.find(before);
      if (it == prev.index.end() || holds(before, sigma)) continue;
      offer(it->second, prev.cost[it->second] + weight[jj], jj, u);
    }
  }
  cur.cost[s] = best;
  cur.parent[s] = parent;
  cur.moved_class[s] = cls;
  cur.moved_from[s] = from;
}

}  // namespace

OracleResult brute_force_opt(const Instance& inst, const OracleOptions& options) {
  const int l = inst.num_classes();
  const int n = inst.num_vertices();
  if (n > 255) throw StructuralError("oracle supports at most 255 vertices");
  std::vector<int> caps = options.capacities;
  if (caps.empty()) {
    for (int j = 0; j < l; ++j) caps.push_back(inst.count(j));
  }
  if (static_cast<int>(caps.size()) != l) throw StructuralError("one capacity per class");
  for (int c : caps) {
    if (c < 0) throw StructuralError("negative capacity");
  }
  const std::int64_t budget = options.budget < 0 ? default_budget() : options.budget;

  // Integer weights: scale by the lcm of the denominators.
  mpz_class scale = 1;
  for (int j = 0; j < l; ++j) {
    mpz_lcm(scale.get_mpz_t(), scale.get_mpz_t(), inst.weight(j).get_den_mpz_t());
  }
  std::vector<Cost> weight(l);
  for (int j = 0; j < l; ++j) {
    const mpz_class w = inst.weight(j).get_num() * (scale / inst.weight(j).get_den());
    if (!w.fits_slong_p() || w.get_si() > (Cost{1} << 40)) {
      throw StructuralError("weights too large for the oracle");
    }
    weight[j] = w.get_si();
  }

  Layout lay;
  State start;
  for (int j = 0; j < l; ++j) {
    lay.offset.push_back(static_cast<int>(start.size()));
    lay.size.push_back(caps[j]);
    auto pos = augmented_initial_positions(inst.setup(), j, caps[j]);
    std::sort(pos.begin(), pos.end());
    for (int v : pos) start.push_back(static_cast<char>(v));
  }

  const int horizon = inst.horizon();
  std::vector<Layer> layers(horizon + 1);
  layers[0].states = {start};
  layers[0].index[start] = 0;
  layers[0].cost = {0};
  layers[0].parent = {-1};
  layers[0].moved_class = {-1};
  layers[0].moved_from = {-1};

  OracleResult result;
  result.peak_layer = 1;
  for (int t = 1; t <= horizon; ++t) {
    const int sigma = inst.request(t);
    const Layer& prev = layers[t - 1];
    Layer& cur = layers[t];
    // Forward pass only collects the successor set.
    std::vector<State> next;
    std::int64_t expansions = 0;
    for (const State& p : prev.states) {
      if (holds(p, sigma)) {
        next.push_back(p);
        ++expansions;
        continue;
      }
      for (int j = 0; j < l; ++j) {
        const int begin = lay.offset[j];
        for (int k = 0; k < lay.size[j]; ++k) {
          if (k > 0 && p[begin + k] == p[begin + k - 1]) continue;
          next.push_back(jump(p, lay, j, static_cast<unsigned char>(p[begin + k]), sigma));
          ++expansions;
        }
      }
    }
    result.transitions += expansions;
    if (result.transitions > budget) {
      throw BudgetExceeded("oracle needs more than " + std::to_string(budget) +
                           " transitions (reached t=" + std::to_string(t) + " of " +
                           std::to_string(horizon) + ")");
    }
    if (next.empty()) {
      throw InfeasibilityError("no configuration can serve t=" + std::to_string(t));
    }
    std::sort(next.begin(), next.end());
    next.erase(std::unique(next.begin(), next.end()), next.end());
    cur.states = std::move(next);
    const int count = static_cast<int>(cur.states.size());
    cur.index.reserve(count);
    for (int s = 0; s < count; ++s) cur.index.emplace(cur.states[s], s);
    cur.cost.assign(count, kInf);
    cur.parent.assign(count, -1);
    cur.moved_class.assign(count, -1);
    cur.moved_from.assign(count, -1);
    result.peak_layer = std::max<std::int64_t>(result.peak_layer, count);

    if (options.exec == Execution::kParallel) {
#pragma omp parallel for schedule(dynamic, 64)
      for (int s = 0; s < count; ++s) relax_state(prev, cur, lay, weight, n, sigma, s);
    } else {
      for (int s = 0; s < count; ++s) relax_state(prev, cur, lay, weight, n, sigma, s);
    }
  }

  // Cheapest final state; ties go to the smallest index.
  const Layer& last = layers[horizon];
  int best = 0;
  for (int s = 1; s < static_cast<int>(last.states.size()); ++s) {
    if (last.cost[s] < last.cost[best]) best = s;
  }
  result.cost = Rational(mpz_class(static_cast<long>(last.cost[best])), scale);
  result.cost.canonicalize();

  // Walk the parents back, then replay moves on concrete servers.
  std::vector<int> path(horizon + 1);
  path[horizon] = best;
  for (int t = horizon; t > 0; --t) path[t - 1] = layers[t].parent[path[t]];
  Schedule sched = stationary_schedule(inst, caps);
  std::vector<int> pos(sched.num_servers());
  for (int i = 0; i < sched.num_servers(); ++i) pos[i] = sched.position(i, 0);
  for (int t = 1; t <= horizon; ++t) {
    const int s = path[t];
    const int j = layers[t].moved_class[s];
    if (j >= 0) {
      const int from = layers[t].moved_from[s];
      for (int r = 0; r < caps[j]; ++r) {
        const int i = sched.first_server(j) + r;
        if (pos[i] == from) {
          pos[i] = inst.request(t);
          break;
        }
      }
    }
    for (int i = 0; i < sched.num_servers(); ++i) sched.set_position(i, t, pos[i]);
  }
  result.schedule = std::move(sched);
  return result;
}

GapBoundReport verify_gap_lower_bound(const GapParams& p, const Rational& factor,
                                      const OracleOptions& options) {
  const Instance inst = gen_gap_instance(p);
  const GapFractional frac = gap_fractional_solution(p);
  GapBoundReport report;
  for (int j = 0; j < inst.num_classes(); ++j) {
    const Rational c = factor * inst.count(j);
    report.capacities.push_back(
        std::max(1, static_cast<int>(floor_rational(c).get_num().get_si())));
  }
  OracleOptions opt = options;
  opt.capacities = report.capacities;
  report.oracle_cost = brute_force_opt(inst, opt).cost;
  report.fractional_cost = frac.cost;
  report.ratio = frac.cost > 0 ? to_double(Rational(report.oracle_cost / frac.cost)) : 0.0;
  return report;
}

}  // namespace wks::oracle
