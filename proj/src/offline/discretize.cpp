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

#include "wks/offline/discretize.hpp"

#include <algorithm>
#include <sstream>

#include "wks/error.hpp"

namespace wks::offline {

namespace {

struct PairResult {
  std::vector<LevelTrace> levels;
};

// One (v, j) profile, all levels.
PairResult sweep_pair(const FractionalSolution& x, int v, int j, const Rational& scale,
                      const Rational& half_eps) {
  const int horizon = x.horizon();
  std::vector<Rational> scaled(horizon + 1);
  Rational peak = 0;
  for (int t = 0; t <= horizon; ++t) {
    scaled[t] = scale * x.at(v, j, t);
    peak = std::max(peak, scaled[t]);
  }
  PairResult out;
  const long top = ceil_rational(peak).get_num().get_si();
  for (long h = 1; h <= top; ++h) {
    LevelTrace lt{v, j, static_cast<int>(h), {}, {}};
    const Rational up_at(h);
    const Rational down_at = up_at - half_eps;
    bool up = false;
    int opened = 0;
    for (int t = 0; t <= horizon; ++t) {
      if (!up && scaled[t] >= up_at) {
        up = true;
        opened = t;
        lt.events.push_back({LevelEventKind::kUp, t});
      } else if (up && scaled[t] <= down_at) {
        up = false;
        lt.events.push_back({LevelEventKind::kDown, t});
        lt.intervals.emplace_back(opened, t);
      }
    }
    if (up) {
      lt.events.push_back({LevelEventKind::kDown, horizon + 1});
      lt.intervals.emplace_back(opened, horizon + 1);
    }
    if (!lt.events.empty()) out.levels.push_back(std::move(lt));
  }
  return out;
}

std::string describe(const char* what, int v, int j, int t) {
  std::ostringstream os;
  os << what << " at v=" << v << " j=" << j << " t=" << t;
  return os.str();
}

}  // namespace

DiscretizedSolution scale_round(const Instance& inst, const FractionalSolution& x,
                                const Rational& eps, Execution exec) {
  if (!(eps > 0 && eps < 1)) throw StructuralError("eps must lie in (0, 1)");
  if (x.num_vertices() != inst.num_vertices() || x.num_classes() != inst.num_classes() ||
      x.horizon() != inst.horizon()) {
    throw StructuralError("fractional solution dimensions do not match instance");
  }
  DiscretizedSolution disc;
  disc.eps = eps;
  disc.scale = (Rational(2) + eps / 2) * inst.num_classes();
  const Rational half_eps = eps / 2;

  const int pairs = inst.num_vertices() * inst.num_classes();
  std::vector<PairResult> results(pairs);
  if (exec == Execution::kParallel) {
#pragma omp parallel for schedule(dynamic)
    for (int p = 0; p < pairs; ++p) {
      results[p] = sweep_pair(x, p / inst.num_classes(), p % inst.num_classes(), disc.scale,
                              half_eps);
    }
  } else {
    for (int p = 0; p < pairs; ++p) {
      results[p] = sweep_pair(x, p / inst.num_classes(), p % inst.num_classes(), disc.scale,
                              half_eps);
    }
  }

  disc.ybar = IntervalSolution(inst.num_vertices(), inst.num_classes(), inst.horizon());
  for (auto& r : results) {
    for (auto& lt : r.levels) {
      for (const auto& [s, e] : lt.intervals) disc.ybar.add({lt.v, lt.j, s, e}, Rational(1));
      disc.trace.push_back(std::move(lt));
    }
  }
  disc.xbar = x_from_y(disc.ybar);
  return disc;
}

DiscretizationReport check_discretization(const DiscretizedSolution& disc, const Instance& inst,
                                          const FractionalSolution& x) {
  DiscretizationReport rep;
  const int n = inst.num_vertices();
  const int l = inst.num_classes();
  const int horizon = inst.horizon();
  const Rational half_eps = disc.eps / 2;

  bool first = true;
  for (int v = 0; v < n; ++v) {
    for (int j = 0; j < l; ++j) {
      for (int t = 0; t <= horizon; ++t) {
        const Rational scaled = disc.scale * x.at(v, j, t);
        const Rational& bar = disc.xbar.at(v, j, t);
        const Rational lower = bar - (scaled - 1);
        const Rational upper = scaled + half_eps - bar;
        if (first || lower < rep.sandwich_lower_margin) rep.sandwich_lower_margin = lower;
        if (first || upper < rep.sandwich_upper_margin) rep.sandwich_upper_margin = upper;
        first = false;
        if (lower <= 0 || upper <= 0) {
          rep.sandwich_ok = false;
          rep.violations.push_back(describe("sandwich", v, j, t));
        }
      }
    }
  }

  for (int t = 1; t <= horizon; ++t) {
    Rational sum = 0;
    for (int j = 0; j < l; ++j) sum += disc.xbar.at(inst.request(t), j, t);
    if (t == 1 || sum < rep.min_covering) rep.min_covering = sum;
    if (sum < l) {
      rep.covering_ok = false;
      rep.violations.push_back(describe("covering", inst.request(t), -1, t));
    }
    if (sum < l + 1) rep.covering_strict_ok = false;
  }

  first = true;
  for (int j = 0; j < l; ++j) {
    const Rational cap = (Rational(2) + disc.eps) * l * inst.count(j);
    for (int t = 0; t <= horizon; ++t) {
      Rational sum = 0;
      for (int v = 0; v < n; ++v) sum += disc.xbar.at(v, j, t);
      const Rational excess = sum - cap;
      if (first || excess > rep.worst_packing_excess) rep.worst_packing_excess = excess;
      first = false;
      if (excess > 0) {
        rep.packing_ok = false;
        rep.violations.push_back(describe("packing", -1, j, t));
      }
    }
  }

  rep.ybar_cost = interval_cost(inst, disc.ybar);
  rep.y_cost = interval_cost(inst, y_from_x(x));
  rep.cost_bound_constant = 2 * disc.scale;
  if (rep.y_cost > 0) {
    rep.measured_constant = disc.eps * rep.ybar_cost / rep.y_cost;
    rep.cost_ok = rep.measured_constant <= rep.cost_bound_constant;
  } else {
    rep.measured_constant = 0;
    rep.cost_ok = rep.ybar_cost == 0;
  }
  if (!rep.cost_ok) rep.violations.push_back("cost bound exceeded");

  rep.ok = rep.sandwich_ok && rep.covering_ok && rep.packing_ok && rep.cost_ok;
  return rep;
}

nlohmann::json report_to_json(const DiscretizationReport& r) {
  return nlohmann::json{
      {"ok", r.ok},
      {"sandwich_ok", r.sandwich_ok},
      {"sandwich_lower_margin", to_rational_string(r.sandwich_lower_margin)},
      {"sandwich_upper_margin", to_rational_string(r.sandwich_upper_margin)},
      {"covering_ok", r.covering_ok},
      {"covering_strict_ok", r.covering_strict_ok},
      {"min_covering", to_rational_string(r.min_covering)},
      {"packing_ok", r.packing_ok},
      {"worst_packing_excess", to_rational_string(r.worst_packing_excess)},
      {"cost_ok", r.cost_ok},
      {"ybar_cost", to_rational_string(r.ybar_cost)},
      {"y_cost", to_rational_string(r.y_cost)},
      {"cost_bound_constant", to_rational_string(r.cost_bound_constant)},
      {"measured_constant", to_rational_string(r.measured_constant)},
      {"violations", r.violations},
  };
}

}  // namespace wks::offline
