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

#include "wks/fractional.hpp"

#include <cstdlib>

#include "wks/error.hpp"
#include "wks/schedule.hpp"

namespace wks {

FractionalSolution::FractionalSolution(int num_vertices, int num_classes, int horizon)
    : n_(num_vertices), l_(num_classes), horizon_(horizon) {
  if (n_ < 0 || l_ < 0 || horizon_ < 0) throw StructuralError("negative dimension");
  x_.assign(static_cast<std::size_t>(n_) * l_ * (horizon_ + 1), Rational(0));
}

FractionalSolution initial_fractional(const Instance& inst) {
  FractionalSolution frac(inst.num_vertices(), inst.num_classes(), inst.horizon());
  for (int j = 0; j < inst.num_classes(); ++j) {
    for (int v : inst.setup().initial_positions(j)) frac.at(v, j, 0) += 1;
  }
  return frac;
}

FractionalSolution fractional_from_schedule(const Instance& inst, const Schedule& sched) {
  if (sched.horizon() != inst.horizon() || sched.num_classes() != inst.num_classes()) {
    throw StructuralError("schedule dimensions do not match instance");
  }
  FractionalSolution frac(inst.num_vertices(), inst.num_classes(), inst.horizon());
  for (int i = 0; i < sched.num_servers(); ++i) {
    const int j = sched.class_of_server(i);
    for (int t = 0; t <= sched.horizon(); ++t) frac.at(sched.position(i, t), j, t) += 1;
  }
  return frac;
}

Rational fractional_cost(const Instance& inst, const FractionalSolution& frac) {
  if (frac.num_vertices() != inst.num_vertices() ||
      frac.num_classes() != inst.num_classes() || frac.horizon() != inst.horizon()) {
    throw StructuralError("fractional solution dimensions do not match instance");
  }
  Rational total = 0;
  for (int j = 0; j < inst.num_classes(); ++j) {
    Rational variation = 0;
    for (int v = 0; v < inst.num_vertices(); ++v) {
      for (int t = 1; t <= inst.horizon(); ++t) {
        variation += abs(Rational(frac.at(v, j, t) - frac.at(v, j, t - 1)));
      }
    }
    total += inst.weight(j) * variation;
  }
  return total / 2;
}

FeasibilityReport check_lp_feasibility(const Instance& inst, const FractionalSolution& frac,
                                       const Rational& tolerance) {
  if (frac.num_vertices() != inst.num_vertices() ||
      frac.num_classes() != inst.num_classes() || frac.horizon() != inst.horizon()) {
    throw StructuralError("fractional solution dimensions do not match instance");
  }
  FeasibilityReport report;
  bool first_pack = true;
  bool first_cover = true;
  bool first_entry = true;
  for (int t = 0; t <= inst.horizon(); ++t) {
    for (int j = 0; j < inst.num_classes(); ++j) {
      Rational mass = 0;
      for (int v = 0; v < inst.num_vertices(); ++v) {
        const auto& x = frac.at(v, j, t);
        if (first_entry || x < report.most_negative) report.most_negative = x;
        first_entry = false;
        mass += x;
      }
      Rational excess = mass - inst.count(j);
      if (first_pack || excess > report.worst_packing_excess) {
        report.worst_packing_excess = excess;
      }
      first_pack = false;
    }
    if (t == 0) continue;
    Rational cover = 0;
    for (int j = 0; j < inst.num_classes(); ++j) cover += frac.at(inst.request(t), j, t);
    Rational gap = 1 - cover;
    if (first_cover || gap > report.worst_covering_gap) report.worst_covering_gap = gap;
    first_cover = false;
  }
  if (first_cover) report.worst_covering_gap = -1;
  report.ok = report.worst_packing_excess <= tolerance &&
              report.worst_covering_gap <= tolerance && report.most_negative >= -tolerance;
  return report;
}

}  // namespace wks
