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

#include "wks/lp/relaxation.hpp"

#include <string>
#include <utility>

#include "wks/error.hpp"

namespace wks::lp {

namespace {

Rational snap(double value, double tolerance) {
  if (value < 0.0 && value > -tolerance) value = 0.0;
  Rational r = snap_double(value, 10'000, tolerance);
  if (r < 0) r = 0;
  return r;
}

std::string tag(const char* prefix, int v, int j, int t) {
  return std::string(prefix) + "_" + std::to_string(v) + "_" + std::to_string(j) + "_" +
         std::to_string(t);
}

}  // namespace

TimeIndexedModel build_lp(const Instance& inst) {
  TimeIndexedModel model;
  model.n = inst.num_vertices();
  model.l = inst.num_classes();
  model.horizon = inst.horizon();
  const int n = model.n;
  const int l = model.l;
  const int horizon = model.horizon;
  const FractionalSolution start = initial_fractional(inst);
  LpProgram& prog = model.program;

  model.x_var.assign(static_cast<std::size_t>(n) * l * horizon, -1);
  for (int v = 0; v < n; ++v) {
    for (int j = 0; j < l; ++j) {
      for (int t = 1; t <= horizon; ++t) {
        model.x_var[model.x_slot(v, j, t)] = prog.add_variable(tag("x", v, j, t), 0.0);
      }
    }
  }
  for (int v = 0; v < n; ++v) {
    for (int j = 0; j < l; ++j) {
      const double half_weight = to_double(inst.weight(j)) / 2.0;
      for (int t = 1; t <= horizon; ++t) {
        const int p = prog.add_variable(tag("up", v, j, t), half_weight);
        const int q = prog.add_variable(tag("down", v, j, t), half_weight);
        std::vector<std::pair<int, double>> coeffs{{model.x_var[model.x_slot(v, j, t)], 1.0},
                                                   {p, -1.0},
                                                   {q, 1.0}};
        double rhs = 0.0;
        if (t == 1) {
          rhs = to_double(start.at(v, j, 0));
        } else {
          coeffs.emplace_back(model.x_var[model.x_slot(v, j, t - 1)], -1.0);
        }
        prog.add_row(std::move(coeffs), Sense::kEqual, rhs, tag("diff", v, j, t));
      }
    }
  }
  for (int j = 0; j < l; ++j) {
    for (int t = 1; t <= horizon; ++t) {
      std::vector<std::pair<int, double>> coeffs;
      for (int v = 0; v < n; ++v) coeffs.emplace_back(model.x_var[model.x_slot(v, j, t)], 1.0);
      prog.add_row(std::move(coeffs), Sense::kLessEqual, inst.count(j),
                   "pack_" + std::to_string(j) + "_" + std::to_string(t));
    }
  }
  for (int t = 1; t <= horizon; ++t) {
    std::vector<std::pair<int, double>> coeffs;
    for (int j = 0; j < l; ++j) {
      coeffs.emplace_back(model.x_var[model.x_slot(inst.request(t), j, t)], 1.0);
    }
    prog.add_row(std::move(coeffs), Sense::kGreaterEqual, 1.0, "cover_" + std::to_string(t));
  }
  return model;
}

IntervalModel build_lp2(const Instance& inst) {
  IntervalModel model;
  const int n = inst.num_vertices();
  const int l = inst.num_classes();
  const int horizon = inst.horizon();
  const FractionalSolution start = initial_fractional(inst);
  LpProgram& prog = model.program;

  // Variables grouped by (v, j); within a group by (start, end).
  for (int v = 0; v < n; ++v) {
    for (int j = 0; j < l; ++j) {
      for (int s = 0; s <= horizon; ++s) {
        for (int e = s + 1; e <= horizon + 1; ++e) {
          prog.add_variable("y_" + std::to_string(v) + "_" + std::to_string(j) + "_" +
                                std::to_string(s) + "_" + std::to_string(e),
                            to_double(inst.weight(j)));
          model.keys.push_back({v, j, s, e});
        }
      }
    }
  }
  const int per_group = static_cast<int>(model.keys.size()) / (n * l);
  auto containing = [&](int v, int j, int t) {
    std::vector<std::pair<int, double>> coeffs;
    const int base = (v * l + j) * per_group;
    for (int k = 0; k < per_group; ++k) {
      const auto& key = model.keys[base + k];
      if (key.start <= t && t < key.end) coeffs.emplace_back(base + k, 1.0);
    }
    return coeffs;
  };
  for (int v = 0; v < n; ++v) {
    for (int j = 0; j < l; ++j) {
      prog.add_row(containing(v, j, 0), Sense::kEqual, to_double(start.at(v, j, 0)),
                   tag("init", v, j, 0));
    }
  }
  for (int j = 0; j < l; ++j) {
    for (int t = 1; t <= horizon; ++t) {
      std::vector<std::pair<int, double>> coeffs;
      for (int v = 0; v < n; ++v) {
        auto part = containing(v, j, t);
        coeffs.insert(coeffs.end(), part.begin(), part.end());
      }
      prog.add_row(std::move(coeffs), Sense::kLessEqual, inst.count(j),
                   "pack_" + std::to_string(j) + "_" + std::to_string(t));
    }
  }
  for (int t = 1; t <= horizon; ++t) {
    std::vector<std::pair<int, double>> coeffs;
    for (int j = 0; j < l; ++j) {
      auto part = containing(inst.request(t), j, t);
      coeffs.insert(coeffs.end(), part.begin(), part.end());
    }
    prog.add_row(std::move(coeffs), Sense::kGreaterEqual, 1.0, "cover_" + std::to_string(t));
  }
  return model;
}

FractionalSolution extract_fractional(const Instance& inst, const TimeIndexedModel& model,
                                      const Solution& solution, double tolerance) {
  FractionalSolution x = initial_fractional(inst);
  for (int v = 0; v < model.n; ++v) {
    for (int j = 0; j < model.l; ++j) {
      for (int t = 1; t <= model.horizon; ++t) {
        x.at(v, j, t) = snap(solution.values[model.x_var[model.x_slot(v, j, t)]], tolerance);
      }
    }
  }
  return x;
}

RelaxationResult solve_relaxation(const Instance& inst, const SolveOptions& options) {
  RelaxationResult result;
  if (inst.horizon() == 0) {
    result.status = Status::kOptimal;
    result.x = initial_fractional(inst);
    result.exact_cost = 0;
    return result;
  }
  const TimeIndexedModel model = build_lp(inst);
  const Solution solution = solve_lp(model.program, options);
  result.status = solution.status;
  result.iterations = solution.iterations;
  if (solution.status != Status::kOptimal) return result;
  result.objective = solution.objective;
  result.x = extract_fractional(inst, model, solution, options.tolerance);
  result.exact_cost = fractional_cost(inst, result.x);
  return result;
}

IntervalRelaxationResult solve_interval_relaxation(const Instance& inst,
                                                   const SolveOptions& options) {
  IntervalRelaxationResult result;
  const IntervalModel model = build_lp2(inst);
  const Solution solution = solve_lp(model.program, options);
  result.status = solution.status;
  if (solution.status != Status::kOptimal) return result;
  result.objective = solution.objective;
  result.y = IntervalSolution(inst.num_vertices(), inst.num_classes(), inst.horizon());
  for (std::size_t k = 0; k < model.keys.size(); ++k) {
    result.y.add(model.keys[k], snap(solution.values[k], options.tolerance));
  }
  return result;
}

}  // namespace wks::lp
