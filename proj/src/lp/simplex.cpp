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

#include "wks/lp/simplex.hpp"

#include <algorithm>
#include <cmath>
#include <utility>
#include <vector>

namespace wks::lp {

std::string to_string(Status status) {
  switch (status) {
    case Status::kOptimal:
      return "optimal";
    case Status::kInfeasible:
      return "infeasible";
    case Status::kUnbounded:
      return "unbounded";
    case Status::kIterationLimit:
      return "iteration_limit";
  }
  return "unknown";
}

namespace {

using SparseColumn = std::vector<std::pair<int, double>>;

// min c.x  s.t.  A x = b,  x >= 0,  b >= 0.
struct StandardForm {
  int rows = 0;
  std::vector<SparseColumn> columns;
  std::vector<double> cost;
  std::vector<double> rhs;
  std::vector<bool> artificial;
  std::vector<int> initial_basis;  // one unit column per row
  int original_columns = 0;
};

StandardForm to_standard_form(const LpProgram& prog) {
  StandardForm sf;
  sf.original_columns = prog.num_variables();
  sf.columns.resize(prog.num_variables());
  sf.cost.assign(prog.num_variables(), 0.0);
  for (int v = 0; v < prog.num_variables(); ++v) sf.cost[v] = prog.cost(v);
  sf.artificial.assign(prog.num_variables(), false);

  std::vector<Row> rows = prog.rows();
  for (int v = 0; v < prog.num_variables(); ++v) {
    if (std::isfinite(prog.upper(v))) {
      rows.push_back(Row{{{v, 1.0}}, Sense::kLessEqual, prog.upper(v), {}});
    }
  }
  sf.rows = static_cast<int>(rows.size());
  sf.rhs.resize(sf.rows);
  sf.initial_basis.resize(sf.rows);

  auto add_column = [&](SparseColumn col, bool is_artificial) {
    sf.columns.push_back(std::move(col));
    sf.cost.push_back(0.0);
    sf.artificial.push_back(is_artificial);
    return static_cast<int>(sf.columns.size()) - 1;
  };

  for (int r = 0; r < sf.rows; ++r) {
    Row row = rows[r];
    if (row.rhs < 0.0) {
      row.rhs = -row.rhs;
      for (auto& [var, coef] : row.coeffs) coef = -coef;
      if (row.sense == Sense::kLessEqual) {
        row.sense = Sense::kGreaterEqual;
      } else if (row.sense == Sense::kGreaterEqual) {
        row.sense = Sense::kLessEqual;
      }
    }
    sf.rhs[r] = row.rhs;
    for (const auto& [var, coef] : row.coeffs) {
      if (coef != 0.0) sf.columns[var].emplace_back(r, coef);
    }
    switch (row.sense) {
      case Sense::kLessEqual:
        sf.initial_basis[r] = add_column({{r, 1.0}}, false);
        break;
      case Sense::kGreaterEqual:
        add_column({{r, -1.0}}, false);
        sf.initial_basis[r] = add_column({{r, 1.0}}, true);
        break;
      case Sense::kEqual:
        sf.initial_basis[r] = add_column({{r, 1.0}}, true);
        break;
    }
  }
  // Duplicate entries for one (row, var) pair are merged so columns are clean.
  for (auto& col : sf.columns) {
    std::sort(col.begin(), col.end());
    SparseColumn merged;
    for (const auto& e : col) {
      if (!merged.empty() && merged.back().first == e.first) {
        merged.back().second += e.second;
      } else {
        merged.push_back(e);
      }
    }
    std::erase_if(merged, [](const auto& e) { return e.second == 0.0; });
    col = std::move(merged);
  }
  return sf;
}

class RevisedSimplex {
 public:
  RevisedSimplex(const StandardForm& sf, const SolveOptions& options)
      : sf_(sf), opt_(options), m_(sf.rows) {
    basis_ = sf.initial_basis;
    is_basic_.assign(sf.columns.size(), false);
    for (int c : basis_) is_basic_[c] = true;
    binv_.assign(static_cast<std::size_t>(m_) * m_, 0.0);
    for (int i = 0; i < m_; ++i) binv_[idx(i, i)] = 1.0;
    xb_ = sf.rhs;
  }

  // Runs simplex iterations for the given costs; columns flagged in
  // `frozen` never enter the basis.
  Status optimize(const std::vector<double>& cost, const std::vector<bool>& frozen) {
    std::vector<double> y(m_);
    std::vector<double> u(m_);
    while (true) {
      if (iterations_ >= opt_.max_iterations) return Status::kIterationLimit;
      if (pivots_since_refactor_ >= opt_.refactor_interval) refactor();

      std::fill(y.begin(), y.end(), 0.0);
      for (int k = 0; k < m_; ++k) {
        const double cb = cost[basis_[k]];
        if (cb == 0.0) continue;
        const double* row = &binv_[idx(k, 0)];
        for (int i = 0; i < m_; ++i) y[i] += cb * row[i];
      }

      int entering = -1;
      for (int j = 0; j < static_cast<int>(sf_.columns.size()); ++j) {
        if (is_basic_[j] || frozen[j]) continue;
        double d = cost[j];
        for (const auto& [i, a] : sf_.columns[j]) d -= y[i] * a;
        if (d < -opt_.tolerance) {
          entering = j;
          break;
        }
      }
      if (entering < 0) return Status::kOptimal;

      std::fill(u.begin(), u.end(), 0.0);
      for (const auto& [i, a] : sf_.columns[entering]) {
        for (int k = 0; k < m_; ++k) u[k] += binv_[idx(k, i)] * a;
      }

      int leave = -1;
      double best = 0.0;
      for (int k = 0; k < m_; ++k) {
        if (u[k] <= kPivotTolerance) continue;
        const double ratio = std::max(xb_[k], 0.0) / u[k];
        if (leave < 0 || ratio < best - kRatioTieTolerance ||
            (ratio <= best + kRatioTieTolerance && basis_[k] < basis_[leave])) {
          if (leave < 0 || ratio < best - kRatioTieTolerance) best = ratio;
          leave = k;
        }
      }
      if (leave < 0) return Status::kUnbounded;
      pivot(entering, leave, u);
      ++iterations_;
    }
  }

  // Pivots basic artificials at zero level out of the basis where possible.
  void expel_artificials() {
    std::vector<double> u(m_);
    for (int r = 0; r < m_; ++r) {
      if (!sf_.artificial[basis_[r]]) continue;
      const double* row = &binv_[idx(r, 0)];
      for (int j = 0; j < static_cast<int>(sf_.columns.size()); ++j) {
        if (is_basic_[j] || sf_.artificial[j]) continue;
        double alpha = 0.0;
        for (const auto& [i, a] : sf_.columns[j]) alpha += row[i] * a;
        if (std::abs(alpha) > 1e-7) {
          std::fill(u.begin(), u.end(), 0.0);
          for (const auto& [i, a] : sf_.columns[j]) {
            for (int k = 0; k < m_; ++k) u[k] += binv_[idx(k, i)] * a;
          }
          pivot(j, r, u);
          break;
        }
      }
    }
  }

  double value_of(const std::vector<double>& cost) const {
    double total = 0.0;
    for (int k = 0; k < m_; ++k) total += cost[basis_[k]] * xb_[k];
    return total;
  }

  std::vector<double> column_values() const {
    std::vector<double> x(sf_.columns.size(), 0.0);
    for (int k = 0; k < m_; ++k) x[basis_[k]] = xb_[k];
    return x;
  }

  long iterations() const { return iterations_; }

 private:
  static constexpr double kPivotTolerance = 1e-9;
  static constexpr double kRatioTieTolerance = 1e-12;

  std::size_t idx(int r, int c) const { return static_cast<std::size_t>(r) * m_ + c; }

  void pivot(int entering, int leave, const std::vector<double>& u) {
    const double theta = std::max(xb_[leave], 0.0) / u[leave];
    for (int k = 0; k < m_; ++k) {
      if (k == leave) continue;
      xb_[k] -= theta * u[k];
      if (std::abs(xb_[k]) < 1e-13) xb_[k] = 0.0;
    }
    xb_[leave] = theta;

    double* prow = &binv_[idx(leave, 0)];
    const double inv = 1.0 / u[leave];
    for (int i = 0; i < m_; ++i) prow[i] *= inv;
    for (int k = 0; k < m_; ++k) {
      if (k == leave || u[k] == 0.0) continue;
      double* row = &binv_[idx(k, 0)];
      const double f = u[k];
      for (int i = 0; i < m_; ++i) row[i] -= f * prow[i];
    }
    is_basic_[basis_[leave]] = false;
    is_basic_[entering] = true;
    basis_[leave] = entering;
    ++pivots_since_refactor_;
  }

  // Gauss-Jordan with partial pivoting on the current basis matrix.
  void refactor() {
    pivots_since_refactor_ = 0;
    std::vector<double> b(static_cast<std::size_t>(m_) * m_, 0.0);
    for (int k = 0; k < m_; ++k) {
      for (const auto& [i, a] : sf_.columns[basis_[k]]) b[idx(i, k)] = a;
    }
    std::vector<double> inv(static_cast<std::size_t>(m_) * m_, 0.0);
    for (int i = 0; i < m_; ++i) inv[idx(i, i)] = 1.0;
    for (int c = 0; c < m_; ++c) {
      int p = c;
      for (int r = c + 1; r < m_; ++r) {
        if (std::abs(b[idx(r, c)]) > std::abs(b[idx(p, c)])) p = r;
      }
      if (std::abs(b[idx(p, c)]) < 1e-14) return;  // keep the eta-updated inverse
      if (p != c) {
        for (int i = 0; i < m_; ++i) {
          std::swap(b[idx(p, i)], b[idx(c, i)]);
          std::swap(inv[idx(p, i)], inv[idx(c, i)]);
        }
      }
      const double d = 1.0 / b[idx(c, c)];
      for (int i = 0; i < m_; ++i) {
        b[idx(c, i)] *= d;
        inv[idx(c, i)] *= d;
      }
      for (int r = 0; r < m_; ++r) {
        if (r == c) continue;
        const double f = b[idx(r, c)];
        if (f == 0.0) continue;
        for (int i = 0; i < m_; ++i) {
          b[idx(r, i)] -= f * b[idx(c, i)];
          inv[idx(r, i)] -= f * inv[idx(c, i)];
        }
      }
    }
    // Row k of B^-1 belongs to basis position k.
    binv_ = std::move(inv);
    for (int k = 0; k < m_; ++k) {
      double v = 0.0;
      for (int i = 0; i < m_; ++i) v += binv_[idx(k, i)] * sf_.rhs[i];
      xb_[k] = std::abs(v) < 1e-13 ? 0.0 : v;
    }
  }

  const StandardForm& sf_;
  const SolveOptions& opt_;
  int m_;
  std::vector<int> basis_;
  std::vector<bool> is_basic_;
  std::vector<double> binv_;
  std::vector<double> xb_;
  long iterations_ = 0;
  int pivots_since_refactor_ = 0;
};

}  // namespace

Solution solve_lp(const LpProgram& prog, const SolveOptions& options) {
  const StandardForm sf = to_standard_form(prog);
  Solution solution;
  RevisedSimplex simplex(sf, options);

  std::vector<double> phase1_cost(sf.columns.size(), 0.0);
  bool any_artificial = false;
  for (std::size_t c = 0; c < sf.columns.size(); ++c) {
    if (sf.artificial[c]) {
      phase1_cost[c] = 1.0;
      any_artificial = true;
    }
  }
  if (any_artificial) {
    const std::vector<bool> none(sf.columns.size(), false);
    std::vector<bool> frozen = sf.artificial;
    Status st = simplex.optimize(phase1_cost, frozen);
    solution.iterations = simplex.iterations();
    if (st == Status::kIterationLimit) {
      solution.status = st;
      return solution;
    }
    double scale = 1.0;
    for (double b : sf.rhs) scale = std::max(scale, std::abs(b));
    if (simplex.value_of(phase1_cost) > options.tolerance * scale * 10) {
      solution.status = Status::kInfeasible;
      return solution;
    }
    simplex.expel_artificials();
  }

  Status st = simplex.optimize(sf.cost, sf.artificial);
  solution.iterations = simplex.iterations();
  solution.status = st;
  if (st != Status::kOptimal) return solution;

  const auto all = simplex.column_values();
  solution.values.assign(all.begin(), all.begin() + sf.original_columns);
  for (double& v : solution.values) {
    if (v < 0.0 && v > -options.tolerance) v = 0.0;
  }
  double obj = prog.objective_offset();
  for (int v = 0; v < prog.num_variables(); ++v) obj += prog.cost(v) * solution.values[v];
  solution.objective = obj;
  return solution;
}

}  // namespace wks::lp
