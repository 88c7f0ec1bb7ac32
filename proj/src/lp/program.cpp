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

#include "wks/lp/program.hpp"

#include <cmath>
#include <ostream>

#include "wks/error.hpp"

namespace wks::lp {

int LpProgram::add_variable(std::string name, double cost, double upper) {
  if (!std::isfinite(cost)) throw StructuralError("non-finite objective coefficient");
  if (!(upper >= 0.0)) throw StructuralError("variable upper bound must be >= 0");
  cost_.push_back(cost);
  upper_.push_back(upper);
  names_.push_back(std::move(name));
  return num_variables() - 1;
}

int LpProgram::add_row(std::vector<std::pair<int, double>> coeffs, Sense sense, double rhs,
                       std::string name) {
  if (!std::isfinite(rhs)) throw StructuralError("non-finite right-hand side");
  for (const auto& [var, coef] : coeffs) {
    if (var < 0 || var >= num_variables()) throw StructuralError("row references unknown variable");
    if (!std::isfinite(coef)) throw StructuralError("non-finite row coefficient");
  }
  rows_.push_back(Row{std::move(coeffs), sense, rhs, std::move(name)});
  return num_rows() - 1;
}

void write_lp_text(const LpProgram& prog, std::ostream& out) {
  const auto old_precision = out.precision(17);
  out << "lp " << prog.num_variables() << ' ' << prog.num_rows() << " offset "
      << prog.objective_offset() << '\n';
  for (int v = 0; v < prog.num_variables(); ++v) {
    out << "var " << v << ' ' << prog.variable_name(v) << " cost " << prog.cost(v) << " upper ";
    if (std::isinf(prog.upper(v))) {
      out << "inf";
    } else {
      out << prog.upper(v);
    }
    out << '\n';
  }
  for (int r = 0; r < prog.num_rows(); ++r) {
    const auto& row = prog.row(r);
    const char* sense = row.sense == Sense::kLessEqual      ? "le"
                        : row.sense == Sense::kGreaterEqual ? "ge"
                                                            : "eq";
    out << "row " << r << ' ' << (row.name.empty() ? "-" : row.name) << ' ' << sense << ' '
        << row.rhs << " :";
    for (const auto& [var, coef] : row.coeffs) out << ' ' << var << '*' << coef;
    out << '\n';
  }
  out.precision(old_precision);
}

}  // namespace wks::lp
