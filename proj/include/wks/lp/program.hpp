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

#ifndef WKS_LP_PROGRAM_HPP_
#define WKS_LP_PROGRAM_HPP_

#include <iosfwd>
#include <limits>
#include <string>
#include <utility>
#include <vector>

namespace wks::lp {

enum class Sense { kLessEqual, kGreaterEqual, kEqual };

struct Row {
  std::vector<std::pair<int, double>> coeffs;  // (variable, coefficient)
  Sense sense = Sense::kLessEqual;
  double rhs = 0.0;
  std::string name;
};

// min objective . x + offset  subject to rows, 0 <= x <= upper.
class LpProgram {
 public:
  static constexpr double kInfinity = std::numeric_limits<double>::infinity();

  int add_variable(std::string name, double cost, double upper = kInfinity);
  int add_row(std::vector<std::pair<int, double>> coeffs, Sense sense, double rhs,
              std::string name = {});

  int num_variables() const { return static_cast<int>(cost_.size()); }
  int num_rows() const { return static_cast<int>(rows_.size()); }
  double cost(int var) const { return cost_[var]; }
  double upper(int var) const { return upper_[var]; }
  const std::string& variable_name(int var) const { return names_[var]; }
  const Row& row(int r) const { return rows_[r]; }
  const std::vector<Row>& rows() const { return rows_; }

  double objective_offset() const { return offset_; }
  void set_objective_offset(double offset) { offset_ = offset; }

 private:
  std::vector<double> cost_;
  std::vector<double> upper_;
  std::vector<std::string> names_;
  std::vector<Row> rows_;
  double offset_ = 0.0;
};

// Plain-text dump, one line per item:
//   lp <num_variables> <num_rows> offset <offset>
//   var <index> <name> cost <c> upper <u|inf>
//   row <index> <name|-> <le|ge|eq> <rhs> : <var>*<coef> ...
void write_lp_text(const LpProgram& prog, std::ostream& out);

}  // namespace wks::lp

#endif  // WKS_LP_PROGRAM_HPP_
