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

#include "wks/instance.hpp"

#include <string>
#include <utility>

#include "wks/error.hpp"

namespace wks {

ProblemSetup::ProblemSetup(int n, std::vector<WeightClass> classes,
                           std::vector<int> initial_positions)
    : n_(n), classes_(std::move(classes)), initial_(std::move(initial_positions)) {
  if (n_ < 1) throw StructuralError("instance needs at least one vertex");
  if (classes_.empty()) throw StructuralError("instance needs at least one weight class");
  int total = 0;
  for (std::size_t j = 0; j < classes_.size(); ++j) {
    const auto& c = classes_[j];
    if (c.weight <= 0) {
      throw StructuralError("weight of class " + std::to_string(j) + " must be positive");
    }
    if (c.count < 1) {
      throw StructuralError("class " + std::to_string(j) + " needs at least one server");
    }
    if (j > 0 && !(classes_[j - 1].weight > c.weight)) {
      throw StructuralError("class weights must be distinct and strictly descending");
    }
    first_server_.push_back(total);
    total += c.count;
  }
  if (static_cast<int>(initial_.size()) != total) {
    throw StructuralError("expected " + std::to_string(total) +
                          " initial positions, got " + std::to_string(initial_.size()));
  }
  for (int v : initial_) {
    if (v < 0 || v >= n_) {
      throw StructuralError("initial position " + std::to_string(v) + " out of range");
    }
  }
}

int ProblemSetup::class_of_server(int i) const {
  for (int j = num_classes() - 1; j >= 0; --j) {
    if (i >= first_server_[j]) return j;
  }
  return 0;
}

std::span<const int> ProblemSetup::initial_positions(int j) const {
  return std::span<const int>(initial_).subspan(first_server_[j], classes_[j].count);
}

Instance::Instance(int n, std::vector<WeightClass> classes,
                   std::vector<int> initial_positions, std::vector<int> requests,
                   nlohmann::json metadata)
    : Instance(ProblemSetup(n, std::move(classes), std::move(initial_positions)),
               std::move(requests), std::move(metadata)) {}

Instance::Instance(ProblemSetup setup, std::vector<int> requests,
                   nlohmann::json metadata)
    : setup_(std::move(setup)),
      requests_(std::move(requests)),
      metadata_(std::move(metadata)) {
  for (int v : requests_) {
    if (v < 0 || v >= setup_.num_vertices()) {
      throw StructuralError("request " + std::to_string(v) + " out of range");
    }
  }
  if (metadata_.is_null()) metadata_ = nlohmann::json::object();
}

std::vector<int> augmented_initial_positions(const ProblemSetup& setup, int j,
                                             int count) {
  const auto base = setup.initial_positions(j);
  std::vector<int> out(count);
  for (int i = 0; i < count; ++i) out[i] = base[i % base.size()];
  return out;
}

}  // namespace wks
