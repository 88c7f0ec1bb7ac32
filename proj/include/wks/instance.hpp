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

#ifndef WKS_INSTANCE_HPP_
#define WKS_INSTANCE_HPP_

#include <span>
#include <string>
#include <vector>

#include "json.hpp"
#include "wks/rational.hpp"

namespace wks {

struct WeightClass {
  Rational weight;
  int count = 0;
};

// Everything about a weighted k-server instance except the request sequence.
// Online algorithms are built from this so they cannot peek at the future.
class ProblemSetup {
 public:
  ProblemSetup() = default;
  // Validates: n >= 1, at least one class, weights positive, distinct and
  // strictly descending, counts positive, one initial vertex per server in
  // class-major order. Throws StructuralError.
  ProblemSetup(int n, std::vector<WeightClass> classes,
               std::vector<int> initial_positions);

  int num_vertices() const { return n_; }
  int num_classes() const { return static_cast<int>(classes_.size()); }
  int num_servers() const { return static_cast<int>(initial_.size()); }

  const WeightClass& weight_class(int j) const { return classes_[j]; }
  std::span<const WeightClass> classes() const { return classes_; }
  const Rational& weight(int j) const { return classes_[j].weight; }
  int count(int j) const { return classes_[j].count; }

  // Index of the first server of class j in class-major order.
  int first_server(int j) const { return first_server_[j]; }
  int class_of_server(int i) const;

  std::span<const int> initial_positions() const { return initial_; }
  // Initial vertices of the k_j original servers of class j.
  std::span<const int> initial_positions(int j) const;

 private:
  int n_ = 0;
  std::vector<WeightClass> classes_;
  std::vector<int> initial_;
  std::vector<int> first_server_;
};

class Instance {
 public:
  Instance() = default;
  Instance(int n, std::vector<WeightClass> classes,
           std::vector<int> initial_positions, std::vector<int> requests,
           nlohmann::json metadata = nlohmann::json::object());
  Instance(ProblemSetup setup, std::vector<int> requests,
           nlohmann::json metadata = nlohmann::json::object());

  const ProblemSetup& setup() const { return setup_; }
  int num_vertices() const { return setup_.num_vertices(); }
  int num_classes() const { return setup_.num_classes(); }
  int num_servers() const { return setup_.num_servers(); }
  const Rational& weight(int j) const { return setup_.weight(j); }
  int count(int j) const { return setup_.count(j); }

  // T, the number of requests.
  int horizon() const { return static_cast<int>(requests_.size()); }
  // sigma_t for t in 1..T.
  int request(int t) const { return requests_[t - 1]; }
  std::span<const int> requests() const { return requests_; }

  const nlohmann::json& metadata() const { return metadata_; }
  nlohmann::json& mutable_metadata() { return metadata_; }

 private:
  ProblemSetup setup_;
  std::vector<int> requests_;
  nlohmann::json metadata_ = nlohmann::json::object();
};

// Initial vertices for `count` servers of class j. The first k_j are the
// declared initial positions; augmented servers copy them cyclically, so an
// augmented pool starts where the original servers start.
std::vector<int> augmented_initial_positions(const ProblemSetup& setup, int j,
                                             int count);

}  // namespace wks

#endif  // WKS_INSTANCE_HPP_
