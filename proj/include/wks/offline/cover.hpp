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

#ifndef WKS_OFFLINE_COVER_HPP_
#define WKS_OFFLINE_COVER_HPP_

#include <vector>

#include "wks/instance.hpp"
#include "wks/offline/discretize.hpp"
#include "wks/parallel.hpp"
#include "wks/rational.hpp"

namespace wks::offline {

struct CoverCandidate {
  int j = 0;
  int start = 0;  // [start, end)
  int end = 0;
  Rational weight;
};

struct CoverResult {
  std::vector<int> chosen;  // indices into the candidate list, in time order
  Rational cost;
};

// Minimum-weight set of candidates whose union contains every point.
// Backward DP over the sorted points: g(i) = min over candidates c covering
// point i of w(c) + g(one past the last point c covers). Among optimal
// choices the smallest (start, end, j) is taken. Throws InfeasibilityError
// when some point lies in no candidate.
CoverResult min_weight_cover(const std::vector<int>& points,
                             const std::vector<CoverCandidate>& candidates);

struct VertexCover {
  int v = 0;
  std::vector<CoverCandidate> chosen;
  Rational cost;
};

// Stage II for vertex v: candidates are the distinct (j, I) in the support
// of ybar at v, weighted W_j; points are the request times at v.
VertexCover interval_cover(const Instance& inst, const DiscretizedSolution& disc, int v);

// interval_cover for every vertex.
std::vector<VertexCover> cover_all(const Instance& inst, const DiscretizedSolution& disc,
                                   Execution exec = Execution::kSerial);

}  // namespace wks::offline

#endif  // WKS_OFFLINE_COVER_HPP_
