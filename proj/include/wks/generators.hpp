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

#ifndef WKS_GENERATORS_HPP_
#define WKS_GENERATORS_HPP_

#include <cstdint>
#include <utility>
#include <vector>

#include "wks/fractional.hpp"
#include "wks/instance.hpp"
#include "wks/lp/intervals.hpp"
#include "wks/rational.hpp"

namespace wks {

// Request-count ceiling for the combinatorial generators: WKS_MAX_REQUESTS
// when set, else 10^6.
std::int64_t default_request_cap();

// Nested-subset construction with l classes. Class r (1-based) has weight
// M^(l-r) and n / (l C^(r-1)) servers; level r of the recursion repeats
// M^r times. All servers start at vertex 0.
struct GapParams {
  int l = 2;
  int c = 2;
  int m = 2;
  int n = 4;
  int repeat = 1;  // whole-sequence repetitions
};

// Throws StructuralError on divisibility violations, M < 2, C < 2, or more
// than `max_requests` requests.
void validate(const GapParams& p);
std::int64_t gap_request_count(const GapParams& p);
Instance gen_gap_instance(const GapParams& p, std::int64_t max_requests = default_request_cap());

struct GapFractional {
  FractionalSolution x;
  IntervalSolution y;  // canonical decomposition of x
  Rational cost;       // fractional_cost(x)
};

// The explicit low-cost solution: 1/l of class 1 everywhere, and while the
// recursion is inside subset S at depth r + 1, 1/l of class r + 2 on S.
GapFractional gap_fractional_solution(const GapParams& p,
                                      std::int64_t max_requests = default_request_cap());

// Vertex-cover construction: graph vertices 0..n-1 plus an extra start
// vertex n. t servers of weight n^d and one of weight 1, all at vertex n.
// W = n^d rounds; each round visits every edge (u, v) and requests
// u, v alternately W times.
struct VcParams {
  int n = 3;
  std::vector<std::pair<int, int>> edges;
  int t = 1;
  int d = 1;
};

std::int64_t vc_request_count(const VcParams& p);
Instance gen_vc_instance(const VcParams& p, std::int64_t max_requests = default_request_cap());

// Uniform random initial positions and requests, reproducible from `seed`
// on every platform.
Instance gen_random_instance(int n, std::vector<WeightClass> classes, int horizon,
                             std::uint64_t seed);

// Unbiased draw from [0, bound) on top of mt19937_64, so streams do not
// depend on the standard library's distribution implementation.
template <typename Engine>
std::uint64_t uniform_below(Engine& rng, std::uint64_t bound) {
  const std::uint64_t limit = ~std::uint64_t{0} - (~std::uint64_t{0} % bound);
  std::uint64_t draw;
  do {
    draw = rng();
  } while (draw >= limit);
  return draw % bound;
}

}  // namespace wks

#endif  // WKS_GENERATORS_HPP_
