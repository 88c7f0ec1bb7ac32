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

#include "wks/generators.hpp"

#include <cstdlib>
#include <functional>
#include <limits>
#include <random>
#include <string>

#include "wks/error.hpp"

namespace wks {

std::int64_t default_request_cap() {
  if (const char* env = std::getenv("WKS_MAX_REQUESTS")) {
    char* end = nullptr;
    const long long value = std::strtoll(env, &end, 10);
    if (end != env && *end == '\0' && value > 0) return value;
    throw StructuralError("WKS_MAX_REQUESTS must be a positive integer");
  }
  return 1'000'000;
}

namespace {

constexpr std::int64_t kSaturated = std::numeric_limits<std::int64_t>::max() / 4;

std::int64_t sat_mul(std::int64_t a, std::int64_t b) {
  if (a == 0 || b == 0) return 0;
  if (a > kSaturated / b) return kSaturated;
  return a * b;
}

std::int64_t ipow(std::int64_t base, int exp) {
  std::int64_t r = 1;
  for (int i = 0; i < exp; ++i) r = sat_mul(r, base);
  return r;
}

std::int64_t binomial(int n, int k) {
  std::int64_t r = 1;
  for (int i = 1; i <= k; ++i) r = sat_mul(r, n - k + i) / i;
  return r;
}

// Lexicographic k-subsets of `items` (items sorted ascending).
void for_each_subset(const std::vector<int>& items, int k,
                     const std::function<void(const std::vector<int>&)>& fn) {
  const int n = static_cast<int>(items.size());
  std::vector<int> idx(k);
  for (int i = 0; i < k; ++i) idx[i] = i;
  std::vector<int> subset(k);
  while (true) {
    for (int i = 0; i < k; ++i) subset[i] = items[idx[i]];
    fn(subset);
    int i = k - 1;
    while (i >= 0 && idx[i] == n - k + i) --i;
    if (i < 0) return;
    ++idx[i];
    for (int q = i + 1; q < k; ++q) idx[q] = idx[q - 1] + 1;
  }
}

int gap_count(const GapParams& p, int r) {
  int denom = p.l;
  for (int i = 1; i < r; ++i) denom *= p.c;
  return p.n / denom;
}

// Walks the recursion. `on_enter(depth, subset)` fires when the recursion
// enters S at depth r + 1 >= 1; `on_request(v)` for each request.
void walk_gap(const GapParams& p, const std::function<void(int, const std::vector<int>&)>& on_enter,
              const std::function<void(int)>& on_request) {
  std::function<void(int, const std::vector<int>&)> generate = [&](int r,
                                                                   const std::vector<int>& s) {
    const std::int64_t reps = ipow(p.m, r);
    for (std::int64_t it = 0; it < reps; ++it) {
      if (r == p.l - 1) {
        for (int v : s) on_request(v);
      } else {
        for_each_subset(s, static_cast<int>(s.size()) / p.c, [&](const std::vector<int>& sub) {
          on_enter(r + 1, sub);
          generate(r + 1, sub);
        });
      }
    }
  };
  std::vector<int> all(p.n);
  for (int v = 0; v < p.n; ++v) all[v] = v;
  for (int rep = 0; rep < p.repeat; ++rep) generate(0, all);
}

nlohmann::json gap_metadata(const GapParams& p) {
  return nlohmann::json{{"generator", "gap"}, {"l", p.l},         {"C", p.c},
                        {"M", p.m},           {"n", p.n},         {"repeat", p.repeat},
                        {"instance_id", "gap_l" + std::to_string(p.l) + "_C" +
                                            std::to_string(p.c) + "_n" + std::to_string(p.n) +
                                            "_M" + std::to_string(p.m) + "_rep" +
                                            std::to_string(p.repeat)}};
}

}  // namespace

void validate(const GapParams& p) {
  if (p.l < 1) throw StructuralError("gap instance needs l >= 1");
  if (p.c < 2) throw StructuralError("gap instance needs C >= 2");
  if (p.m < 2) throw StructuralError("gap instance needs M >= 2");
  if (p.n < 1) throw StructuralError("gap instance needs n >= 1");
  if (p.repeat < 1) throw StructuralError("gap instance needs repeat >= 1");
  std::int64_t cpow = 1;
  for (int r = 1; r <= p.l; ++r) {
    if (p.n % cpow != 0 || (p.n / cpow) % p.l != 0) {
      throw StructuralError("gap instance needs l | n / C^(r-1) for r = 1..l; fails at r=" +
                            std::to_string(r) + " (n=" + std::to_string(p.n) + ")");
    }
    cpow *= p.c;
  }
  if (p.l >= 2 && ipow(p.m, p.l - 1) >= kSaturated) throw StructuralError("M^(l-1) overflows");
}

std::int64_t gap_request_count(const GapParams& p) {
  validate(p);
  // Requests issued by one call at depth r on a set of the given size.
  std::function<std::int64_t(int, std::int64_t)> count = [&](int r, std::int64_t size) {
    const std::int64_t reps = ipow(p.m, r);
    if (r == p.l - 1) return sat_mul(reps, size);
    const std::int64_t sub = size / p.c;
    return sat_mul(reps, sat_mul(binomial(static_cast<int>(size), static_cast<int>(sub)),
                                 count(r + 1, sub)));
  };
  return sat_mul(p.repeat, count(0, p.n));
}

Instance gen_gap_instance(const GapParams& p, std::int64_t max_requests) {
  const std::int64_t total = gap_request_count(p);
  if (total > max_requests) {
    throw StructuralError("gap instance would issue " + std::to_string(total) +
                          " requests, above the cap of " + std::to_string(max_requests));
  }
  std::vector<WeightClass> classes;
  std::vector<int> initial;
  for (int r = 1; r <= p.l; ++r) {
    classes.push_back({Rational(ipow(p.m, p.l - r)), gap_count(p, r)});
    initial.insert(initial.end(), gap_count(p, r), 0);
  }
  std::vector<int> requests;
  requests.reserve(total);
  walk_gap(p, [](int, const std::vector<int>&) {}, [&](int v) { requests.push_back(v); });
  return Instance(p.n, std::move(classes), std::move(initial), std::move(requests),
                  gap_metadata(p));
}

GapFractional gap_fractional_solution(const GapParams& p, std::int64_t max_requests) {
  const Instance inst = gen_gap_instance(p, max_requests);
  const Rational share(1, p.l);
  FractionalSolution x = initial_fractional(inst);
  // Current placement of classes 2..l (class index r + 1 for depth r).
  std::vector<std::vector<int>> active(p.l);
  int t = 0;
  walk_gap(
      p, [&](int depth, const std::vector<int>& s) { active[depth] = s; },
      [&](int) {
        ++t;
        for (int v = 0; v < p.n; ++v) x.at(v, 0, t) = share;
        for (int j = 1; j < p.l; ++j) {
          for (int v : active[j]) x.at(v, j, t) = share;
        }
      });
  GapFractional out;
  out.cost = fractional_cost(inst, x);
  out.y = y_from_x(x);
  out.x = std::move(x);
  return out;
}

std::int64_t vc_request_count(const VcParams& p) {
  const std::int64_t w = ipow(p.n, p.d);
  return sat_mul(static_cast<std::int64_t>(p.edges.size()), sat_mul(2 * w, w));
}

Instance gen_vc_instance(const VcParams& p, std::int64_t max_requests) {
  if (p.n < 2) throw StructuralError("vertex-cover instance needs n >= 2");
  if (p.d < 1) throw StructuralError("vertex-cover instance needs d >= 1");
  if (p.t < 1 || p.t > p.n) throw StructuralError("cover size t must lie in 1..n");
  for (std::size_t a = 0; a < p.edges.size(); ++a) {
    const auto [u, v] = p.edges[a];
    if (u < 0 || v < 0 || u >= p.n || v >= p.n || u == v) {
      throw StructuralError("edge " + std::to_string(a) + " is not a simple edge");
    }
    for (std::size_t b = 0; b < a; ++b) {
      const auto [x, y] = p.edges[b];
      if ((x == u && y == v) || (x == v && y == u)) throw StructuralError("duplicate edge");
    }
  }
  const std::int64_t total = vc_request_count(p);
  if (total > max_requests) {
    throw StructuralError("vertex-cover instance would issue " + std::to_string(total) +
                          " requests, above the cap of " + std::to_string(max_requests) +
                          "; lower d");
  }
  const std::int64_t w = ipow(p.n, p.d);
  std::vector<int> requests;
  requests.reserve(total);
  for (std::int64_t round = 0; round < w; ++round) {
    for (const auto& [u, v] : p.edges) {
      for (std::int64_t k = 0; k < w; ++k) {
        requests.push_back(u);
        requests.push_back(v);
      }
    }
  }
  nlohmann::json edges = nlohmann::json::array();
  for (const auto& [u, v] : p.edges) edges.push_back({u, v});
  nlohmann::json meta{{"generator", "vc"}, {"graph_n", p.n}, {"edges", edges},
                      {"t", p.t},          {"d", p.d},       {"W", w},
                      {"instance_id", "vc_n" + std::to_string(p.n) + "_m" +
                                          std::to_string(p.edges.size()) + "_t" +
                                          std::to_string(p.t) + "_d" + std::to_string(p.d)}};
  std::vector<int> initial(p.t + 1, p.n);
  return Instance(p.n + 1, {{Rational(w), p.t}, {Rational(1), 1}}, std::move(initial),
                  std::move(requests), std::move(meta));
}

Instance gen_random_instance(int n, std::vector<WeightClass> classes, int horizon,
                             std::uint64_t seed) {
  if (n < 1) throw StructuralError("random instance needs n >= 1");
  if (horizon < 0) throw StructuralError("random instance needs T >= 0");
  std::mt19937_64 rng(seed);
  int servers = 0;
  nlohmann::json cls = nlohmann::json::array();
  for (const auto& c : classes) {
    servers += c.count;
    cls.push_back({{"weight", to_rational_string(c.weight)}, {"count", c.count}});
  }
  std::vector<int> initial(servers);
  for (int& v : initial) v = static_cast<int>(uniform_below(rng, n));
  std::vector<int> requests(horizon);
  for (int& v : requests) v = static_cast<int>(uniform_below(rng, n));
  nlohmann::json meta{{"generator", "random"}, {"n", n}, {"classes", cls}, {"T", horizon},
                      {"seed", seed},
                      {"instance_id", "random_n" + std::to_string(n) + "_l" +
                                          std::to_string(classes.size()) + "_T" +
                                          std::to_string(horizon) + "_s" + std::to_string(seed)}};
  return Instance(n, std::move(classes), std::move(initial), std::move(requests), std::move(meta));
}

}  // namespace wks
