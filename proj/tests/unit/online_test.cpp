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

#include <gtest/gtest.h>

#include <cmath>
#include <numeric>
#include <random>
#include <sstream>

#include "wks/error.hpp"
#include "wks/generators.hpp"
#include "wks/online/audit.hpp"
#include "wks/online/fractional.hpp"
#include "wks/online/pipeline.hpp"
#include "wks/online/rounding.hpp"
#include "wks/oracle.hpp"
#include "wks/schedule.hpp"

namespace wks::online {
namespace {

// Fixed-step RK4 on the rate equations, with a linear interpolation at the
// stop and a clamp at z = 1. Independent of the closed form in the library.
std::vector<double> integrate_request(std::vector<double> z, int n, const std::vector<double>& w,
                                      const std::vector<int>& k, int sigma, double h) {
  const int l = static_cast<int>(w.size());
  const double delta = 1.0 / (2.0 * l);
  const double cap = 1.0 - delta;
  for (int j = 0; j < l; ++j) {
    if (z[sigma * l + j] <= cap) return z;
  }
  auto deriv = [&](const std::vector<double>& s) {
    std::vector<double> d(s.size(), 0.0);
    for (int j = 0; j < l; ++j) {
      int m = 0;
      for (int v = 0; v < n; ++v) m += v != sigma && s[v * l + j] < 1.0;
      for (int v = 0; v < n; ++v) {
        if (v == sigma || s[v * l + j] >= 1.0) continue;
        const double r = (s[v * l + j] + delta) / (w[j] * m);
        d[v * l + j] += r;
        d[sigma * l + j] -= r;
      }
    }
    return d;
  };
  auto add = [](std::vector<double> a, const std::vector<double>& b, double f) {
    for (std::size_t i = 0; i < a.size(); ++i) a[i] += f * b[i];
    return a;
  };
  for (int iter = 0; iter < 100'000'000; ++iter) {
    const auto k1 = deriv(z);
    const auto k2 = deriv(add(z, k1, h / 2));
    const auto k3 = deriv(add(z, k2, h / 2));
    const auto k4 = deriv(add(z, k3, h));
    auto next = z;
    for (std::size_t i = 0; i < z.size(); ++i) {
      next[i] += h / 6 * (k1[i] + 2 * k2[i] + 2 * k3[i] + k4[i]);
    }
    for (int v = 0; v < n; ++v) {
      for (int j = 0; j < l; ++j) {
        if (v != sigma) next[v * l + j] = std::min(next[v * l + j], 1.0);
      }
    }
    double frac = 2.0;
    for (int j = 0; j < l; ++j) {
      const double a = z[sigma * l + j];
      const double b = next[sigma * l + j];
      if (b <= cap) frac = std::min(frac, (a - cap) / (a - b));
    }
    if (frac <= 1.0) {
      for (std::size_t i = 0; i < z.size(); ++i) z[i] += frac * (next[i] - z[i]);
      return z;
    }
    z = std::move(next);
  }
  (void)k;
  ADD_FAILURE() << "integration did not stop";
  return z;
}

std::vector<double> state_vector(const OnlineState& s) {
  std::vector<double> z;
  for (int v = 0; v < s.num_vertices(); ++v) {
    for (int j = 0; j < s.num_classes(); ++j) z.push_back(s.z(v, j));
  }
  return z;
}

Instance random_instance(std::mt19937_64& rng, int max_n, int max_t) {
  const int n = 2 + static_cast<int>(rng() % (max_n - 1));
  const int l = 1 + static_cast<int>(rng() % 2);
  std::vector<WeightClass> classes;
  for (int j = 0; j < l; ++j) {
    const int k = 1 + static_cast<int>(rng() % std::min(2, n - 1));
    classes.push_back({Rational(j == 0 && l == 2 ? 7 : 2, j == 0 ? 1 : 3), k});
  }
  for (auto& c : classes) c.weight.canonicalize();
  const int t = 1 + static_cast<int>(rng() % max_t);
  return gen_random_instance(n, classes, t, rng());
}

TEST(OnlineInitTest, DistinctInitialVerticesStartEmptyElsewhere) {
  const ProblemSetup setup(4, {{Rational(3), 2}, {Rational(1), 1}}, {0, 2, 1});
  const OnlineState s(setup);
  EXPECT_DOUBLE_EQ(s.z(0, 0), 0.0);
  EXPECT_DOUBLE_EQ(s.z(2, 0), 0.0);
  EXPECT_DOUBLE_EQ(s.z(1, 0), 1.0);
  EXPECT_DOUBLE_EQ(s.z(1, 1), 0.0);
  EXPECT_DOUBLE_EQ(s.z(3, 1), 1.0);
  EXPECT_DOUBLE_EQ(s.delta(), 0.25);
  EXPECT_DOUBLE_EQ(s.threshold(), 0.75);
}

TEST(OnlineInitTest, DuplicateInitialVerticesSpreadTheRemainder) {
  const ProblemSetup setup(3, {{Rational(1), 2}}, {0, 0});
  const OnlineState s(setup);
  EXPECT_DOUBLE_EQ(s.z(0, 0), 0.0);
  EXPECT_DOUBLE_EQ(s.z(1, 0), 0.5);
  EXPECT_DOUBLE_EQ(s.z(2, 0), 0.5);
}

TEST(OnlineInitTest, MoreServersThanVerticesIsStructural) {
  const ProblemSetup setup(2, {{Rational(1), 3}}, {0, 1, 0});
  EXPECT_THROW(OnlineState{setup}, StructuralError);
}

TEST(OnlineFractionalTest, CoveredRequestDoesNotMove) {
  const ProblemSetup setup(3, {{Rational(1), 1}}, {1});
  OnlineState s(setup);
  const auto step = s.serve(1);
  EXPECT_FALSE(step.moved);
  EXPECT_EQ(s.total_cost(), 0.0);
}

TEST(OnlineFractionalTest, TwoVertexSingleClassMatchesIntegration) {
  // l = 1: delta = 1/2, threshold 1/2.
  const ProblemSetup setup(2, {{Rational(3), 1}}, {0});
  OnlineState s(setup);
  std::vector<double> expect = state_vector(s);
  for (int sigma : {1, 0, 1, 1, 0}) {
    s.serve(sigma);
    expect = integrate_request(expect, 2, {3.0}, {1}, sigma, 1e-4);
    const auto got = state_vector(s);
    for (std::size_t i = 0; i < got.size(); ++i) EXPECT_NEAR(got[i], expect[i], 1e-6);
  }
}

TEST(OnlineFractionalTest, TwoClassesWithSaturationMatchIntegration) {
  const ProblemSetup setup(4, {{Rational(5), 1}, {Rational(1), 2}}, {0, 1, 2});
  OnlineState s(setup);
  std::vector<double> expect = state_vector(s);
  for (int sigma : {3, 0, 2, 3, 1}) {
    s.serve(sigma);
    expect = integrate_request(expect, 4, {5.0, 1.0}, {1, 2}, sigma, 2e-5);
    const auto got = state_vector(s);
    for (std::size_t i = 0; i < got.size(); ++i) EXPECT_NEAR(got[i], expect[i], 1e-4);
  }
}

TEST(OnlineFractionalTest, InvariantsOnRandomInstances) {
  std::mt19937_64 rng(77);
  for (int trial = 0; trial < 60; ++trial) {
    const Instance inst = random_instance(rng, 7, 25);
    OnlineState s(inst.setup());
    const int l = inst.num_classes();
    for (int t = 1; t <= inst.horizon(); ++t) {
      const int sigma = inst.request(t);
      const auto step = s.serve(sigma);
      bool covered = false;
      for (int j = 0; j < l; ++j) {
        covered = covered || s.z(sigma, j) <= s.threshold() + 1e-12;
        double mass = 0.0;
        for (int v = 0; v < inst.num_vertices(); ++v) {
          ASSERT_GE(s.z(v, j), -1e-12);
          ASSERT_LE(s.z(v, j), 1.0 + 1e-12);
          mass += s.x(v, j);
        }
        EXPECT_NEAR(mass, inst.count(j), 1e-9);
        // Cost rate of a class is the mean of z + delta over S_j.
        EXPECT_LE(step.cost[j], (1.0 + s.delta()) * step.duration + 1e-9);
        EXPECT_GE(step.min_outflow_z_uninitial[j], s.threshold() - 1e-9);
      }
      EXPECT_TRUE(covered);
    }
  }
}

TEST(OnlineFractionalTest, ClassCostsDifferWhenAntiPagesDiffer) {
  // Equal weights would not separate the classes; here class 1 pulls from
  // an initial vertex with z = 0, class 0 from vertices with z near 1.
  const ProblemSetup setup(3, {{Rational(2), 1}, {Rational(1), 1}}, {0, 1});
  OnlineState s(setup);
  const auto step = s.serve(2);
  ASSERT_TRUE(step.moved);
  EXPECT_GT(std::abs(step.cost[0] / step.duration - step.cost[1] / step.duration), 1e-6);
}

TEST(OnlineAuditTest, PotentialStepHoldsAgainstOptimalSchedule) {
  std::mt19937_64 rng(404);
  int audited = 0;
  for (int trial = 0; trial < 80; ++trial) {
    const Instance inst = random_instance(rng, 6, 15);
    if (inst.num_servers() > 4) continue;
    const auto opt = oracle::brute_force_opt(inst);
    const auto traj = run_fractional(inst);
    const auto report = audit_potential(inst, traj, opt.schedule);
    EXPECT_TRUE(report.ok) << "trial " << trial << " worst " << report.worst_excess;
    EXPECT_EQ(static_cast<int>(report.steps.size()), inst.horizon());
    ++audited;
  }
  EXPECT_GT(audited, 40);
}

TEST(OnlineAuditTest, PotentialIgnoresOccupiedVertices) {
  const Instance inst(2, {{Rational(1), 1}}, {0}, {});
  const auto traj = run_fractional(inst);
  const Schedule ref = stationary_schedule(inst);
  // Only vertex 1 is counted: z = 1 there, ln((1 + 1/2) / (1 + 1/2)) = 0.
  EXPECT_DOUBLE_EQ(potential(inst, traj, ref, 0), 0.0);
}

TEST(OnlineScalingTest, ScaledMassWithinAugmentedCapacity) {
  std::mt19937_64 rng(5);
  for (int trial = 0; trial < 30; ++trial) {
    const Instance inst = random_instance(rng, 6, 20);
    const auto traj = run_fractional(inst);
    const auto scaled = scale_trajectory(traj);
    for (int t = 0; t <= inst.horizon(); ++t) {
      for (int j = 0; j < inst.num_classes(); ++j) {
        double mass = 0.0;
        for (int v = 0; v < inst.num_vertices(); ++v) mass += scaled.at(t, v, j);
        EXPECT_LE(mass, 2.0 * inst.num_classes() * inst.count(j) + 1e-9);
      }
    }
    const auto parts = split_by_class(inst, scaled);
    for (int t = 1; t <= inst.horizon(); ++t) {
      int owners = 0;
      for (const auto& p : parts) owners += p.request_at[t] >= 0;
      EXPECT_EQ(owners, 1);
    }
  }
}

TEST(PagingRounderTest, TracksMarginalsAndKeepsRequiredPage) {
  std::mt19937_64 rng(9);
  const int n = 6;
  const int slots = 3;
  PagingRounder r(n, slots, {0, 1});
  for (int step = 0; step < 200; ++step) {
    std::vector<double> target(n);
    for (auto& p : target) p = static_cast<double>(rng() % 1000) / 1000.0;
    const int required = static_cast<int>(rng() % n);
    target[required] = 1.0;
    double sum = std::accumulate(target.begin(), target.end(), 0.0);
    if (sum > slots) {
      const double f = (slots - 1.0) / (sum - 1.0);
      for (int v = 0; v < n; ++v) {
        if (v != required) target[v] *= f;
      }
    }
    r.step(target, required);
    const auto q = r.marginals();
    for (int v = 0; v < n; ++v) EXPECT_NEAR(q[v], target[v], 1e-9);
    double width = 0.0;
    for (const auto& seg : r.segments()) {
      EXPECT_TRUE(seg.pages[required]);
      EXPECT_LE(std::count(seg.pages.begin(), seg.pages.end(), 1), slots);
      width += seg.width;
    }
    EXPECT_NEAR(width, 1.0, 1e-12);
  }
}

TEST(PagingRounderTest, IntegralTargetsCostOneLoadPerNewPage) {
  PagingRounder r(4, 2, {0, 1});
  EXPECT_NEAR(r.step({1, 0, 1, 0}, 2), 1.0, 1e-12);
  EXPECT_NEAR(r.step({0, 0, 1, 1}, 3), 1.0, 1e-12);
  EXPECT_NEAR(r.step({0, 0, 1, 1}, 3), 0.0, 1e-12);
  EXPECT_NEAR(r.step({0, 0, 1, 0}, 2), 0.0, 1e-12);  // eviction only
  EXPECT_EQ(r.segments().size(), 1u);
}

TEST(OnlinePipelineTest, ScheduleIsFeasibleWithAugmentedServers) {
  std::mt19937_64 rng(31);
  for (int trial = 0; trial < 40; ++trial) {
    const Instance inst = random_instance(rng, 6, 25);
    const auto r = run_online(inst, 1000 + trial);
    EXPECT_TRUE(verify_schedule(inst, r.schedule).ok);
    for (int j = 0; j < inst.num_classes(); ++j) {
      EXPECT_EQ(r.schedule.class_counts()[j], 2 * inst.num_classes() * inst.count(j));
    }
    const auto again = run_online(inst, 1000 + trial);
    EXPECT_EQ(again.cost, r.cost);
  }
}

TEST(OnlinePipelineTest, ParallelBatchMatchesSerial) {
  const Instance inst = gen_random_instance(6, {{Rational(4), 1}, {Rational(1), 2}}, 40, 3);
  const auto serial = run_online_batch(inst, 64, 11, Execution::kSerial);
  const auto parallel = run_online_batch(inst, 64, 11, Execution::kParallel);
  EXPECT_EQ(serial.costs, parallel.costs);
}

TEST(OnlinePipelineTest, MonteCarloMeanAgreesWithSegmentExpectation) {
  // Server reuse can only save moves, so the mean sits at or below the
  // expected number of loads.
  const Instance inst = gen_random_instance(6, {{Rational(4), 1}, {Rational(1), 2}}, 60, 8);
  const auto b = run_online_batch(inst, 400, 2, Execution::kParallel);
  EXPECT_LE(b.mean, b.expected_cost + 3.0 * b.stddev / std::sqrt(400.0) + 1e-9);
}

TEST(OnlinePipelineTest, EmpiricalMarginalsMatchScaledPresence) {
  const Instance inst = gen_random_instance(5, {{Rational(3), 1}, {Rational(1), 1}}, 30, 4);
  const auto scaled = scale_trajectory(run_fractional(inst));
  const RoundingPlan plan(inst, scaled);
  const int runs = 500;
  const auto omegas = batch_omegas(inst.num_classes(), runs, 99);
  for (int t = 0; t <= inst.horizon(); ++t) {
    for (int j = 0; j < inst.num_classes(); ++j) {
      std::vector<int> hits(inst.num_vertices(), 0);
      for (const auto& w : omegas) {
        for (int v : plan.state(j, t, w[j])) ++hits[v];
      }
      for (int v = 0; v < inst.num_vertices(); ++v) {
        const double p = scaled.at(t == 0 ? 0 : t, v, j);
        if (t == 0) continue;  // the start is the integral initial cache
        const double sigma = std::sqrt(p * (1 - p) / runs);
        EXPECT_NEAR(static_cast<double>(hits[v]) / runs, p, 3 * sigma + 1.0 / runs)
            << "t=" << t << " v=" << v << " j=" << j;
      }
    }
  }
}

TEST(OnlinePipelineTest, TrajectoryJsonlHasOneLinePerTime) {
  const Instance inst(3, {{Rational(1), 1}}, {0}, {1, 2, 1});
  const auto traj = run_fractional(inst);
  std::ostringstream out;
  write_trajectory_jsonl(inst, traj, out);
  std::istringstream in(out.str());
  std::string line;
  int count = 0;
  while (std::getline(in, line)) {
    const auto doc = nlohmann::json::parse(line);
    EXPECT_EQ(doc["t"], count);
    ++count;
  }
  EXPECT_EQ(count, 4);
}

}  // namespace
}  // namespace wks::online
