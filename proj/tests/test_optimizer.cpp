// Copyright 2026 The qaoachain Authors
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
#include <numbers>
#include <sstream>

#include "qaoachain/errors.hpp"
#include "qaoachain/optimizer.hpp"
#include "qaoachain/problem_model.hpp"

using namespace qaoachain;

namespace {

WeightGraph k2() { return WeightGraph({0, 0}, {{0, 1, 1}}); }

WeightGraph fig5() {
  return weight_graph_from_ising(
      ising_from_qubo(qubo_from_maxcut({6, {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {4, 5}, {0, 4}, {1, 3}}})));
}

}  // namespace

TEST(NelderMead, Quadratic) {
  auto f = [](std::span<const double> x) { return (x[0] - 1) * (x[0] - 1) + 3 * (x[1] + 2) * (x[1] + 2) + 0.5; };
  const auto r = nelder_mead(f, {0, 0}, 0.5, 2000, 1e-14);
  EXPECT_TRUE(r.converged);
  EXPECT_NEAR(r.x[0], 1, 1e-5);
  EXPECT_NEAR(r.x[1], -2, 1e-5);
  EXPECT_NEAR(r.value, 0.5, 1e-12);
}

TEST(NelderMead, Rosenbrock) {
  auto f = [](std::span<const double> x) {
    return 100 * (x[1] - x[0] * x[0]) * (x[1] - x[0] * x[0]) + (1 - x[0]) * (1 - x[0]);
  };
  const auto r = nelder_mead(f, {-1.2, 1}, 0.1, 20000, 1e-16);
  EXPECT_NEAR(r.x[0], 1, 1e-4);
  EXPECT_NEAR(r.x[1], 1, 1e-4);
}

TEST(NelderMead, RespectsBudget) {
  std::size_t calls = 0;
  auto f = [&](std::span<const double> x) {
    ++calls;
    return x[0] * x[0];
  };
  const auto r = nelder_mead(f, {5}, 1, 7, 0);
  EXPECT_LE(calls, 7U);
  EXPECT_EQ(r.evaluations, calls);
  EXPECT_FALSE(r.converged);
}

TEST(Interp, Formula) {
  const auto next = interp_initialize(QaoaParams({0.4}, {0.2}));
  // p = 1: x'_1 = x_1, x'_2 = x_1
  EXPECT_EQ(next.gamma, (std::vector<double>{0.4, 0.4}));
  EXPECT_EQ(next.beta, (std::vector<double>{0.2, 0.2}));
  const auto three = interp_initialize(QaoaParams({1, 3}, {2, 4}));
  // x'_1 = x_1, x'_2 = ½x_1 + ½x_2, x'_3 = x_2
  EXPECT_EQ(three.gamma, (std::vector<double>{1, 2, 3}));
  EXPECT_EQ(three.beta, (std::vector<double>{2, 3, 4}));
}

TEST(Optimize, GridFindsSingleEdgeOptimum) {
  OptimizeOptions opt;
  opt.seed = 1;
  const auto r = optimize(k2(), opt);
  // sin(4β) sin(2γ) has minimum −1
  EXPECT_NEAR(r.energy, -1, 1e-8);
  EXPECT_TRUE(r.converged);
  EXPECT_NEAR(std::sin(4 * r.params.beta[0]) * std::sin(2 * r.params.gamma[0]), r.energy, 1e-12);
  EXPECT_GT(r.trace.size(), 64U * 64);
}

TEST(Optimize, Fig5IsNegativeAndDeterministic) {
  OptimizeOptions opt;
  opt.seed = 42;
  const auto a = optimize(fig5(), opt);
  const auto b = optimize(fig5(), opt);
  EXPECT_LT(a.energy, 0);
  EXPECT_EQ(a.params, b.params);
  EXPECT_EQ(a.energy, b.energy);
  opt.use_decomposition = false;
  const auto full = optimize(fig5(), opt);
  EXPECT_NEAR(full.energy, a.energy, 1e-9);
}

TEST(Optimize, InterpChainImprovesWithDepth) {
  OptimizeOptions opt;
  opt.init = InitStrategy::kInterpChain;
  opt.depth = 1;
  const auto p1 = optimize(fig5(), opt);
  opt.depth = 2;
  const auto p2 = optimize(fig5(), opt);
  EXPECT_EQ(p2.params.depth(), 2U);
  EXPECT_LE(p2.energy, p1.energy + 1e-9);
}

TEST(Optimize, ConfigurationErrors) {
  OptimizeOptions opt;
  EXPECT_THROW(optimize(k2(), opt), ConfigError);  // random init without a seed
  opt.seed = 3;
  opt.depth = 2;
  EXPECT_THROW(optimize(k2(), opt), ConfigError);  // grid at p = 2
  opt.optimizer = OptimizerKind::kSimplex;
  opt.init = InitStrategy::kGiven;
  EXPECT_THROW(optimize(k2(), opt), ConfigError);
  opt.initial = QaoaParams({0.1}, {0.1});
  EXPECT_THROW(optimize(k2(), opt), ConfigError);
}

TEST(Optimize, TrivialGraphEvaluatesOnce) {
  OptimizeOptions opt;
  opt.init = InitStrategy::kGiven;
  opt.optimizer = OptimizerKind::kSimplex;
  opt.initial = QaoaParams({0.3}, {0.2});
  const auto r = optimize(WeightGraph({0, 0, 0}, {}), opt);
  EXPECT_EQ(r.trace.size(), 1U);
  EXPECT_EQ(r.energy, 0.0);
  EXPECT_EQ(r.params, *opt.initial);
}

TEST(TraceCsv, HeaderAndRows) {
  std::vector<TraceRow> trace{{1, QaoaParams({0.5, 0.25}, {0.125, 1}), -0.75}};
  std::ostringstream out;
  write_trace_csv(out, trace);
  EXPECT_EQ(out.str(), "eval,gamma_1,gamma_2,beta_1,beta_2,energy\n1,0.5,0.25,0.125,1,-0.75\n");
}
