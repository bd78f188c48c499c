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
#include <random>

#include "qaoachain/errors.hpp"
#include "qaoachain/problem_model.hpp"
#include "qaoachain/weight_graph.hpp"

using namespace qaoachain;

namespace {

std::vector<std::uint8_t> bits_of(std::size_t x, std::size_t n) {
  std::vector<std::uint8_t> b(n);
  for (std::size_t i = 0; i < n; ++i) b[i] = (x >> i) & 1;
  return b;
}

// Direct xᵀQx from the stored entries.
double direct_value(const QuboMatrix& q, std::size_t x) {
  double v = q.offset();
  for (std::size_t i = 0; i < q.size(); ++i)
    for (std::size_t j = 0; j < q.size(); ++j)
      if ((x >> i) & 1 && (x >> j) & 1) v += q.at(i, j);
  return v;
}

double brute_min(const QuboMatrix& q) {
  double best = INFINITY;
  for (std::size_t x = 0; x < (std::size_t{1} << q.size()); ++x) best = std::min(best, q.value(bits_of(x, q.size())));
  return best;
}

ProblemGraph fig5() {
  return {6, {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {4, 5}, {0, 4}, {1, 3}}};
}

}  // namespace

TEST(Qubo, SymmetrizesAsymmetricInput) {
  QuboMatrix q(2, {1, 3, -1, 2});
  EXPECT_DOUBLE_EQ(q.at(0, 1), 1.0);
  EXPECT_DOUBLE_EQ(q.at(1, 0), 1.0);
  EXPECT_DOUBLE_EQ(q.at(0, 0), 1.0);
  EXPECT_DOUBLE_EQ(q.value(bits_of(3, 2)), 1 + 3 - 1 + 2);
}

TEST(Qubo, RejectsBadShape) {
  EXPECT_THROW(QuboMatrix(0, {}), ModelError);
  EXPECT_THROW(QuboMatrix(2, {1, 2, 3}), ModelError);
}

TEST(MaxCut, SingleEdge) {
  const auto q = qubo_from_maxcut({2, {{0, 1}}});
  EXPECT_EQ(q.sense(), Sense::kMaximize);
  EXPECT_DOUBLE_EQ(brute_min(q), -1.0);
  EXPECT_DOUBLE_EQ(q.value(bits_of(1, 2)), -1.0);
  EXPECT_DOUBLE_EQ(q.value(bits_of(2, 2)), -1.0);
}

TEST(MaxCut, Fig5HasTwoOptimalPartitions) {
  const auto q = qubo_from_maxcut(fig5());
  EXPECT_DOUBLE_EQ(brute_min(q), -6.0);
  std::vector<std::size_t> optimal;
  for (std::size_t x = 0; x < 64; ++x)
    if (q.value(bits_of(x, 6)) == -6.0) optimal.push_back(x);
  // {1,4} and {1,2,4} plus their complements
  const std::vector<std::size_t> expected{0b010010, 0b010110, 0b101001, 0b101101};
  std::sort(optimal.begin(), optimal.end());
  EXPECT_EQ(optimal, expected);
}

TEST(MaxCut, TriangleAndEmpty) {
  const auto q = qubo_from_maxcut({3, {{0, 1}, {1, 2}, {0, 2}}});
  EXPECT_DOUBLE_EQ(brute_min(q), -2.0);
  int count = 0;
  for (std::size_t x = 0; x < 8; ++x) count += q.value(bits_of(x, 3)) == -2.0;
  EXPECT_EQ(count, 6);
  EXPECT_THROW(qubo_from_maxcut({3, {}}), ModelError);
}

TEST(NumberPartition, Examples) {
  const std::vector<std::int64_t> numbers{13, 7, 5, 2, 34, 21, 9, 45};
  const auto q = qubo_from_number_partition(numbers);
  EXPECT_DOUBLE_EQ(brute_min(q), 0.0);
  // {45,21,2} on one side: x = 1 for those
  std::vector<std::uint8_t> x{0, 0, 0, 1, 0, 1, 0, 1};
  EXPECT_DOUBLE_EQ(q.value(x), 0.0);
  EXPECT_DOUBLE_EQ(brute_min(qubo_from_number_partition(std::vector<std::int64_t>{1, 1})), 0.0);
  EXPECT_DOUBLE_EQ(brute_min(qubo_from_number_partition(std::vector<std::int64_t>{3, 1, 1})), 1.0);
  EXPECT_THROW(qubo_from_number_partition(std::vector<std::int64_t>{}), ModelError);
}

TEST(NumberPartition, ValueIsSquaredResidue) {
  const std::vector<std::int64_t> a{4, 9, 2, 7, 1};
  const auto q = qubo_from_number_partition(a);
  for (std::size_t x = 0; x < 32; ++x) {
    double r = 0;
    for (std::size_t i = 0; i < a.size(); ++i) r += static_cast<double>(a[i]) * (((x >> i) & 1) ? 1 : -1);
    EXPECT_DOUBLE_EQ(q.value(bits_of(x, 5)), r * r);
  }
}

TEST(GraphColoring, Examples) {
  const ProblemGraph k3{3, {{0, 1}, {1, 2}, {0, 2}}};
  EXPECT_DOUBLE_EQ(brute_min(qubo_from_graph_coloring(k3, 3)), 0.0);
  EXPECT_DOUBLE_EQ(brute_min(qubo_from_graph_coloring(k3, 2)), 1.0);
  const auto single = qubo_from_graph_coloring({1, {}}, 1);
  EXPECT_DOUBLE_EQ(brute_min(single), 0.0);
  EXPECT_DOUBLE_EQ(single.value(std::vector<std::uint8_t>{1}), 0.0);
  EXPECT_THROW(qubo_from_graph_coloring(k3, 0), ModelError);
  EXPECT_EQ(coloring_variable(2, 1, 3), 7U);
}

TEST(SetPacking, Examples) {
  EXPECT_DOUBLE_EQ(brute_min(qubo_from_set_packing(3, {{1}, {2}, {1, 2}}, 2.0)), -2.0);
  EXPECT_DOUBLE_EQ(brute_min(qubo_from_set_packing(3, {{1}}, 2.0)), -1.0);
  EXPECT_DOUBLE_EQ(brute_min(qubo_from_set_packing(3, {{0, 1}, {0, 1}}, 2.0)), -1.0);
  EXPECT_THROW(qubo_from_set_packing(3, {{1}}, 1.0), ConfigError);
  EXPECT_THROW(qubo_from_set_packing(3, {{5}}, 2.0), ModelError);
}

TEST(Ising, WorkedExamples) {
  const auto m = ising_from_qubo(QuboMatrix(2, {0, 1, 1, 0}));
  ASSERT_EQ(m.j.size(), 1U);
  EXPECT_DOUBLE_EQ(m.j.at({0, 1}), 0.5);
  EXPECT_DOUBLE_EQ(m.h[0], 0.5);
  EXPECT_DOUBLE_EQ(m.h[1], 0.5);
  EXPECT_DOUBLE_EQ(m.offset, 0.5);

  const auto zero = ising_from_qubo(QuboMatrix::zeros(3));
  EXPECT_TRUE(zero.j.empty() || std::all_of(zero.j.begin(), zero.j.end(), [](auto& kv) { return kv.second == 0; }));
  EXPECT_EQ(zero.offset, 0.0);

  const auto one = ising_from_qubo(QuboMatrix(1, {1}));
  EXPECT_DOUBLE_EQ(one.h[0], 0.5);
  EXPECT_DOUBLE_EQ(one.offset, 0.5);
}

TEST(Ising, RandomIdentityAgainstDirectExpansion) {
  std::mt19937_64 rng(7);
  std::uniform_real_distribution<double> w(-3, 3);
  for (int trial = 0; trial < 40; ++trial) {
    const std::size_t n = 1 + trial % 7;
    std::vector<double> e(n * n);
    for (auto& v : e) v = w(rng);
    const QuboMatrix q(n, e, w(rng));
    const auto m = ising_from_qubo(q);
    const auto g = weight_graph_from_ising(m);
    for (std::size_t x = 0; x < (std::size_t{1} << n); ++x) {
      std::vector<int> s(n);
      for (std::size_t i = 0; i < n; ++i) s[i] = ((x >> i) & 1) ? 1 : -1;
      // asymmetric input entries summed directly
      double direct = q.offset();
      for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
          if ((x >> i) & 1 && (x >> j) & 1) direct += e[i * n + j];
      EXPECT_NEAR(m.energy(s) + m.offset, direct, 1e-12);
      EXPECT_NEAR(g.energy(s) + g.offset(), direct, 1e-12);
      EXPECT_NEAR(direct_value(q, x), direct, 1e-12);
    }
  }
}

TEST(WeightGraphFromIsing, Transcription) {
  IsingModel m;
  m.n = 2;
  m.j[{0, 1}] = 0.5;
  m.h = {0.5, 0.5};
  const auto g = weight_graph_from_ising(m);
  EXPECT_EQ(g.num_nodes(), 2U);
  ASSERT_EQ(g.num_edges(), 1U);
  EXPECT_DOUBLE_EQ(g.edges()[0].w, 0.5);
  EXPECT_EQ(g.node_weights(), (std::vector<double>{0.5, 0.5}));

  IsingModel bias_only;
  bias_only.n = 3;
  bias_only.h = {1, 0, -1};
  EXPECT_EQ(weight_graph_from_ising(bias_only).num_edges(), 0U);
  EXPECT_EQ(weight_graph_from_ising(bias_only).num_nodes(), 3U);
}

TEST(WeightGraphFromIsing, Fig5EnergyOfOptimalPartition) {
  const auto g = weight_graph_from_ising(ising_from_qubo(qubo_from_maxcut(fig5())));
  EXPECT_DOUBLE_EQ(g.offset(), -3.5);
  std::vector<int> s{-1, 1, -1, -1, 1, -1};  // {1,4} on the +1 side
  EXPECT_DOUBLE_EQ(g.energy(s), -2.5);
  EXPECT_DOUBLE_EQ(g.energy(s) + g.offset(), -6.0);
}
