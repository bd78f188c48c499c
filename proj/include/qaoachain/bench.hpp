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

#pragma once

#include <cstdint>
#include <iosfwd>
#include <vector>

#include "qaoachain/weight_graph.hpp"

namespace qaoachain {

/// Uniform random graph with ⌊d·C(n,2)⌋ distinct edges of weight 1 and
/// zero node weights. Deterministic in (n, d, seed).
WeightGraph random_graph(std::size_t n, double density, std::uint64_t seed);

struct BenchConfig {
  std::vector<std::size_t> sizes{10, 20, 30, 40};
  std::vector<double> densities{0.8};
  std::vector<std::size_t> depths{1};
  std::size_t reps = 20;
  std::uint64_t seed = 0;
  unsigned threads = 1;
};

struct BenchRow {
  std::size_t n = 0;
  double d = 0.0;
  std::size_t p = 0;
  std::size_t rep = 0;
  double compile_ms = 0.0;
  std::size_t depth_pre = 0;   // template cycles of the cost blocks
  std::size_t depth_post = 0;  // DAG depth after decomposition and optimization
  std::size_t cnot_count = 0;
};

struct BenchMean {
  std::size_t n = 0;
  double d = 0.0;
  std::size_t p = 0;
  double compile_ms = 0.0;
  double depth_pre = 0.0;
  double depth_post = 0.0;
  double cnot_count = 0.0;
};

/// Seed of the graph for one (n, d, rep) cell; independent of p so every
/// depth sees the same graphs.
std::uint64_t cell_seed(std::uint64_t seed, std::size_t n, double density, std::size_t rep);

/// One row per (n, d, p, rep), in that nesting order whatever the thread
/// count.
std::vector<BenchRow> run_bench(const BenchConfig& config);
std::vector<BenchMean> bench_means(const std::vector<BenchRow>& rows);

/// Header `n,d,p,rep,compile_ms,depth_pre,depth_post,cnot_count`, the data
/// rows, then one row per cell with rep = "mean".
void write_bench_csv(std::ostream& out, const std::vector<BenchRow>& rows);

}  // namespace qaoachain
