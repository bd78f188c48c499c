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

#include <cstddef>
#include <cstdint>
#include <functional>
#include <iosfwd>
#include <numbers>
#include <optional>
#include <span>
#include <vector>

#include "qaoachain/qaoa.hpp"

namespace qaoachain {

enum class OptimizerKind {
  kGrid,     // p = 1 only: full grid over (γ, β), then simplex from the best cell
  kSimplex,  // Nelder–Mead from the initial point
};

enum class InitStrategy {
  kGiven,        // OptimizeOptions::initial
  kRandom,       // uniform over the grid ranges, seeded
  kInterpChain,  // solve p = 1 by grid, then interp-initialize each deeper level
};

struct OptimizeOptions {
  std::size_t depth = 1;
  OptimizerKind optimizer = OptimizerKind::kGrid;
  InitStrategy init = InitStrategy::kRandom;
  std::optional<QaoaParams> initial;
  std::optional<std::uint64_t> seed;

  std::size_t grid_gamma_points = 64;
  std::size_t grid_beta_points = 64;
  double gamma_max = std::numbers::pi;      // γ ∈ [0, gamma_max)
  double beta_max = std::numbers::pi / 2;   // β ∈ [0, beta_max)

  std::size_t max_evaluations = 4000;  // per simplex run
  double tolerance = 1e-10;            // simplex spread in E and in angle space
  double initial_step = 0.1;

  bool use_decomposition = true;
  unsigned threads = 0;
};

struct TraceRow {
  std::size_t evaluation = 0;
  QaoaParams params;
  double energy = 0.0;
};

struct OptimizeResult {
  QaoaParams params;
  double energy = 0.0;
  bool converged = false;
  std::vector<TraceRow> trace;
};

/// Minimizes E_p over (γ, β). Deterministic for a fixed seed.
OptimizeResult optimize(const WeightGraph& g, const OptimizeOptions& options);

/// Depth-(p+1) starting point from optimized depth-p angles:
/// x'_i = ((i−1)/p) x_{i−1} + ((p−i+1)/p) x_i for i = 1..p+1, with
/// x_0 = x_{p+1} = 0; applied to γ and β separately.
QaoaParams interp_initialize(const QaoaParams& previous);

struct SimplexResult {
  std::vector<double> x;
  double value = 0.0;
  std::size_t evaluations = 0;
  bool converged = false;
};

/// Nelder–Mead minimization with the standard coefficients (1, 2, ½, ½).
SimplexResult nelder_mead(const std::function<double(std::span<const double>)>& f, std::vector<double> x0,
                          double step, std::size_t max_evaluations, double tolerance);

/// CSV: eval,gamma_1..gamma_p,beta_1..beta_p,energy
void write_trace_csv(std::ostream& out, const std::vector<TraceRow>& trace);

}  // namespace qaoachain
