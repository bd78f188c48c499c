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
#include <map>
#include <span>
#include <utility>
#include <vector>

namespace qaoachain {

/// Optimization direction of the original problem. Every model is stored
/// in minimization form; `kMaximize` records that the builder negated the
/// objective so reports can restore its sign.
enum class Sense { kMinimize, kMaximize };

struct WeightedEdge {
  std::size_t u = 0;
  std::size_t v = 0;
  double w = 1.0;

  friend bool operator==(const WeightedEdge&, const WeightedEdge&) = default;
};

/// Plain graph used as input to the application builders.
struct ProblemGraph {
  std::size_t num_nodes = 0;
  std::vector<WeightedEdge> edges;
};

/// Dense QUBO objective f(x) = xᵀQx + offset over binary x.
class QuboMatrix {
 public:
  QuboMatrix() = default;

  /// `entries` is row-major n×n. Asymmetric input is replaced by
  /// (Q + Qᵀ)/2, which leaves the diagonal and f(x) unchanged.
  QuboMatrix(std::size_t n, std::vector<double> entries, double offset = 0.0,
             Sense sense = Sense::kMinimize);

  static QuboMatrix zeros(std::size_t n, Sense sense = Sense::kMinimize);

  std::size_t size() const noexcept { return n_; }
  double at(std::size_t i, std::size_t j) const { return q_[i * n_ + j]; }
  double offset() const noexcept { return offset_; }
  Sense sense() const noexcept { return sense_; }
  const std::vector<double>& entries() const noexcept { return q_; }

  /// Adds `w` to the x_i·x_j coefficient, split evenly over (i,j) and (j,i).
  void add_pair(std::size_t i, std::size_t j, double w);
  void add_linear(std::size_t i, double w);
  void add_offset(double c) { offset_ += c; }

  /// xᵀQx + offset.
  double value(std::span<const std::uint8_t> x) const;

 private:
  std::size_t n_ = 0;
  std::vector<double> q_;
  double offset_ = 0.0;
  Sense sense_ = Sense::kMinimize;
};

/// Classical Ising energy Σ J_ij s_i s_j + Σ h_i s_i + offset.
struct IsingModel {
  std::size_t n = 0;
  std::map<std::pair<std::size_t, std::size_t>, double> j;  // keys have i < j
  std::vector<double> h;
  double offset = 0.0;
  Sense sense = Sense::kMinimize;

  /// Energy without the offset, for spins s_i ∈ {−1, +1}.
  double energy(std::span<const int> spins) const;
};

// Builders. All return minimization-form QUBOs.

/// Minimize Σ_{(u,v)} w_uv (2 x_u x_v − x_u − x_v), i.e. the negated cut
/// weight of the partition x.
QuboMatrix qubo_from_maxcut(const ProblemGraph& graph);

/// Minimize (Σ_i a_i s_i)² with s = 2x − 1; the constant (Σ a_i)² is the
/// QUBO offset so the value is exactly the squared residue.
QuboMatrix qubo_from_number_partition(std::span<const std::int64_t> numbers);

/// One-hot coloring penalty over n·k variables; variable v·k + c is 1 iff
/// node v takes color c. The offset makes a proper coloring score 0.
QuboMatrix qubo_from_graph_coloring(const ProblemGraph& graph, std::size_t colors);

inline std::size_t coloring_variable(std::size_t node, std::size_t color, std::size_t colors) {
  return node * colors + color;
}

/// Minimize −Σ x_i + P Σ_{i<j, S_i∩S_j≠∅} x_i x_j. Requires P > 1.
QuboMatrix qubo_from_set_packing(std::size_t universe_size,
                                 const std::vector<std::vector<std::size_t>>& sets,
                                 double penalty);

IsingModel ising_from_qubo(const QuboMatrix& q);

}  // namespace qaoachain
