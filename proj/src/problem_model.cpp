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

#include "qaoachain/problem_model.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <string>

#include "qaoachain/errors.hpp"

namespace qaoachain {

QuboMatrix::QuboMatrix(std::size_t n, std::vector<double> entries, double offset, Sense sense)
    : n_(n), q_(std::move(entries)), offset_(offset), sense_(sense) {
  if (n_ == 0) throw ModelError("QUBO must have at least one variable");
  if (q_.size() != n_ * n_) {
    throw ModelError("QUBO entry count " + std::to_string(q_.size()) + " does not match n*n = " +
                     std::to_string(n_ * n_));
  }
  for (std::size_t i = 0; i < n_; ++i) {
    for (std::size_t j = i + 1; j < n_; ++j) {
      const double s = 0.5 * (q_[i * n_ + j] + q_[j * n_ + i]);
      q_[i * n_ + j] = s;
      q_[j * n_ + i] = s;
    }
  }
}

QuboMatrix QuboMatrix::zeros(std::size_t n, Sense sense) {
  return QuboMatrix(n, std::vector<double>(n * n, 0.0), 0.0, sense);
}

void QuboMatrix::add_pair(std::size_t i, std::size_t j, double w) {
  if (i == j) {
    add_linear(i, w);  // x_i² = x_i
    return;
  }
  q_[i * n_ + j] += 0.5 * w;
  q_[j * n_ + i] += 0.5 * w;
}

void QuboMatrix::add_linear(std::size_t i, double w) { q_[i * n_ + i] += w; }

double QuboMatrix::value(std::span<const std::uint8_t> x) const {
  if (x.size() != n_) throw ModelError("assignment length does not match QUBO size");
  double total = offset_;
  for (std::size_t i = 0; i < n_; ++i) {
    if (!x[i]) continue;
    for (std::size_t j = 0; j < n_; ++j) {
      if (x[j]) total += q_[i * n_ + j];
    }
  }
  return total;
}

double IsingModel::energy(std::span<const int> spins) const {
  if (spins.size() != n) throw ModelError("spin vector length does not match model size");
  double e = 0.0;
  for (const auto& [key, coupling] : j) e += coupling * spins[key.first] * spins[key.second];
  for (std::size_t i = 0; i < n; ++i) e += h[i] * spins[i];
  return e;
}

namespace {

void check_graph(const ProblemGraph& graph) {
  for (const auto& e : graph.edges) {
    if (e.u >= graph.num_nodes || e.v >= graph.num_nodes) {
      throw ModelError("edge (" + std::to_string(e.u) + "," + std::to_string(e.v) +
                       ") references a missing node");
    }
    if (e.u == e.v) throw ModelError("self loop on node " + std::to_string(e.u));
  }
}

}  // namespace

QuboMatrix qubo_from_maxcut(const ProblemGraph& graph) {
  check_graph(graph);
  if (graph.num_nodes == 0 || graph.edges.empty()) {
    throw ModelError("max-cut needs a graph with at least one edge");
  }
  auto q = QuboMatrix::zeros(graph.num_nodes, Sense::kMaximize);
  for (const auto& e : graph.edges) {
    q.add_pair(e.u, e.v, 2.0 * e.w);
    q.add_linear(e.u, -e.w);
    q.add_linear(e.v, -e.w);
  }
  return q;
}

QuboMatrix qubo_from_number_partition(std::span<const std::int64_t> numbers) {
  if (numbers.empty()) throw ModelError("number partitioning needs a nonempty list");
  for (auto a : numbers) {
    if (a <= 0) throw ModelError("number partitioning expects positive integers");
  }
  const std::size_t n = numbers.size();
  const double total = static_cast<double>(std::accumulate(numbers.begin(), numbers.end(), std::int64_t{0}));
  // (Σ a_i (2x_i − 1))² = 4(Σ a_i x_i)² − 4S Σ a_i x_i + S²
  auto q = QuboMatrix::zeros(n);
  for (std::size_t i = 0; i < n; ++i) {
    const double ai = static_cast<double>(numbers[i]);
    q.add_linear(i, 4.0 * ai * ai - 4.0 * total * ai);
    for (std::size_t j = i + 1; j < n; ++j) {
      q.add_pair(i, j, 8.0 * ai * static_cast<double>(numbers[j]));
    }
  }
  q.add_offset(total * total);
  return q;
}

QuboMatrix qubo_from_graph_coloring(const ProblemGraph& graph, std::size_t colors) {
  check_graph(graph);
  if (colors == 0) throw ModelError("graph coloring needs at least one color");
  if (graph.num_nodes == 0) throw ModelError("graph coloring needs at least one node");
  const std::size_t k = colors;
  auto q = QuboMatrix::zeros(graph.num_nodes * k);
  // (1 − Σ_c x_vc)² = 1 − Σ_c x_vc + 2 Σ_{c<c'} x_vc x_vc'
  for (std::size_t v = 0; v < graph.num_nodes; ++v) {
    q.add_offset(1.0);
    for (std::size_t c = 0; c < k; ++c) {
      q.add_linear(coloring_variable(v, c, k), -1.0);
      for (std::size_t c2 = c + 1; c2 < k; ++c2) {
        q.add_pair(coloring_variable(v, c, k), coloring_variable(v, c2, k), 2.0);
      }
    }
  }
  for (const auto& e : graph.edges) {
    for (std::size_t c = 0; c < k; ++c) {
      q.add_pair(coloring_variable(e.u, c, k), coloring_variable(e.v, c, k), 1.0);
    }
  }
  return q;
}

QuboMatrix qubo_from_set_packing(std::size_t universe_size,
                                 const std::vector<std::vector<std::size_t>>& sets,
                                 double penalty) {
  if (!(penalty > 1.0)) throw ConfigError("set-packing penalty must exceed 1");
  if (sets.empty()) throw ModelError("set packing needs at least one set");
  std::vector<std::set<std::size_t>> members;
  members.reserve(sets.size());
  for (const auto& s : sets) {
    for (auto e : s) {
      if (e >= universe_size) {
        throw ModelError("set element " + std::to_string(e) + " outside universe of size " +
                         std::to_string(universe_size));
      }
    }
    members.emplace_back(s.begin(), s.end());
  }
  auto q = QuboMatrix::zeros(sets.size(), Sense::kMaximize);
  for (std::size_t i = 0; i < members.size(); ++i) {
    q.add_linear(i, -1.0);
    for (std::size_t j = i + 1; j < members.size(); ++j) {
      const bool overlap = std::any_of(members[i].begin(), members[i].end(),
                                       [&](std::size_t e) { return members[j].count(e) > 0; });
      if (overlap) q.add_pair(i, j, penalty);
    }
  }
  return q;
}

IsingModel ising_from_qubo(const QuboMatrix& q) {
  IsingModel m;
  m.n = q.size();
  m.h.assign(m.n, 0.0);
  m.sense = q.sense();
  m.offset = q.offset();
  // x = (s + 1)/2:  x_i x_j = (s_i s_j + s_i + s_j + 1)/4,  x_i = (s_i + 1)/2
  for (std::size_t i = 0; i < m.n; ++i) {
    m.h[i] += 0.5 * q.at(i, i);
    m.offset += 0.5 * q.at(i, i);
    for (std::size_t j = i + 1; j < m.n; ++j) {
      const double pair = q.at(i, j) + q.at(j, i);
      if (pair == 0.0) continue;
      m.j[{i, j}] = 0.25 * pair;
      m.h[i] += 0.25 * pair;
      m.h[j] += 0.25 * pair;
      m.offset += 0.25 * pair;
    }
  }
  return m;
}

}  // namespace qaoachain
