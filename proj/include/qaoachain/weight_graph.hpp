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
#include <filesystem>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "qaoachain/problem_model.hpp"

namespace qaoachain {

/// Ising Hamiltonian as a graph: node i carries h_i, edge (u,v) carries
/// J_uv. Nodes are 0..n−1; edges are stored with u < v, sorted, unique.
class WeightGraph {
 public:
  WeightGraph() = default;

  /// Validates and canonicalizes. Throws ModelError on self loops,
  /// duplicate edges, dangling endpoints, or an empty node list.
  WeightGraph(std::vector<double> node_weights, std::vector<WeightedEdge> edges,
              double offset = 0.0);

  std::size_t num_nodes() const noexcept { return node_weights_.size(); }
  std::size_t num_edges() const noexcept { return edges_.size(); }
  const std::vector<double>& node_weights() const noexcept { return node_weights_; }
  const std::vector<WeightedEdge>& edges() const noexcept { return edges_; }
  double offset() const noexcept { return offset_; }

  std::vector<std::vector<std::size_t>> adjacency() const;
  std::vector<std::size_t> degrees() const;

  /// Σ J_uv z_u z_v + Σ h_i z_i for z ∈ {−1,+1}ⁿ, offset excluded.
  double energy(std::span<const int> spins) const;

  /// True when every node and edge weight is zero.
  bool is_trivial() const;

  friend bool operator==(const WeightGraph&, const WeightGraph&) = default;

 private:
  std::vector<double> node_weights_;
  std::vector<WeightedEdge> edges_;
  double offset_ = 0.0;
};

/// Node weights h_i, an edge for every nonzero J_ij, offset carried over.
WeightGraph weight_graph_from_ising(const IsingModel& model);

/// Node-induced subgraph; `nodes` lists original ids in the order they
/// become local ids 0..k−1. The offset is not carried.
WeightGraph induced_subgraph(const WeightGraph& g, std::span<const std::size_t> nodes);

// JSON interchange:
//   {"offset": r, "nodes": [{"id": i, "w": r}...], "edges": [{"u": i, "v": i, "w": r}...]}
// Reals are written with 17 significant digits; output is canonical.

std::string graph_to_json(const WeightGraph& g);
WeightGraph graph_from_json(std::string_view text);
WeightGraph read_graph(const std::filesystem::path& path);
void write_graph(const std::filesystem::path& path, const WeightGraph& g);

/// The same document read as a problem graph: edge weights kept, node
/// weights ignored.
ProblemGraph problem_graph_from(const WeightGraph& g);

}  // namespace qaoachain
