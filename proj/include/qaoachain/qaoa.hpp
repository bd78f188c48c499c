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
#include <span>
#include <vector>

#include "qaoachain/circuit.hpp"
#include "qaoachain/weight_graph.hpp"

namespace qaoachain {

/// Variational angles, one (γ, β) pair per layer.
struct QaoaParams {
  std::vector<double> gamma;
  std::vector<double> beta;

  QaoaParams() = default;
  QaoaParams(std::vector<double> gammas, std::vector<double> betas);

  std::size_t depth() const noexcept { return gamma.size(); }

  friend bool operator==(const QaoaParams&, const QaoaParams&) = default;
};

/// H on every qubit, then per layer k: RZZ(2γ_k J_uv) for each edge in
/// sorted order, RZ(2γ_k h_i) for each nonzero node weight, RX(2β_k) on
/// every qubit.
LogicalCircuit build_qaoa_circuit(const WeightGraph& g, const QaoaParams& params);

/// C(z) = Σ J_uv z_u z_v + Σ h_i z_i for each basis index, with the fixed
/// convention z_i = 1 − 2·bit_i.
std::vector<double> cost_diagonal(const WeightGraph& g);

double energy_of_bitstring(const WeightGraph& g, std::span<const int> spins);

/// E_p from the full statevector: Σ_z |⟨z|ψ⟩|² C(z).
double expectation_full(const WeightGraph& g, const QaoaParams& params);

/// One Hamiltonian term: a node bias h_a Z_a or an edge coupling J_ab Z_a Z_b.
struct HamiltonianTerm {
  enum class Kind { kNode, kEdge };
  Kind kind = Kind::kNode;
  std::size_t a = 0;
  std::size_t b = 0;
  double weight = 0.0;
};

/// A term together with the light cone that determines its expectation.
struct TermSubproblem {
  HamiltonianTerm term;
  WeightGraph subgraph;                 // induced on the p-hop neighborhood
  std::vector<std::size_t> to_original;  // local node -> original node
  std::size_t local_a = 0;              // term support in local ids
  std::size_t local_b = 0;
};

/// One subproblem per nonzero term: node terms first in id order, then
/// edges in sorted order.
std::vector<TermSubproblem> decompose(const WeightGraph& g, std::size_t depth);

/// Σ weight · ⟨term⟩ over the decomposition, each evaluated on its own
/// subgraph. Subproblems run on up to `threads` workers (0 = hardware
/// concurrency); the reduction is in subproblem order, so the result does
/// not depend on the thread count.
double expectation_decomposed(const WeightGraph& g, const QaoaParams& params, unsigned threads = 0);

/// Per-term contribution, same order as decompose().
std::vector<double> term_expectations(const std::vector<TermSubproblem>& subproblems,
                                      const QaoaParams& params, unsigned threads = 0);

}  // namespace qaoachain
