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

// Structured QAOA compiler for a 1-D nearest-neighbour chain.
//
// The cost block is laid onto a fixed SWAP-network template: on positions
// 0..n−1 the four steps
//   (1) RZZ on (2i, 2i+1)   (2) RZZ on (2i+1, 2i+2)
//   (3) SWAP on (2i+1, 2i+2) (4) SWAP on (2i, 2i+1)
// repeat ⌊n/2⌋ times. Even n drops the two trailing SWAP layers (2n−2
// cycles); odd n appends one more step-(1) layer (2n−1 cycles). Every
// pair of initial positions meets in exactly one RZZ layer, so the cycle
// of each RZZ is known once the initial mapping is fixed.

#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "qaoachain/circuit.hpp"
#include "qaoachain/qaoa.hpp"
#include "qaoachain/weight_graph.hpp"

namespace qaoachain {

enum class LayerKind { kRzzEven, kRzzOdd, kSwapOdd, kSwapEven };

constexpr bool is_rzz_layer(LayerKind k) noexcept { return k == LayerKind::kRzzEven || k == LayerKind::kRzzOdd; }

struct TemplateLayer {
  LayerKind kind;
  std::vector<std::pair<std::size_t, std::size_t>> pairs;  // adjacent positions (i, i+1)
};

class SwapTemplate {
 public:
  /// Throws ConfigError for n < 2.
  explicit SwapTemplate(std::size_t n);

  std::size_t size() const noexcept { return n_; }
  const std::vector<TemplateLayer>& layers() const noexcept { return layers_; }
  std::size_t cycle_count() const noexcept { return layers_.size(); }
  std::size_t rzz_layer_count() const;
  std::size_t swap_layer_count() const;

 private:
  std::size_t n_;
  std::vector<TemplateLayer> layers_;
};

SwapTemplate build_template(std::size_t n);

/// Cycle (1-based) at which the qubits initially on positions a and b meet
/// for their RZZ. Built by replaying the template's permutation.
class ExeRTable {
 public:
  explicit ExeRTable(const SwapTemplate& tmpl);

  std::size_t size() const noexcept { return n_; }
  std::size_t cycle(std::size_t a, std::size_t b) const { return table_[a * n_ + b]; }
  /// Row a as a contiguous array; the diagonal entry is 0.
  const std::uint16_t* row(std::size_t a) const { return table_.data() + a * n_; }
  std::size_t max_cycle() const noexcept { return max_cycle_; }

 private:
  std::size_t n_;
  std::vector<std::uint16_t> table_;
  std::size_t max_cycle_ = 0;
};

ExeRTable build_exer_table(std::size_t n);

/// Injective assignment of logical qubits to chain positions.
struct Mapping {
  std::vector<std::size_t> position_of;  // logical -> position
  std::size_t chain_length = 0;

  /// Throws ConfigError unless positions are distinct and in range.
  void validate() const;
  friend bool operator==(const Mapping&, const Mapping&) = default;
};

/// Last RZZ cycle the template needs for g under `mapping` (0 without edges).
std::size_t mapping_cost(const WeightGraph& g, const Mapping& mapping, const ExeRTable& exer);

struct MappingSearchResult {
  Mapping mapping;
  std::size_t last_rzz_cycle = 0;
};

/// Tree search over initial mappings. Logical qubits are placed in order
/// of descending degree (ties by ascending id); a child's cost is the
/// largest ExeR cycle to an already-placed neighbour, accumulated as a
/// running maximum along the path. From level 2 on, each level keeps at
/// most `b_max` nodes per distinct cost, first come first kept. Level 1
/// holds every position unless `mirror_pruning` restricts the first qubit
/// to the left half of the chain.
MappingSearchResult search_initial_mapping(const WeightGraph& g, std::size_t chain_length, std::size_t b_max = 5,
                                           bool mirror_pruning = false);

enum class StepKind { kInit, kBias, kRzz, kSwap, kMixer };

struct ScheduledLayer {
  StepKind kind = StepKind::kInit;
  std::size_t block = 0;  // QAOA layer, 1-based; 0 for the initial H layer
  std::size_t cycle = 0;  // template cycle for RZZ/SWAP layers, else 0
  std::vector<Gate> gates;
};

/// Layered circuit over chain positions using H, RX, RZ, RZZ and SWAP.
struct ScheduledCircuit {
  std::size_t num_qubits = 0;
  std::vector<ScheduledLayer> layers;
  std::vector<std::size_t> initial_layout;  // logical -> position
  std::vector<std::size_t> final_layout;
  std::vector<std::size_t> block_cycles;  // template cycles kept per QAOA layer

  /// Σ block_cycles: the pre-decomposition depth of the cost blocks.
  std::size_t template_cycles() const;
  /// Largest template cycle holding an RZZ in the first block (0 if none).
  std::size_t last_rzz_cycle() const;
  std::vector<Gate> gates() const;
};

/// Places the QAOA layers on the template. Odd layers run the template
/// forward up to the last needed RZZ; even layers replay that block in
/// reverse with their own γ, restoring the initial layout.
ScheduledCircuit schedule(const WeightGraph& g, const Mapping& mapping, const QaoaParams& params);

/// RZZ(θ)(a,b) → CX(a,b) RZ(θ)(b) CX(a,b); SWAP(a,b) → CX(a,b) CX(b,a) CX(a,b).
PhysicalCircuit decompose_gates(const ScheduledCircuit& scheduled);

/// Cancels CNOT pairs with identical operands and no gate between them on
/// either qubit, repeatedly, then left-aligns everything (ASAP).
PhysicalCircuit optimize_circuit(const PhysicalCircuit& circuit);

struct CompileResult {
  PhysicalCircuit circuit;
  Mapping mapping;
  std::size_t predicted_last_cycle = 0;
  std::size_t template_cycles = 0;  // depth before decomposition
  std::size_t depth_before_optimization = 0;
  std::size_t cnot_before_optimization = 0;
};

/// Full pipeline on the first g.num_nodes() qubits of `chain`.
CompileResult compile(const WeightGraph& g, const QaoaParams& params, std::span<const int> chain,
                      std::size_t b_max = 5, bool mirror_pruning = false);

/// {"logical_to_physical": [...], "measure_order": [...], "chain": [...]}
/// logical_to_physical holds hardware ids; measure_order[l] is the register
/// index measured into classical bit l.
std::string layout_to_json(const PhysicalCircuit& circuit);

}  // namespace qaoachain
