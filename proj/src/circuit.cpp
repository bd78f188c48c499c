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

#include "qaoachain/circuit.hpp"

#include <algorithm>
#include <string>

#include "qaoachain/errors.hpp"

namespace qaoachain {

std::string_view gate_name(GateKind k) noexcept {
  switch (k) {
    case GateKind::kH: return "h";
    case GateKind::kRX: return "rx";
    case GateKind::kRZ: return "rz";
    case GateKind::kRZZ: return "rzz";
    case GateKind::kSwap: return "swap";
    case GateKind::kCnot: return "cx";
  }
  return "?";
}

void validate_gate(const Gate& g, std::size_t num_qubits) {
  if (g.q0 >= num_qubits) {
    throw ConfigError("gate " + std::string(gate_name(g.kind)) + " operand " + std::to_string(g.q0) +
                      " out of range for " + std::to_string(num_qubits) + " qubits");
  }
  if (is_two_qubit(g.kind)) {
    if (g.q1 >= num_qubits) {
      throw ConfigError("gate " + std::string(gate_name(g.kind)) + " operand " + std::to_string(g.q1) +
                        " out of range for " + std::to_string(num_qubits) + " qubits");
    }
    if (g.q0 == g.q1) throw ConfigError("two-qubit gate with repeated operand " + std::to_string(g.q0));
  }
}

void LogicalCircuit::add(const Gate& g) {
  validate_gate(g, n_);
  Gate copy = g;
  if (!has_angle(copy.kind)) copy.angle = 0.0;
  if (!is_two_qubit(copy.kind)) copy.q1 = 0;
  gates_.push_back(copy);
}

std::vector<Gate> PhysicalCircuit::gates() const {
  std::vector<Gate> out;
  for (const auto& layer : cycles) out.insert(out.end(), layer.begin(), layer.end());
  return out;
}

std::size_t PhysicalCircuit::gate_count() const {
  std::size_t total = 0;
  for (const auto& layer : cycles) total += layer.size();
  return total;
}

std::size_t PhysicalCircuit::cnot_count() const {
  std::size_t total = 0;
  for (const auto& layer : cycles) {
    total += static_cast<std::size_t>(
        std::count_if(layer.begin(), layer.end(), [](const Gate& g) { return g.kind == GateKind::kCnot; }));
  }
  return total;
}

std::size_t PhysicalCircuit::depth() const { return dag_depth(num_qubits, gates()); }

std::vector<std::vector<Gate>> asap_layers(std::size_t num_qubits, const std::vector<Gate>& gates) {
  std::vector<std::size_t> ready(num_qubits, 0);
  std::vector<std::vector<Gate>> layers;
  for (const auto& g : gates) {
    validate_gate(g, num_qubits);
    std::size_t slot = ready[g.q0];
    if (is_two_qubit(g.kind)) slot = std::max(slot, ready[g.q1]);
    if (slot >= layers.size()) layers.resize(slot + 1);
    layers[slot].push_back(g);
    ready[g.q0] = slot + 1;
    if (is_two_qubit(g.kind)) ready[g.q1] = slot + 1;
  }
  return layers;
}

std::size_t dag_depth(std::size_t num_qubits, const std::vector<Gate>& gates) {
  std::vector<std::size_t> ready(num_qubits, 0);
  std::size_t depth = 0;
  for (const auto& g : gates) {
    validate_gate(g, num_qubits);
    std::size_t slot = ready[g.q0];
    if (is_two_qubit(g.kind)) slot = std::max(slot, ready[g.q1]);
    ready[g.q0] = slot + 1;
    if (is_two_qubit(g.kind)) ready[g.q1] = slot + 1;
    depth = std::max(depth, slot + 1);
  }
  return depth;
}

}  // namespace qaoachain
