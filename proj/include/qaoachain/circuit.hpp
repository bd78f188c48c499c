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
#include <string_view>
#include <vector>

namespace qaoachain {

enum class GateKind : std::uint8_t { kH, kRX, kRZ, kRZZ, kSwap, kCnot };

constexpr bool is_two_qubit(GateKind k) noexcept {
  return k == GateKind::kRZZ || k == GateKind::kSwap || k == GateKind::kCnot;
}

constexpr bool has_angle(GateKind k) noexcept {
  return k == GateKind::kRX || k == GateKind::kRZ || k == GateKind::kRZZ;
}

std::string_view gate_name(GateKind k) noexcept;

/// One gate. For CNOT, q0 is the control and q1 the target. Angles are in
/// radians with RX(θ) = exp(−iθX/2), RZ(θ) = exp(−iθZ/2),
/// RZZ(θ) = exp(−iθ Z⊗Z/2).
struct Gate {
  GateKind kind = GateKind::kH;
  std::uint32_t q0 = 0;
  std::uint32_t q1 = 0;
  double angle = 0.0;

  static Gate h(std::uint32_t q) { return {GateKind::kH, q, 0, 0.0}; }
  static Gate rx(std::uint32_t q, double theta) { return {GateKind::kRX, q, 0, theta}; }
  static Gate rz(std::uint32_t q, double theta) { return {GateKind::kRZ, q, 0, theta}; }
  static Gate rzz(std::uint32_t a, std::uint32_t b, double theta) { return {GateKind::kRZZ, a, b, theta}; }
  static Gate swap(std::uint32_t a, std::uint32_t b) { return {GateKind::kSwap, a, b, 0.0}; }
  static Gate cnot(std::uint32_t control, std::uint32_t target) { return {GateKind::kCnot, control, target, 0.0}; }

  friend bool operator==(const Gate&, const Gate&) = default;
};

/// Gate list over logical qubits 0..n−1.
class LogicalCircuit {
 public:
  LogicalCircuit() = default;
  explicit LogicalCircuit(std::size_t num_qubits) : n_(num_qubits) {}

  std::size_t num_qubits() const noexcept { return n_; }
  const std::vector<Gate>& gates() const noexcept { return gates_; }

  /// Throws ConfigError on out-of-range or repeated operands.
  void add(const Gate& g);

 private:
  std::size_t n_ = 0;
  std::vector<Gate> gates_;
};

/// Operand check shared by every circuit container.
void validate_gate(const Gate& g, std::size_t num_qubits);

/// Cycle-scheduled circuit over chain positions 0..num_qubits−1, using
/// only H, RX, RZ and CNOT.
struct PhysicalCircuit {
  std::size_t num_qubits = 0;
  std::vector<std::vector<Gate>> cycles;
  std::vector<std::size_t> final_layout;  // logical qubit -> chain position at measurement
  std::vector<int> chain;                 // chain position -> hardware qubit id

  std::vector<Gate> gates() const;
  std::size_t gate_count() const;
  std::size_t cnot_count() const;
  /// Longest path in the gate dependency graph, unit cost per gate.
  std::size_t depth() const;
};

/// As-soon-as-possible layering of a gate sequence.
std::vector<std::vector<Gate>> asap_layers(std::size_t num_qubits, const std::vector<Gate>& gates);
std::size_t dag_depth(std::size_t num_qubits, const std::vector<Gate>& gates);

}  // namespace qaoachain
