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

#include <complex>
#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

#include "qaoachain/circuit.hpp"
#include "qaoachain/simd/kernels.hpp"

namespace qaoachain {

/// Largest register the statevector simulator accepts.
inline constexpr std::size_t kMaxSimulatedQubits = 24;

/// Dense statevector, qubit 0 is the least-significant index bit.
class StateVector {
 public:
  /// |0…0⟩ on `num_qubits` qubits. Throws CapacityError above the limit.
  explicit StateVector(std::size_t num_qubits,
                       const simd::KernelTable& kernels = simd::active_kernels());

  std::size_t num_qubits() const noexcept { return n_; }
  std::size_t dimension() const noexcept { return amps_.size(); }
  std::span<const std::complex<double>> amplitudes() const noexcept { return amps_; }
  std::span<std::complex<double>> amplitudes() noexcept { return amps_; }

  void apply(const Gate& g);
  void apply(std::span<const Gate> gates);

  double norm_squared() const;
  /// ⟨Z_q⟩
  double expect_z(std::size_t q) const;
  /// ⟨Z_a Z_b⟩
  double expect_zz(std::size_t a, std::size_t b) const;
  /// Σ_i |a_i|² diag_i
  double expect_diagonal(std::span<const double> diag) const;
  std::vector<double> probabilities() const;

 private:
  std::size_t n_;
  std::vector<std::complex<double>> amps_;
  const simd::KernelTable* kernels_;
};

StateVector simulate(const LogicalCircuit& circuit,
                     const simd::KernelTable& kernels = simd::active_kernels());
StateVector simulate(std::size_t num_qubits, std::span<const Gate> gates,
                     const simd::KernelTable& kernels = simd::active_kernels());

}  // namespace qaoachain
