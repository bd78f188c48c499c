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

#include "qaoachain/simulator.hpp"

#include <cmath>
#include <string>
#include <utility>

#include "qaoachain/errors.hpp"

namespace qaoachain {

using cplx = std::complex<double>;

StateVector::StateVector(std::size_t num_qubits, const simd::KernelTable& kernels)
    : n_(num_qubits), kernels_(&kernels) {
  if (num_qubits == 0) throw CapacityError("statevector needs at least one qubit");
  if (num_qubits > kMaxSimulatedQubits) {
    throw CapacityError("statevector of " + std::to_string(num_qubits) + " qubits exceeds the limit of " +
                        std::to_string(kMaxSimulatedQubits));
  }
  amps_.assign(std::size_t{1} << num_qubits, cplx{0.0, 0.0});
  amps_[0] = 1.0;
}

void StateVector::apply(const Gate& g) {
  validate_gate(g, n_);
  cplx* a = amps_.data();
  const std::size_t dim = amps_.size();
  const double half = 0.5 * g.angle;
  switch (g.kind) {
    case GateKind::kH: {
      const double r = 1.0 / std::sqrt(2.0);
      kernels_->apply_1q(a, dim, g.q0, {r, r, r, -r});
      break;
    }
    case GateKind::kRX: {
      const cplx c{std::cos(half), 0.0};
      const cplx s{0.0, -std::sin(half)};
      kernels_->apply_1q(a, dim, g.q0, {c, s, s, c});
      break;
    }
    case GateKind::kRZ:
      kernels_->apply_z_phase(a, dim, g.q0, std::polar(1.0, -half), std::polar(1.0, half));
      break;
    case GateKind::kRZZ:
      kernels_->apply_zz_phase(a, dim, g.q0, g.q1, std::polar(1.0, -half), std::polar(1.0, half));
      break;
    case GateKind::kSwap: {
      const std::size_t ba = std::size_t{1} << g.q0;
      const std::size_t bb = std::size_t{1} << g.q1;
      for (std::size_t i = 0; i < dim; ++i) {
        if ((i & ba) && !(i & bb)) std::swap(a[i], a[(i ^ ba) | bb]);
      }
      break;
    }
    case GateKind::kCnot: {
      const std::size_t bc = std::size_t{1} << g.q0;
      const std::size_t bt = std::size_t{1} << g.q1;
      for (std::size_t i = 0; i < dim; ++i) {
        if ((i & bc) && !(i & bt)) std::swap(a[i], a[i | bt]);
      }
      break;
    }
  }
}

void StateVector::apply(std::span<const Gate> gates) {
  for (const auto& g : gates) apply(g);
}

double StateVector::norm_squared() const { return kernels_->norm_squared(amps_.data(), amps_.size()); }

double StateVector::expect_z(std::size_t q) const {
  return kernels_->expect_parity(amps_.data(), amps_.size(), std::uint64_t{1} << q);
}

double StateVector::expect_zz(std::size_t a, std::size_t b) const {
  return kernels_->expect_parity(amps_.data(), amps_.size(), (std::uint64_t{1} << a) | (std::uint64_t{1} << b));
}

double StateVector::expect_diagonal(std::span<const double> diag) const {
  if (diag.size() != amps_.size()) throw ConfigError("diagonal length does not match statevector dimension");
  return kernels_->expect_diagonal(amps_.data(), amps_.size(), diag.data());
}

std::vector<double> StateVector::probabilities() const {
  std::vector<double> p(amps_.size());
  kernels_->probabilities(amps_.data(), amps_.size(), p.data());
  return p;
}

StateVector simulate(const LogicalCircuit& circuit, const simd::KernelTable& kernels) {
  return simulate(circuit.num_qubits(), circuit.gates(), kernels);
}

StateVector simulate(std::size_t num_qubits, std::span<const Gate> gates, const simd::KernelTable& kernels) {
  StateVector sv(num_qubits, kernels);
  sv.apply(gates);
  return sv;
}

}  // namespace qaoachain
