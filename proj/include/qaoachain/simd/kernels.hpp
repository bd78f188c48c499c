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

// Statevector inner loops. Every kernel has a scalar reference version and,
// when the build and CPU allow it, an AVX2/FMA version. The two are selected
// at runtime and tested against each other.
//
// Amplitudes are interleaved complex doubles, little-endian qubit order:
// bit q of the basis index is qubit q. `dim` is always a power of two.

#include <complex>
#include <cstddef>
#include <cstdint>
#include <string_view>

namespace qaoachain::simd {

using cplx = std::complex<double>;

struct Matrix2 {
  cplx m00, m01, m10, m11;
};

struct KernelTable {
  std::string_view name;

  // a ← M a on the (bit q = 0, bit q = 1) amplitude pairs.
  void (*apply_1q)(cplx* amps, std::size_t dim, unsigned q, const Matrix2& m);
  // a_i ← a_i · (bit q of i ? one : zero)
  void (*apply_z_phase)(cplx* amps, std::size_t dim, unsigned q, cplx zero, cplx one);
  // a_i ← a_i · (bits a,b of i equal ? same : differ)
  void (*apply_zz_phase)(cplx* amps, std::size_t dim, unsigned a, unsigned b, cplx same, cplx differ);
  // Σ |a_i|²
  double (*norm_squared)(const cplx* amps, std::size_t dim);
  // Σ |a_i|² (−1)^popcount(i & mask), i.e. ⟨Π_{q∈mask} Z_q⟩
  double (*expect_parity)(const cplx* amps, std::size_t dim, std::uint64_t mask);
  // Σ |a_i|² d_i
  double (*expect_diagonal)(const cplx* amps, std::size_t dim, const double* diag);
  // out_i = |a_i|²
  void (*probabilities)(const cplx* amps, std::size_t dim, double* out);
  // acc_i = max(acc_i, row_i); used by the mapping search over cycle tables
  void (*max_accumulate_u16)(std::uint16_t* acc, const std::uint16_t* row, std::size_t len);
};

const KernelTable& scalar_kernels() noexcept;

/// Null when the AVX2 variants were not compiled in or the CPU lacks
/// AVX2/FMA.
const KernelTable* avx2_kernels() noexcept;

/// The table used by the simulator: AVX2 when available, unless the
/// environment variable QAOACHAIN_SIMD=scalar forces the reference path.
const KernelTable& active_kernels() noexcept;

}  // namespace qaoachain::simd
