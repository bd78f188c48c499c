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

#include <bit>

#include "kernels_internal.hpp"

namespace qaoachain::simd::scalar {

void apply_1q(cplx* amps, std::size_t dim, unsigned q, const Matrix2& m) {
  const std::size_t stride = std::size_t{1} << q;
  for (std::size_t base = 0; base < dim; base += 2 * stride) {
    for (std::size_t i = base; i < base + stride; ++i) {
      const cplx a0 = amps[i];
      const cplx a1 = amps[i + stride];
      amps[i] = m.m00 * a0 + m.m01 * a1;
      amps[i + stride] = m.m10 * a0 + m.m11 * a1;
    }
  }
}

void apply_z_phase(cplx* amps, std::size_t dim, unsigned q, cplx zero, cplx one) {
  for (std::size_t i = 0; i < dim; ++i) amps[i] *= ((i >> q) & 1U) ? one : zero;
}

void apply_zz_phase(cplx* amps, std::size_t dim, unsigned a, unsigned b, cplx same, cplx differ) {
  for (std::size_t i = 0; i < dim; ++i) {
    amps[i] *= (((i >> a) ^ (i >> b)) & 1U) ? differ : same;
  }
}

double norm_squared(const cplx* amps, std::size_t dim) {
  double s = 0.0;
  for (std::size_t i = 0; i < dim; ++i) s += std::norm(amps[i]);
  return s;
}

double expect_parity(const cplx* amps, std::size_t dim, std::uint64_t mask) {
  double s = 0.0;
  for (std::size_t i = 0; i < dim; ++i) {
    const double p = std::norm(amps[i]);
    s += (std::popcount(static_cast<std::uint64_t>(i) & mask) & 1) ? -p : p;
  }
  return s;
}

double expect_diagonal(const cplx* amps, std::size_t dim, const double* diag) {
  double s = 0.0;
  for (std::size_t i = 0; i < dim; ++i) s += std::norm(amps[i]) * diag[i];
  return s;
}

void probabilities(const cplx* amps, std::size_t dim, double* out) {
  for (std::size_t i = 0; i < dim; ++i) out[i] = std::norm(amps[i]);
}

void max_accumulate_u16(std::uint16_t* acc, const std::uint16_t* row, std::size_t len) {
  for (std::size_t i = 0; i < len; ++i) acc[i] = acc[i] < row[i] ? row[i] : acc[i];
}

}  // namespace qaoachain::simd::scalar
