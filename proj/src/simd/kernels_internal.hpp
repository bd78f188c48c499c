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

#include "qaoachain/simd/kernels.hpp"

namespace qaoachain::simd {

namespace scalar {
void apply_1q(cplx* amps, std::size_t dim, unsigned q, const Matrix2& m);
void apply_z_phase(cplx* amps, std::size_t dim, unsigned q, cplx zero, cplx one);
void apply_zz_phase(cplx* amps, std::size_t dim, unsigned a, unsigned b, cplx same, cplx differ);
double norm_squared(const cplx* amps, std::size_t dim);
double expect_parity(const cplx* amps, std::size_t dim, std::uint64_t mask);
double expect_diagonal(const cplx* amps, std::size_t dim, const double* diag);
void probabilities(const cplx* amps, std::size_t dim, double* out);
void max_accumulate_u16(std::uint16_t* acc, const std::uint16_t* row, std::size_t len);
}  // namespace scalar

namespace avx2 {
void apply_1q(cplx* amps, std::size_t dim, unsigned q, const Matrix2& m);
void apply_z_phase(cplx* amps, std::size_t dim, unsigned q, cplx zero, cplx one);
void apply_zz_phase(cplx* amps, std::size_t dim, unsigned a, unsigned b, cplx same, cplx differ);
double norm_squared(const cplx* amps, std::size_t dim);
double expect_parity(const cplx* amps, std::size_t dim, std::uint64_t mask);
double expect_diagonal(const cplx* amps, std::size_t dim, const double* diag);
void probabilities(const cplx* amps, std::size_t dim, double* out);
void max_accumulate_u16(std::uint16_t* acc, const std::uint16_t* row, std::size_t len);
}  // namespace avx2

}  // namespace qaoachain::simd
