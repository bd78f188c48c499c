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

// Compiled with -mavx2 -mfma. Only reached through the dispatch table after
// a CPU feature check.

#include <immintrin.h>

#include <bit>

#include "kernels_internal.hpp"

namespace qaoachain::simd::avx2 {
namespace {

inline double* raw(cplx* p) { return reinterpret_cast<double*>(p); }
inline const double* raw(const cplx* p) { return reinterpret_cast<const double*>(p); }

inline __m256d broadcast(cplx c) { return _mm256_setr_pd(c.real(), c.imag(), c.real(), c.imag()); }
inline __m256d pair(cplx lo, cplx hi) { return _mm256_setr_pd(lo.real(), lo.imag(), hi.real(), hi.imag()); }

// Lane-wise product of two packed complex pairs.
inline __m256d cmul(__m256d v, __m256d w) {
  const __m256d wr = _mm256_movedup_pd(w);
  const __m256d wi = _mm256_permute_pd(w, 0xF);
  const __m256d vs = _mm256_permute_pd(v, 0x5);
  return _mm256_fmaddsub_pd(v, wr, _mm256_mul_pd(vs, wi));
}

// |c0|², |c2|², |c1|², |c3|² for four consecutive amplitudes.
inline __m256d norms4(const double* p) {
  const __m256d v0 = _mm256_loadu_pd(p);
  const __m256d v1 = _mm256_loadu_pd(p + 4);
  return _mm256_hadd_pd(_mm256_mul_pd(v0, v0), _mm256_mul_pd(v1, v1));
}

inline double hsum(__m256d v) {
  const __m128d lo = _mm256_castpd256_pd128(v);
  const __m128d hi = _mm256_extractf128_pd(v, 1);
  const __m128d s = _mm_add_pd(lo, hi);
  return _mm_cvtsd_f64(_mm_add_sd(s, _mm_unpackhi_pd(s, s)));
}

inline unsigned parity(std::uint64_t x) { return static_cast<unsigned>(std::popcount(x) & 1); }

}  // namespace

void apply_1q(cplx* amps, std::size_t dim, unsigned q, const Matrix2& m) {
  if (q == 0) {
    scalar::apply_1q(amps, dim, q, m);
    return;
  }
  const std::size_t stride = std::size_t{1} << q;
  const __m256d m00 = broadcast(m.m00), m01 = broadcast(m.m01);
  const __m256d m10 = broadcast(m.m10), m11 = broadcast(m.m11);
  for (std::size_t base = 0; base < dim; base += 2 * stride) {
    for (std::size_t i = base; i < base + stride; i += 2) {
      double* p0 = raw(amps + i);
      double* p1 = raw(amps + i + stride);
      const __m256d a = _mm256_loadu_pd(p0);
      const __m256d b = _mm256_loadu_pd(p1);
      _mm256_storeu_pd(p0, _mm256_add_pd(cmul(a, m00), cmul(b, m01)));
      _mm256_storeu_pd(p1, _mm256_add_pd(cmul(a, m10), cmul(b, m11)));
    }
  }
}

void apply_z_phase(cplx* amps, std::size_t dim, unsigned q, cplx zero, cplx one) {
  const __m256d table[4] = {pair(zero, zero), pair(zero, one), pair(one, zero), pair(one, one)};
  for (std::size_t i = 0; i < dim; i += 2) {
    const unsigned b0 = (i >> q) & 1U;
    const unsigned b1 = ((i + 1) >> q) & 1U;
    double* p = raw(amps + i);
    _mm256_storeu_pd(p, cmul(_mm256_loadu_pd(p), table[b0 * 2 + b1]));
  }
}

void apply_zz_phase(cplx* amps, std::size_t dim, unsigned a, unsigned b, cplx same, cplx differ) {
  const __m256d table[4] = {pair(same, same), pair(same, differ), pair(differ, same), pair(differ, differ)};
  for (std::size_t i = 0; i < dim; i += 2) {
    const unsigned p0 = ((i >> a) ^ (i >> b)) & 1U;
    const unsigned p1 = (((i + 1) >> a) ^ ((i + 1) >> b)) & 1U;
    double* p = raw(amps + i);
    _mm256_storeu_pd(p, cmul(_mm256_loadu_pd(p), table[p0 * 2 + p1]));
  }
}

double norm_squared(const cplx* amps, std::size_t dim) {
  if (dim < 4) return scalar::norm_squared(amps, dim);
  __m256d acc = _mm256_setzero_pd();
  for (std::size_t i = 0; i < dim; i += 4) acc = _mm256_add_pd(acc, norms4(raw(amps + i)));
  return hsum(acc);
}

double expect_parity(const cplx* amps, std::size_t dim, std::uint64_t mask) {
  if (dim < 4) return scalar::expect_parity(amps, dim, mask);
  // Sign pattern of offsets 0..3 inside an aligned block, in norms4 lane order.
  double s[4];
  for (unsigned k = 0; k < 4; ++k) s[k] = parity(k & mask & 3U) ? -1.0 : 1.0;
  const __m256d even = _mm256_setr_pd(s[0], s[2], s[1], s[3]);
  const __m256d odd = _mm256_sub_pd(_mm256_setzero_pd(), even);
  const std::uint64_t high = mask & ~std::uint64_t{3};
  __m256d acc = _mm256_setzero_pd();
  for (std::size_t i = 0; i < dim; i += 4) {
    const __m256d sign = parity(i & high) ? odd : even;
    acc = _mm256_fmadd_pd(norms4(raw(amps + i)), sign, acc);
  }
  return hsum(acc);
}

double expect_diagonal(const cplx* amps, std::size_t dim, const double* diag) {
  if (dim < 4) return scalar::expect_diagonal(amps, dim, diag);
  __m256d acc = _mm256_setzero_pd();
  for (std::size_t i = 0; i < dim; i += 4) {
    const __m256d d = _mm256_permute4x64_pd(_mm256_loadu_pd(diag + i), 0xD8);
    acc = _mm256_fmadd_pd(norms4(raw(amps + i)), d, acc);
  }
  return hsum(acc);
}

void probabilities(const cplx* amps, std::size_t dim, double* out) {
  if (dim < 4) {
    scalar::probabilities(amps, dim, out);
    return;
  }
  for (std::size_t i = 0; i < dim; i += 4) {
    _mm256_storeu_pd(out + i, _mm256_permute4x64_pd(norms4(raw(amps + i)), 0xD8));
  }
}

void max_accumulate_u16(std::uint16_t* acc, const std::uint16_t* row, std::size_t len) {
  std::size_t i = 0;
  for (; i + 16 <= len; i += 16) {
    auto* a = reinterpret_cast<__m256i*>(acc + i);
    const auto* r = reinterpret_cast<const __m256i*>(row + i);
    _mm256_storeu_si256(a, _mm256_max_epu16(_mm256_loadu_si256(a), _mm256_loadu_si256(r)));
  }
  for (; i < len; ++i) acc[i] = acc[i] < row[i] ? row[i] : acc[i];
}

}  // namespace qaoachain::simd::avx2
