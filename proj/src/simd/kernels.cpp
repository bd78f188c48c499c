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

#include <cstdlib>
#include <string_view>

#include "kernels_internal.hpp"

namespace qaoachain::simd {

const KernelTable& scalar_kernels() noexcept {
  static const KernelTable table{"scalar",
                                 scalar::apply_1q,
                                 scalar::apply_z_phase,
                                 scalar::apply_zz_phase,
                                 scalar::norm_squared,
                                 scalar::expect_parity,
                                 scalar::expect_diagonal,
                                 scalar::probabilities,
                                 scalar::max_accumulate_u16};
  return table;
}

const KernelTable* avx2_kernels() noexcept {
#if defined(QAOACHAIN_HAVE_AVX2)
  static const KernelTable table{"avx2",
                                 avx2::apply_1q,
                                 avx2::apply_z_phase,
                                 avx2::apply_zz_phase,
                                 avx2::norm_squared,
                                 avx2::expect_parity,
                                 avx2::expect_diagonal,
                                 avx2::probabilities,
                                 avx2::max_accumulate_u16};
  static const bool supported = __builtin_cpu_supports("avx2") && __builtin_cpu_supports("fma");
  return supported ? &table : nullptr;
#else
  return nullptr;
#endif
}

const KernelTable& active_kernels() noexcept {
  static const KernelTable& chosen = [] () -> const KernelTable& {
    const char* env = std::getenv("QAOACHAIN_SIMD");
    if (env != nullptr && std::string_view(env) == "scalar") return scalar_kernels();
    const KernelTable* fast = avx2_kernels();
    return fast != nullptr ? *fast : scalar_kernels();
  }();
  return chosen;
}

}  // namespace qaoachain::simd
