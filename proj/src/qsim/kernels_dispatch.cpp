// Copyright 2026 The pvbqc Authors.
// SPDX-License-Identifier: Apache-2.0

#include <cstdlib>
#include <string_view>

#include "pvbqc/qsim/kernels.hpp"

namespace pvbqc::qsim {

#if defined(PVBQC_HAVE_AVX2_KERNELS)
namespace avx2 {
const KernelTable& Table();
}
#endif

const KernelTable* Avx2Kernels() {
#if defined(PVBQC_HAVE_AVX2_KERNELS)
  static const bool supported =
      __builtin_cpu_supports("avx2") && __builtin_cpu_supports("fma");
  return supported ? &avx2::Table() : nullptr;
#else
  return nullptr;
#endif
}

const KernelTable& ActiveKernels() {
  static const KernelTable* active = [] {
    const char* env = std::getenv("PVBQC_SIMD");
    if (env != nullptr && std::string_view(env) == "scalar") return &ScalarKernels();
    const KernelTable* simd = Avx2Kernels();
    return simd != nullptr ? simd : &ScalarKernels();
  }();
  return *active;
}

}  // namespace pvbqc::qsim
