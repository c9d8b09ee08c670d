// Copyright 2026 The Authors.
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

#include "rsmax/kernels.h"

#include <atomic>
#include <cstdlib>
#include <string>

namespace rsmax {

#if defined(RSMAX_HAVE_AVX2)
const KernelTable& Avx2KernelTable();
#endif

namespace {

bool CpuHasAvx2() {
#if defined(RSMAX_HAVE_AVX2) && (defined(__GNUC__) || defined(__clang__))
  __builtin_cpu_init();
  return __builtin_cpu_supports("avx2") && __builtin_cpu_supports("popcnt");
#else
  return false;
#endif
}

const KernelTable* Resolve(std::string_view variant) {
  if (variant == "scalar") return &ScalarKernels();
  if (variant == "avx2") return Avx2Kernels();
  if (variant == "auto" || variant.empty()) {
    const KernelTable* avx2 = Avx2Kernels();
    return avx2 != nullptr ? avx2 : &ScalarKernels();
  }
  return nullptr;
}

const KernelTable* InitialKernels() {
  const char* env = std::getenv("RSMAX_KERNELS");
  const KernelTable* table = Resolve(env == nullptr ? "auto" : env);
  return table != nullptr ? table : Resolve("auto");
}

std::atomic<const KernelTable*>& Active() {
  static std::atomic<const KernelTable*> active{InitialKernels()};
  return active;
}

}  // namespace

const KernelTable* Avx2Kernels() {
#if defined(RSMAX_HAVE_AVX2)
  static const bool supported = CpuHasAvx2();
  return supported ? &Avx2KernelTable() : nullptr;
#else
  return nullptr;
#endif
}

const KernelTable& ActiveKernels() {
  return *Active().load(std::memory_order_acquire);
}

bool SelectKernels(std::string_view variant) {
  const KernelTable* table = Resolve(variant);
  if (table == nullptr) return false;
  Active().store(table, std::memory_order_release);
  return true;
}

}  // namespace rsmax
