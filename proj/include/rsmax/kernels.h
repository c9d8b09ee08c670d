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

#ifndef RSMAX_KERNELS_H_
#define RSMAX_KERNELS_H_

#include <cstddef>
#include <cstdint>
#include <string_view>

namespace rsmax {

// Word-level kernels behind the coverage and modular oracles. Every kernel has
// a scalar reference implementation; an AVX2 build is picked at first use when
// the CPU supports it. RSMAX_KERNELS=scalar|avx2|auto overrides the choice.
//
// MaskedSum accumulates into four lanes (bit i goes to lane i % 4) and returns
// (l0 + l1) + (l2 + l3), so both variants produce bit-identical sums.
struct KernelTable {
  const char* name;
  // acc[i] |= row[i] for i < words.
  void (*or_accumulate)(std::uint64_t* acc, const std::uint64_t* row,
                        std::size_t words);
  // Total set bits in words[0..count).
  std::uint64_t (*popcount)(const std::uint64_t* words, std::size_t count);
  // Sum of weights[i] over set bits i. `weights` has 64 * count entries.
  double (*masked_sum)(const std::uint64_t* mask, const double* weights,
                       std::size_t count);
};

const KernelTable& ScalarKernels();
// Null when this build or this CPU has no AVX2 variant.
const KernelTable* Avx2Kernels();

// The table selected for this process.
const KernelTable& ActiveKernels();

// Test hook: force a variant ("scalar", "avx2", "auto"). Returns false when
// the variant is unavailable; the active table is then unchanged.
bool SelectKernels(std::string_view variant);

}  // namespace rsmax

#endif  // RSMAX_KERNELS_H_
