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

#include <bit>

#include "rsmax/kernels.h"

namespace rsmax {
namespace {

void OrAccumulateScalar(std::uint64_t* acc, const std::uint64_t* row,
                        std::size_t words) {
  for (std::size_t i = 0; i < words; ++i) acc[i] |= row[i];
}

std::uint64_t PopcountScalar(const std::uint64_t* words, std::size_t count) {
  std::uint64_t total = 0;
  for (std::size_t i = 0; i < count; ++i) total += std::popcount(words[i]);
  return total;
}

double MaskedSumScalar(const std::uint64_t* mask, const double* weights,
                       std::size_t count) {
  double lane[4] = {0.0, 0.0, 0.0, 0.0};
  for (std::size_t w = 0; w < count; ++w) {
    const std::uint64_t bits = mask[w];
    if (bits == 0) continue;
    const double* base = weights + 64 * w;
    for (int b = 0; b < 64; ++b) {
      // Adding an explicit zero keeps the lane sums identical to the
      // vector path, which adds every lane unconditionally.
      lane[b & 3] += ((bits >> b) & 1u) ? base[b] : 0.0;
    }
  }
  return (lane[0] + lane[1]) + (lane[2] + lane[3]);
}

}  // namespace

const KernelTable& ScalarKernels() {
  static const KernelTable table = {"scalar", &OrAccumulateScalar,
                                    &PopcountScalar, &MaskedSumScalar};
  return table;
}

}  // namespace rsmax
