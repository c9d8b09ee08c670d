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

#include <immintrin.h>

#include <bit>

#include "rsmax/kernels.h"

namespace rsmax {
namespace {

void OrAccumulateAvx2(std::uint64_t* acc, const std::uint64_t* row,
                      std::size_t words) {
  std::size_t i = 0;
  for (; i + 4 <= words; i += 4) {
    __m256i a = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(acc + i));
    const __m256i r =
        _mm256_loadu_si256(reinterpret_cast<const __m256i*>(row + i));
    a = _mm256_or_si256(a, r);
    _mm256_storeu_si256(reinterpret_cast<__m256i*>(acc + i), a);
  }
  for (; i < words; ++i) acc[i] |= row[i];
}

// Nibble lookup popcount (Mula).
std::uint64_t PopcountAvx2(const std::uint64_t* words, std::size_t count) {
  const __m256i lut = _mm256_setr_epi8(0, 1, 1, 2, 1, 2, 2, 3, 1, 2, 2, 3, 2,
                                       3, 3, 4, 0, 1, 1, 2, 1, 2, 2, 3, 1, 2,
                                       2, 3, 2, 3, 3, 4);
  const __m256i low = _mm256_set1_epi8(0x0f);
  __m256i total = _mm256_setzero_si256();
  std::size_t i = 0;
  for (; i + 4 <= count; i += 4) {
    const __m256i v =
        _mm256_loadu_si256(reinterpret_cast<const __m256i*>(words + i));
    const __m256i lo = _mm256_and_si256(v, low);
    const __m256i hi = _mm256_and_si256(_mm256_srli_epi16(v, 4), low);
    const __m256i bytes = _mm256_add_epi8(_mm256_shuffle_epi8(lut, lo),
                                          _mm256_shuffle_epi8(lut, hi));
    total = _mm256_add_epi64(total,
                             _mm256_sad_epu8(bytes, _mm256_setzero_si256()));
  }
  alignas(32) std::uint64_t lanes[4];
  _mm256_store_si256(reinterpret_cast<__m256i*>(lanes), total);
  std::uint64_t sum = lanes[0] + lanes[1] + lanes[2] + lanes[3];
  for (; i < count; ++i) sum += std::popcount(words[i]);
  return sum;
}

double MaskedSumAvx2(const std::uint64_t* mask, const double* weights,
                     std::size_t count) {
  // Lane j of `acc` sees bits 4q + j, matching the scalar lane layout.
  const __m256i select = _mm256_setr_epi64x(1, 2, 4, 8);
  __m256d acc = _mm256_setzero_pd();
  for (std::size_t w = 0; w < count; ++w) {
    const std::uint64_t bits = mask[w];
    if (bits == 0) continue;
    const double* base = weights + 64 * w;
    for (int q = 0; q < 16; ++q) {
      const long long nibble = static_cast<long long>((bits >> (4 * q)) & 0xf);
      const __m256i spread = _mm256_and_si256(_mm256_set1_epi64x(nibble),
                                              select);
      const __m256d keep =
          _mm256_castsi256_pd(_mm256_cmpeq_epi64(spread, select));
      const __m256d v = _mm256_loadu_pd(base + 4 * q);
      acc = _mm256_add_pd(acc, _mm256_and_pd(v, keep));
    }
  }
  alignas(32) double lane[4];
  _mm256_store_pd(lane, acc);
  return (lane[0] + lane[1]) + (lane[2] + lane[3]);
}

}  // namespace

const KernelTable& Avx2KernelTable() {
  static const KernelTable table = {"avx2", &OrAccumulateAvx2, &PopcountAvx2,
                                    &MaskedSumAvx2};
  return table;
}

}  // namespace rsmax
