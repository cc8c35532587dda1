// Copyright 2026 The coremwm Authors
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

// Built with -mavx2; only reached through the runtime dispatch in
// bernoulli.cc.

#include <immintrin.h>

#include <algorithm>
#include <stdexcept>

#include "coremwm/kernels/bernoulli.h"

namespace coremwm::kernels {

namespace {

inline __m256i fmix32_x8(__m256i x) {
  x = _mm256_xor_si256(x, _mm256_srli_epi32(x, 16));
  x = _mm256_mullo_epi32(x, _mm256_set1_epi32(static_cast<int>(0x85ebca6bU)));
  x = _mm256_xor_si256(x, _mm256_srli_epi32(x, 13));
  x = _mm256_mullo_epi32(x, _mm256_set1_epi32(static_cast<int>(0xc2b2ae35U)));
  x = _mm256_xor_si256(x, _mm256_srli_epi32(x, 16));
  return x;
}

}  // namespace

void bernoulli_masks_avx2(std::span<const std::uint64_t> keys,
                          std::uint32_t width, std::uint64_t threshold,
                          std::span<std::uint64_t> masks) {
  const std::size_t words = words_per_row(width);
  if (masks.size() != keys.size() * words) {
    throw std::invalid_argument("bernoulli_masks: mask buffer size mismatch");
  }
  if (threshold > (std::uint64_t{1} << 32)) {
    throw std::invalid_argument("bernoulli_masks: threshold above 2^32");
  }
  std::fill(masks.begin(), masks.end(), 0);
  if (threshold == 0 || width == 0) return;

  const bool all = threshold == (std::uint64_t{1} << 32);
  // Unsigned x < t via signed compare after flipping the sign bit.
  const __m256i sign = _mm256_set1_epi32(static_cast<int>(0x80000000U));
  const __m256i thr = _mm256_xor_si256(
      _mm256_set1_epi32(static_cast<int>(static_cast<std::uint32_t>(threshold))),
      sign);
  const __m256i lane = _mm256_setr_epi32(1, 2, 3, 4, 5, 6, 7, 8);
  const __m256i stride = _mm256_set1_epi32(static_cast<int>(kSlotStride));

  for (std::size_t r = 0; r < keys.size(); ++r) {
    std::uint64_t* row = masks.data() + r * words;
    if (all) {
      for (std::uint32_t j = 0; j < width; ++j) {
        row[j / 64] |= std::uint64_t{1} << (j % 64);
      }
      continue;
    }
    const __m256i lo =
        _mm256_set1_epi32(static_cast<int>(static_cast<std::uint32_t>(keys[r])));
    const __m256i hi = _mm256_set1_epi32(
        static_cast<int>(static_cast<std::uint32_t>(keys[r] >> 32)));
    for (std::uint32_t base = 0; base < width; base += 8) {
      const __m256i j1 =
          _mm256_add_epi32(lane, _mm256_set1_epi32(static_cast<int>(base)));
      __m256i x = _mm256_xor_si256(lo, _mm256_mullo_epi32(j1, stride));
      x = fmix32_x8(x);
      x = _mm256_xor_si256(x, hi);
      x = fmix32_x8(x);
      const __m256i lt = _mm256_cmpgt_epi32(thr, _mm256_xor_si256(x, sign));
      auto bits = static_cast<std::uint64_t>(
          _mm256_movemask_ps(_mm256_castsi256_ps(lt)));
      const std::uint32_t valid = std::min<std::uint32_t>(8, width - base);
      bits &= (std::uint64_t{1} << valid) - 1;
      // base is a multiple of 8, so the 8 bits never straddle a word.
      row[base / 64] |= bits << (base % 64);
    }
  }
}

}  // namespace coremwm::kernels
