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

// Keyed Bernoulli bitmasks: for each row key r and slot j < width, bit j of
// row r is set iff draw(r, j) < threshold, where draw is a stateless 32-bit
// hash. Used for edge->machine assignment and for block sampling in the
// instance generators. Every variant produces bit-identical output.

#ifndef COREMWM_KERNELS_BERNOULLI_H_
#define COREMWM_KERNELS_BERNOULLI_H_

#include <cstddef>
#include <cstdint>
#include <span>
#include <string_view>

namespace coremwm::kernels {

enum class Isa { kScalar, kAvx2 };

std::string_view isa_name(Isa isa);

// Best variant the CPU supports, unless COREMWM_SIMD=scalar is set.
Isa active_isa();
bool isa_available(Isa isa);

// splitmix64 finalizer.
constexpr std::uint64_t mix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

// Per-row key: depends only on (seed, row id).
constexpr std::uint64_t row_key(std::uint64_t seed, std::uint64_t row) {
  return mix64(seed ^ mix64(row));
}

constexpr std::uint32_t fmix32(std::uint32_t x) {
  x ^= x >> 16;
  x *= 0x85ebca6bU;
  x ^= x >> 13;
  x *= 0xc2b2ae35U;
  x ^= x >> 16;
  return x;
}

inline constexpr std::uint32_t kSlotStride = 0x9e3779b9U;

// Uniform 32-bit draw for slot j of a row.
constexpr std::uint32_t slot_draw(std::uint64_t key, std::uint32_t j) {
  const auto lo = static_cast<std::uint32_t>(key);
  const auto hi = static_cast<std::uint32_t>(key >> 32);
  return fmix32(fmix32(lo ^ ((j + 1U) * kSlotStride)) ^ hi);
}

// Threshold in [0, 2^32]; probability p maps to floor(p * 2^32), p = 1 to
// 2^32 (every slot set).
std::uint64_t probability_threshold(double p);

inline std::size_t words_per_row(std::uint32_t width) {
  return (static_cast<std::size_t>(width) + 63) / 64;
}

// masks.size() must be keys.size() * words_per_row(width). Bits at positions
// >= width are zero.
void bernoulli_masks_scalar(std::span<const std::uint64_t> keys,
                            std::uint32_t width, std::uint64_t threshold,
                            std::span<std::uint64_t> masks);
void bernoulli_masks_avx2(std::span<const std::uint64_t> keys,
                          std::uint32_t width, std::uint64_t threshold,
                          std::span<std::uint64_t> masks);

void bernoulli_masks(Isa isa, std::span<const std::uint64_t> keys,
                     std::uint32_t width, std::uint64_t threshold,
                     std::span<std::uint64_t> masks);

inline void bernoulli_masks(std::span<const std::uint64_t> keys,
                            std::uint32_t width, std::uint64_t threshold,
                            std::span<std::uint64_t> masks) {
  bernoulli_masks(active_isa(), keys, width, threshold, masks);
}

}  // namespace coremwm::kernels

#endif  // COREMWM_KERNELS_BERNOULLI_H_
