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

#include "coremwm/kernels/bernoulli.h"

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <stdexcept>
#include <string>

namespace coremwm::kernels {

namespace {

constexpr std::uint64_t kFullThreshold = std::uint64_t{1} << 32;

void check_shapes(std::span<const std::uint64_t> keys, std::uint32_t width,
                  std::uint64_t threshold, std::span<std::uint64_t> masks) {
  if (masks.size() != keys.size() * words_per_row(width)) {
    throw std::invalid_argument("bernoulli_masks: mask buffer has " +
                                std::to_string(masks.size()) + " words, need " +
                                std::to_string(keys.size() *
                                               words_per_row(width)));
  }
  if (threshold > kFullThreshold) {
    throw std::invalid_argument("bernoulli_masks: threshold above 2^32");
  }
}

}  // namespace

std::string_view isa_name(Isa isa) {
  switch (isa) {
    case Isa::kScalar:
      return "scalar";
    case Isa::kAvx2:
      return "avx2";
  }
  return "unknown";
}

bool isa_available(Isa isa) {
  switch (isa) {
    case Isa::kScalar:
      return true;
    case Isa::kAvx2:
#if defined(COREMWM_HAVE_AVX2_KERNELS) && \
    (defined(__x86_64__) || defined(__i386__))
      return __builtin_cpu_supports("avx2");
#else
      return false;
#endif
  }
  return false;
}

Isa active_isa() {
  static const Isa isa = [] {
    const char* env = std::getenv("COREMWM_SIMD");
    if (env != nullptr && std::string_view(env) == "scalar") {
      return Isa::kScalar;
    }
    return isa_available(Isa::kAvx2) ? Isa::kAvx2 : Isa::kScalar;
  }();
  return isa;
}

std::uint64_t probability_threshold(double p) {
  if (!(p >= 0.0) || p > 1.0) {
    throw std::invalid_argument("probability outside [0,1]");
  }
  if (p == 1.0) return kFullThreshold;
  return std::min<std::uint64_t>(
      kFullThreshold - 1,
      static_cast<std::uint64_t>(std::floor(std::ldexp(p, 32))));
}

void bernoulli_masks_scalar(std::span<const std::uint64_t> keys,
                            std::uint32_t width, std::uint64_t threshold,
                            std::span<std::uint64_t> masks) {
  check_shapes(keys, width, threshold, masks);
  const std::size_t words = words_per_row(width);
  std::fill(masks.begin(), masks.end(), 0);
  for (std::size_t r = 0; r < keys.size(); ++r) {
    std::uint64_t* row = masks.data() + r * words;
    for (std::uint32_t j = 0; j < width; ++j) {
      if (slot_draw(keys[r], j) < threshold) {
        row[j / 64] |= std::uint64_t{1} << (j % 64);
      }
    }
  }
}

#if !defined(COREMWM_HAVE_AVX2_KERNELS)
void bernoulli_masks_avx2(std::span<const std::uint64_t> keys,
                          std::uint32_t width, std::uint64_t threshold,
                          std::span<std::uint64_t> masks) {
  bernoulli_masks_scalar(keys, width, threshold, masks);
}
#endif

void bernoulli_masks(Isa isa, std::span<const std::uint64_t> keys,
                     std::uint32_t width, std::uint64_t threshold,
                     std::span<std::uint64_t> masks) {
  if (isa == Isa::kAvx2 && isa_available(Isa::kAvx2)) {
    bernoulli_masks_avx2(keys, width, threshold, masks);
  } else {
    bernoulli_masks_scalar(keys, width, threshold, masks);
  }
}

}  // namespace coremwm::kernels
