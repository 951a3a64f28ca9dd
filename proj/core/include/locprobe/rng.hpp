// Copyright 2026 The locprobe Authors
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

#pragma once

#include <cstdint>
#include <initializer_list>
#include <limits>

namespace locprobe {

// Counter-based generator built on the SplitMix64 finalizer.
//
// The n-th output of a stream with key K is mix64(K + (n + 1) * kGamma), so any
// position of any stream can be computed without touching shared state. Streams
// for parallel work items are obtained with derive_key(), never by sharing one
// generator across threads.
class CounterRng {
 public:
  using result_type = std::uint64_t;

  static constexpr std::uint64_t kGamma = 0x9E3779B97F4A7C15ULL;

  constexpr explicit CounterRng(std::uint64_t key, std::uint64_t counter = 0) noexcept
      : key_(key), counter_(counter) {}

  static constexpr result_type min() noexcept { return 0; }
  static constexpr result_type max() noexcept {
    return std::numeric_limits<result_type>::max();
  }

  static constexpr std::uint64_t mix64(std::uint64_t z) noexcept {
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
    return z ^ (z >> 31);
  }

  // Random access into the stream; does not advance.
  constexpr result_type at(std::uint64_t n) const noexcept {
    return mix64(key_ + (n + 1) * kGamma);
  }

  constexpr result_type operator()() noexcept { return at(counter_++); }

  // Uniform double in [0, 1) with 53 bits of resolution.
  double uniform() noexcept {
    return static_cast<double>((*this)() >> 11) * 0x1.0p-53;
  }

  // Uniform integer in [0, n) for n well below 2^53.
  std::uint64_t below(std::uint64_t n) noexcept {
    return static_cast<std::uint64_t>(uniform() * static_cast<double>(n));
  }

  constexpr std::uint64_t key() const noexcept { return key_; }
  constexpr std::uint64_t counter() const noexcept { return counter_; }

 private:
  std::uint64_t key_;
  std::uint64_t counter_;
};

// Derives an independent stream key from a parent key and a path of indices.
// derive_key(k, {a, b}) == derive_key(derive_key(k, {a}), {b}).
constexpr std::uint64_t derive_key(std::uint64_t parent,
                                   std::initializer_list<std::uint64_t> path) noexcept {
  std::uint64_t k = parent;
  for (std::uint64_t index : path) {
    k = CounterRng::mix64(CounterRng::mix64(k ^ 0x632BE59BD9B4E019ULL) +
                          (index + 1) * CounterRng::kGamma);
  }
  return k;
}

}  // namespace locprobe
