// Copyright 2026 The wpipol Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef WPIPOL_RNG_H
#define WPIPOL_RNG_H

#include <cstdint>
#include <random>

namespace wpipol {

/// One round of the SplitMix64 output function.
constexpr std::uint64_t splitmix64(std::uint64_t x) {
    x += 0x9E3779B97F4A7C15ull;
    x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ull;
    x = (x ^ (x >> 27)) * 0x94D049BB133111EBull;
    return x ^ (x >> 31);
}

/// Derives the seed of an independent sub-stream. Streams with different
/// (seed, stream) pairs do not overlap in practice, and a stream's output does
/// not depend on which other streams were consumed, or in what order.
constexpr std::uint64_t derive_stream_seed(std::uint64_t seed, std::uint64_t stream) {
    return splitmix64(splitmix64(seed) ^ splitmix64(stream ^ 0xD1B54A32D192ED03ull));
}

using Engine = std::mt19937_64;

inline Engine make_engine(std::uint64_t seed, std::uint64_t stream = 0) {
    return Engine{derive_stream_seed(seed, stream)};
}

}  // namespace wpipol

#endif
