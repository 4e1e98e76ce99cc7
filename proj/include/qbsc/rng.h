// Copyright 2026 The qbsc Authors
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

#ifndef QBSC_RNG_H
#define QBSC_RNG_H

#include <cstdint>
#include <random>
#include <span>

namespace qbsc {

/// Named sub-streams of a session seed. Every component that draws randomness
/// gets its own stream so that, e.g., swapping an oracle implementation never
/// shifts the draws seen by the EPR source.
enum class Stream : std::uint64_t {
    Epr = 1,
    H1 = 2,
    H2 = 3,
    Alice = 4,
    Bob = 5,
    Simulator = 6,
    Adversary = 7,
    Environment = 8,
    Estimation = 9,
    Trial = 10,
};

/// SplitMix64 finalizer over (seed, stream). Deterministic on every platform.
std::uint64_t derive_seed(std::uint64_t seed, std::uint64_t stream);
inline std::uint64_t derive_seed(std::uint64_t seed, Stream stream) {
    return derive_seed(seed, static_cast<std::uint64_t>(stream));
}

/// Seeded generator. Only the raw mt19937_64 output is consumed (never the
/// implementation-defined std distributions), so draw sequences are identical
/// across standard libraries.
class Rng {
   public:
    explicit Rng(std::uint64_t seed) : engine_(seed) {}

    std::uint64_t next() { return engine_(); }
    bool bit() { return (engine_() >> 63) != 0; }

    /// Uniform integer in [0, bound). bound must be positive.
    std::uint64_t below(std::uint64_t bound);

    /// In-place Fisher-Yates shuffle driven by below().
    template <class T>
    void shuffle(std::span<T> items) {
        for (std::size_t i = items.size(); i > 1; --i) {
            std::size_t j = static_cast<std::size_t>(below(i));
            std::swap(items[i - 1], items[j]);
        }
    }

   private:
    std::mt19937_64 engine_;
};

}  // namespace qbsc

#endif  // QBSC_RNG_H
