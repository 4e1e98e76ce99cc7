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

// Reference values computed without the library, for tests to compare
// against. Each one is a direct enumeration or product, written
// independently of the code under test.

#ifndef QBSC_TESTS_ORACLES_H
#define QBSC_TESTS_ORACLES_H

#include <array>
#include <cmath>
#include <cstddef>
#include <cstdint>

namespace qbsc_test {

/// Joint outcome distribution of (|00> + |11>)/sqrt(2) when side A is
/// measured in basis `a` and side B in basis `b` (0 = Z, 1 = X). Index is
/// 2 * bit_a + bit_b. Computed by projecting the four real amplitudes.
inline std::array<double, 4> bell_joint(int a, int b) {
    const double r = 1.0 / std::sqrt(2.0);
    // Basis vectors for outcome 0 and 1; X uses |+> for 0 and |-> for 1.
    const double z[2][2] = {{1, 0}, {0, 1}};
    const double x[2][2] = {{r, r}, {r, -r}};
    const auto &ea = a == 0 ? z : x;
    const auto &eb = b == 0 ? z : x;
    const double psi[4] = {r, 0, 0, r};  // |00>, |01>, |10>, |11>
    std::array<double, 4> out{};
    for (int oa = 0; oa < 2; ++oa) {
        for (int ob = 0; ob < 2; ++ob) {
            double amp = 0;
            for (int i = 0; i < 2; ++i) {
                for (int j = 0; j < 2; ++j) amp += ea[oa][i] * eb[ob][j] * psi[2 * i + j];
            }
            out[2 * oa + ob] = amp * amp;
        }
    }
    return out;
}

/// P(some repeated response among q queries to a uniform oracle with
/// 2^bits outputs).
inline double birthday_collision(std::size_t q, std::size_t bits) {
    const double range = std::ldexp(1.0, static_cast<int>(bits));
    double none = 1.0;
    for (std::size_t i = 0; i < q; ++i) none *= 1.0 - static_cast<double>(i) / range;
    return 1.0 - none;
}

/// P(at least one of q fresh uniform n-bit responses equals a fixed value).
inline double any_hit(std::size_t n, std::size_t q) {
    const double p = std::ldexp(1.0, -static_cast<int>(n));
    double miss = 1.0;
    for (std::size_t i = 0; i < q; ++i) miss *= 1.0 - p;
    return 1.0 - miss;
}

/// The query-bounded concealing guesser: it scans q of the 2^n basis strings
/// in random order and stops at the first whose H2 value equals c2. The true
/// b sits at a uniform position j; each other string is a false hit with
/// probability 2^-n. Success after finding the true b is 1 (given an H1
/// query); any other branch is a blind guess at 2n bits.
inline double concealing_guess_rate(std::size_t n, std::size_t q, bool has_h1_query) {
    const double domain = std::ldexp(1.0, static_cast<int>(n));
    const double p = 1.0 / domain;
    const double blind = p * p;
    const std::size_t scanned = static_cast<std::size_t>(std::fmin(static_cast<double>(q), domain));
    double first_true = 0;
    double no_false_hit_yet = 1.0;
    for (std::size_t j = 1; j <= scanned; ++j) {
        first_true += (1.0 / domain) * no_false_hit_yet;
        no_false_hit_yet *= 1.0 - p;
    }
    if (!has_h1_query) first_true = 0;
    return first_true + (1.0 - first_true) * blind;
}

/// Bob's output under an unauthenticated substituted source: right only if
/// his independent outcomes equal Alice's (2^-n) or the two H1 values
/// happen to coincide (2^-2n).
inline double mitm_bob_match(std::size_t n) {
    const double p = std::ldexp(1.0, -static_cast<int>(n));
    return p + (1.0 - p) * p * p;
}

/// Alice forging to a second preimage with k flipped bases predicts Bob's k
/// uniform outcomes. Enumerates the 2^k completions; exactly one matches her
/// guess, and a mismatch still succeeds on an H1 coincidence (2^-2n).
inline double flipped_forgery(std::size_t k, std::size_t n) {
    const std::uint64_t completions = std::uint64_t{1} << k;
    std::uint64_t matching = 0;
    const std::uint64_t guess = completions - 1;
    for (std::uint64_t c = 0; c < completions; ++c) matching += c == guess;
    const double hit = static_cast<double>(matching) / static_cast<double>(completions);
    const double coincide = std::ldexp(1.0, -static_cast<int>(2 * n));
    return hit + (1.0 - hit) * coincide;
}

}  // namespace qbsc_test

#endif  // QBSC_TESTS_ORACLES_H
