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

// Bell pairs measured in the computational (Z) or Hadamard (X) basis.
//
// Only |Psi00> = (|00> + |11>)/sqrt(2) and Z/X measurements ever occur, so a
// lazily-collapsed classical model is exact:
//   - the first half measured on a pair yields a uniform bit;
//   - the partner measured in the same basis repeats it;
//   - the partner measured in the other basis yields a fresh uniform bit.
// StateVector2Q is the Born-rule oracle used to check that claim.

#ifndef QBSC_QSIM_H
#define QBSC_QSIM_H

#include <array>
#include <complex>
#include <cstdint>
#include <variant>
#include <vector>

#include "qbsc/bits.h"
#include "qbsc/rng.h"

namespace qbsc {

/// Z = {|0>,|1>}, X = {|+>,|->}. The numeric values are the canonical bit
/// encoding used whenever a basis enters an oracle query.
enum class Basis : std::uint8_t { Z = 0, X = 1 };

enum class Side : std::uint8_t { A = 0, B = 1 };

using BasisString = std::vector<Basis>;

/// Outcome string O; one bit per pair.
using OutcomeString = Bits;

Bits encode_bases(const BasisString &bases);
BasisString decode_bases(const Bits &bits);
BasisString random_bases(std::size_t n, Rng &rng);
char basis_char(Basis basis);
std::string bases_to_string(const BasisString &bases);

struct Unmeasured {
    bool operator==(const Unmeasured &) const = default;
};
struct HalfMeasured {
    Side side;
    Basis basis;
    bool outcome;
    bool operator==(const HalfMeasured &) const = default;
};
struct FullyMeasured {
    Basis basis_a;
    bool outcome_a;
    Basis basis_b;
    bool outcome_b;
    bool operator==(const FullyMeasured &) const = default;
};
using PairState = std::variant<Unmeasured, HalfMeasured, FullyMeasured>;

/// n Bell pairs with one seeded generator. Draws happen only when a
/// measurement needs a fresh bit, in measurement order.
class EprRegister {
   public:
    EprRegister(std::size_t n, std::uint64_t seed);

    std::size_t size() const { return pairs_.size(); }
    const PairState &state(std::size_t index) const;
    bool is_measured(Side side, std::size_t index) const;
    /// Pairs with neither half measured.
    std::size_t unmeasured_pairs() const;

    /// Throws InvalidParameter on a bad index, ProtocolViolation when that
    /// half was already measured.
    bool measure(Side side, std::size_t index, Basis basis);

   private:
    std::vector<PairState> pairs_;
    Rng rng_;
};

/// One party's view of a register: it can only measure its own side.
class EprHalf {
   public:
    EprHalf(EprRegister &reg, Side side) : reg_(&reg), side_(side) {}

    Side side() const { return side_; }
    std::size_t size() const { return reg_->size(); }
    bool is_measured(std::size_t index) const { return reg_->is_measured(side_, index); }
    bool measure(std::size_t index, Basis basis) { return reg_->measure(side_, index, basis); }
    /// Measures pair i in bases[i] for every i; bases.size() must equal size().
    OutcomeString measure_all(const BasisString &bases);

   private:
    EprRegister *reg_;
    Side side_;
};

EprRegister make_epr_register(std::size_t n, std::uint64_t seed);

/// Born-rule probabilities indexed by 2 * bitA + bitB. For X the bit 0 is |+>.
using JointDistribution = std::array<double, 4>;

class StateVector2Q {
   public:
    using Amplitudes = std::array<std::complex<double>, 4>;

    /// Amplitudes in |00>,|01>,|10>,|11> order; must be normalised to 1e-12.
    explicit StateVector2Q(const Amplitudes &amplitudes);
    static StateVector2Q bell();

    const Amplitudes &amplitudes() const { return amplitudes_; }
    double probability(Basis basis_a, bool bit_a, Basis basis_b, bool bit_b) const;
    JointDistribution joint_distribution(Basis basis_a, Basis basis_b) const;

   private:
    Amplitudes amplitudes_;
};

JointDistribution sv_joint_distribution(Basis basis_a, Basis basis_b);

/// Consumes the first k pairs with both halves unmeasured, measuring both in a
/// shared basis drawn from basis_rng, and returns the disagreement fraction.
double estimate_correlation(EprRegister &reg, std::size_t k, Rng &basis_rng);

/// Same estimator over two handles that may address different registers (a
/// substituted source). Pair i is used when both handles see it unmeasured.
double estimate_correlation(EprHalf alice, EprHalf bob, std::size_t k, Rng &basis_rng);

}  // namespace qbsc

#endif  // QBSC_QSIM_H
