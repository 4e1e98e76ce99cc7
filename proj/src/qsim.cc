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

#include "qbsc/qsim.h"

#include <cmath>
#include <string>

#include "qbsc/errors.h"

namespace qbsc {

Bits encode_bases(const BasisString &bases) {
    Bits out(bases.size());
    for (std::size_t i = 0; i < bases.size(); ++i) {
        out.set(i, bases[i] == Basis::X);
    }
    return out;
}

BasisString decode_bases(const Bits &bits) {
    BasisString out(bits.size());
    for (std::size_t i = 0; i < bits.size(); ++i) {
        out[i] = bits[i] ? Basis::X : Basis::Z;
    }
    return out;
}

BasisString random_bases(std::size_t n, Rng &rng) {
    BasisString out(n);
    for (auto &b : out) {
        b = rng.bit() ? Basis::X : Basis::Z;
    }
    return out;
}

char basis_char(Basis basis) { return basis == Basis::Z ? 'Z' : 'X'; }

std::string bases_to_string(const BasisString &bases) {
    std::string s;
    for (auto b : bases) s.push_back(basis_char(b));
    return s;
}

EprRegister::EprRegister(std::size_t n, std::uint64_t seed) : pairs_(n, Unmeasured{}), rng_(seed) {
    if (n == 0) {
        throw InvalidParameter("EprRegister: n must be at least 1");
    }
}

const PairState &EprRegister::state(std::size_t index) const {
    if (index >= pairs_.size()) {
        throw InvalidParameter("EprRegister: pair index " + std::to_string(index) + " out of range");
    }
    return pairs_[index];
}

bool EprRegister::is_measured(Side side, std::size_t index) const {
    const PairState &s = state(index);
    if (std::holds_alternative<FullyMeasured>(s)) return true;
    if (const auto *half = std::get_if<HalfMeasured>(&s)) return half->side == side;
    return false;
}

std::size_t EprRegister::unmeasured_pairs() const {
    std::size_t count = 0;
    for (const auto &p : pairs_) {
        if (std::holds_alternative<Unmeasured>(p)) ++count;
    }
    return count;
}

bool EprRegister::measure(Side side, std::size_t index, Basis basis) {
    if (is_measured(side, index)) {
        throw ProtocolViolation("EprRegister: half " + std::to_string(index) + " already measured");
    }
    PairState &s = pairs_[index];
    if (std::holds_alternative<Unmeasured>(s)) {
        bool outcome = rng_.bit();
        s = HalfMeasured{side, basis, outcome};
        return outcome;
    }
    const HalfMeasured partner = std::get<HalfMeasured>(s);
    bool outcome = partner.basis == basis ? partner.outcome : rng_.bit();
    if (side == Side::A) {
        s = FullyMeasured{basis, outcome, partner.basis, partner.outcome};
    } else {
        s = FullyMeasured{partner.basis, partner.outcome, basis, outcome};
    }
    return outcome;
}

OutcomeString EprHalf::measure_all(const BasisString &bases) {
    if (bases.size() != size()) {
        throw InvalidParameter("EprHalf::measure_all: expected " + std::to_string(size()) +
                               " bases, got " + std::to_string(bases.size()));
    }
    OutcomeString out(bases.size());
    for (std::size_t i = 0; i < bases.size(); ++i) {
        out.set(i, measure(i, bases[i]));
    }
    return out;
}

EprRegister make_epr_register(std::size_t n, std::uint64_t seed) { return EprRegister(n, seed); }

namespace {

using Complex = std::complex<double>;
using Vec2 = std::array<Complex, 2>;

Vec2 basis_vector(Basis basis, bool bit) {
    const double r = 1.0 / std::sqrt(2.0);
    if (basis == Basis::Z) {
        return bit ? Vec2{0.0, 1.0} : Vec2{1.0, 0.0};
    }
    return bit ? Vec2{r, -r} : Vec2{r, r};
}

}  // namespace

StateVector2Q::StateVector2Q(const Amplitudes &amplitudes) : amplitudes_(amplitudes) {
    double norm = 0.0;
    for (const auto &a : amplitudes_) norm += std::norm(a);
    if (std::abs(norm - 1.0) > 1e-12) {
        throw InvalidParameter("StateVector2Q: amplitudes not normalised");
    }
}

StateVector2Q StateVector2Q::bell() {
    const double r = 1.0 / std::sqrt(2.0);
    return StateVector2Q(Amplitudes{r, 0.0, 0.0, r});
}

double StateVector2Q::probability(Basis basis_a, bool bit_a, Basis basis_b, bool bit_b) const {
    // <e_a (x) e_b | psi>, with real basis vectors so conjugation is a no-op
    // on the bra components.
    const Vec2 ea = basis_vector(basis_a, bit_a);
    const Vec2 eb = basis_vector(basis_b, bit_b);
    Complex overlap = 0.0;
    for (int i = 0; i < 2; ++i) {
        for (int j = 0; j < 2; ++j) {
            overlap += std::conj(ea[i]) * std::conj(eb[j]) * amplitudes_[2 * i + j];
        }
    }
    return std::norm(overlap);
}

JointDistribution StateVector2Q::joint_distribution(Basis basis_a, Basis basis_b) const {
    JointDistribution table{};
    for (int a = 0; a < 2; ++a) {
        for (int b = 0; b < 2; ++b) {
            table[2 * a + b] = probability(basis_a, a != 0, basis_b, b != 0);
        }
    }
    return table;
}

JointDistribution sv_joint_distribution(Basis basis_a, Basis basis_b) {
    return StateVector2Q::bell().joint_distribution(basis_a, basis_b);
}

double estimate_correlation(EprRegister &reg, std::size_t k, Rng &basis_rng) {
    return estimate_correlation(EprHalf(reg, Side::A), EprHalf(reg, Side::B), k, basis_rng);
}

double estimate_correlation(EprHalf alice, EprHalf bob, std::size_t k, Rng &basis_rng) {
    if (k == 0) return 0.0;
    if (alice.size() != bob.size()) {
        throw InvalidParameter("estimate_correlation: handles address registers of different sizes");
    }
    std::vector<std::size_t> usable;
    for (std::size_t i = 0; i < alice.size() && usable.size() < k; ++i) {
        if (!alice.is_measured(i) && !bob.is_measured(i)) usable.push_back(i);
    }
    if (usable.size() < k) {
        throw InvalidParameter("estimate_correlation: only " + std::to_string(usable.size()) +
                               " unmeasured pairs, " + std::to_string(k) + " requested");
    }
    std::size_t disagreements = 0;
    for (std::size_t i : usable) {
        Basis basis = basis_rng.bit() ? Basis::X : Basis::Z;
        bool a = alice.measure(i, basis);
        bool b = bob.measure(i, basis);
        if (a != b) ++disagreements;
    }
    return static_cast<double>(disagreements) / static_cast<double>(k);
}

}  // namespace qbsc
