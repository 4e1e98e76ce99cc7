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

#ifndef QBSC_ORACLE_H
#define QBSC_ORACLE_H

#include <cstdint>
#include <limits>
#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

#include "qbsc/bits.h"
#include "qbsc/rng.h"

namespace qbsc {

/// Classical query interface shared by random oracles, PUF devices and the
/// views handed to parties. There is deliberately no superposition query.
/// Protocol machines only ever see this interface, so they cannot program.
class Oracle {
   public:
    virtual ~Oracle() = default;
    virtual Bits query(const Bits &q) = 0;
    virtual std::size_t range_len() const = 0;
};

struct OracleEntry {
    Bits query;
    Bits response;
    bool programmed = false;
};

enum class ProgramResult { Success, AlreadyDefined };

/// The lazily sampled list L of (query, response) pairs. Any query length is
/// accepted; responses are exactly range_len bits.
class OracleTable {
   public:
    OracleTable(std::size_t range_len, std::uint64_t seed);

    Bits query(const Bits &q);
    /// Write-once: an existing entry (queried or programmed) is never replaced.
    ProgramResult program(const Bits &q, const Bits &h);
    /// Side-effect free inspection.
    std::optional<Bits> lookup(const Bits &q) const;

    std::size_t range_len() const { return range_len_; }
    std::size_t query_count() const { return query_count_; }
    std::size_t programmed_count() const;
    const std::vector<OracleEntry> &entries() const { return entries_; }

   private:
    std::size_t range_len_;
    Rng rng_;
    std::vector<OracleEntry> entries_;
    std::unordered_map<std::string, std::size_t> index_;
    std::size_t query_count_ = 0;
};

/// An F_RO instance. Holding the concrete type (rather than Oracle&) is what
/// grants access to the table, and hence to programming.
class RandomOracle final : public Oracle {
   public:
    RandomOracle(std::size_t range_len, std::uint64_t seed) : table_(range_len, seed) {}

    Bits query(const Bits &q) override { return table_.query(q); }
    std::size_t range_len() const override { return table_.range_len(); }

    OracleTable &table() { return table_; }
    const OracleTable &table() const { return table_; }

   private:
    OracleTable table_;
};

struct QueryBudget {
    static constexpr std::size_t kUnlimited = std::numeric_limits<std::size_t>::max();

    std::size_t h1 = kUnlimited;
    std::size_t h2 = kUnlimited;

    static QueryBudget unlimited() { return {}; }
    bool operator==(const QueryBudget &) const = default;
};

/// A counting view that throws BudgetExceeded once `budget` queries are spent.
class BudgetedOracle final : public Oracle {
   public:
    BudgetedOracle(Oracle &inner, std::size_t budget, std::string name = "oracle")
        : inner_(&inner), budget_(budget), name_(std::move(name)) {}

    Bits query(const Bits &q) override;
    std::size_t range_len() const override { return inner_->range_len(); }

    std::size_t used() const { return used_; }
    std::size_t remaining() const { return budget_ - used_; }

   private:
    Oracle *inner_;
    std::size_t budget_;
    std::size_t used_ = 0;
    std::string name_;
};

}  // namespace qbsc

#endif  // QBSC_ORACLE_H
