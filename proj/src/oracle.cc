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

#include "qbsc/oracle.h"

#include <algorithm>

#include "qbsc/errors.h"

namespace qbsc {

OracleTable::OracleTable(std::size_t range_len, std::uint64_t seed) : range_len_(range_len), rng_(seed) {
    if (range_len == 0) {
        throw InvalidParameter("OracleTable: range length must be positive");
    }
}

Bits OracleTable::query(const Bits &q) {
    ++query_count_;
    auto key = q.to_string();
    if (auto it = index_.find(key); it != index_.end()) {
        return entries_[it->second].response;
    }
    Bits h = Bits::random(range_len_, rng_);
    index_.emplace(std::move(key), entries_.size());
    entries_.push_back({q, h, false});
    return h;
}

ProgramResult OracleTable::program(const Bits &q, const Bits &h) {
    if (h.size() != range_len_) {
        throw InvalidParameter("OracleTable::program: response has " + std::to_string(h.size()) +
                               " bits, range is " + std::to_string(range_len_));
    }
    auto key = q.to_string();
    if (index_.contains(key)) {
        return ProgramResult::AlreadyDefined;
    }
    index_.emplace(std::move(key), entries_.size());
    entries_.push_back({q, h, true});
    return ProgramResult::Success;
}

std::optional<Bits> OracleTable::lookup(const Bits &q) const {
    if (auto it = index_.find(q.to_string()); it != index_.end()) {
        return entries_[it->second].response;
    }
    return std::nullopt;
}

std::size_t OracleTable::programmed_count() const {
    return static_cast<std::size_t>(
        std::count_if(entries_.begin(), entries_.end(), [](const OracleEntry &e) { return e.programmed; }));
}

Bits BudgetedOracle::query(const Bits &q) {
    if (used_ >= budget_) {
        throw BudgetExceeded(name_ + ": query budget of " + std::to_string(budget_) + " exhausted");
    }
    ++used_;
    return inner_->query(q);
}

}  // namespace qbsc
