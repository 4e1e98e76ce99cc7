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

#ifndef QBSC_ERRORS_H
#define QBSC_ERRORS_H

#include <stdexcept>
#include <string>

namespace qbsc {

/// A caller passed an argument outside the operation's domain.
struct InvalidParameter : std::invalid_argument {
    explicit InvalidParameter(const std::string &what) : std::invalid_argument(what) {}
};

/// A party or resource was driven out of its lifecycle order.
struct ProtocolViolation : std::logic_error {
    explicit ProtocolViolation(const std::string &what) : std::logic_error(what) {}
};

/// An oracle view refused a query beyond its budget.
struct BudgetExceeded : std::runtime_error {
    explicit BudgetExceeded(const std::string &what) : std::runtime_error(what) {}
};

}  // namespace qbsc

#endif  // QBSC_ERRORS_H
