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

#ifndef QBSC_TRANSCRIPT_H
#define QBSC_TRANSCRIPT_H

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "qbsc/bits.h"
#include "qbsc/oracle.h"

namespace qbsc {

enum class Channel { Classical, Quantum, Oracle };

std::string_view channel_name(Channel channel);
/// Throws InvalidParameter for unknown names.
Channel parse_channel(std::string_view name);

struct Event {
    std::uint64_t tick = 0;
    std::string direction;  // "<from>-><to>", e.g. "alice->bob"
    Channel channel = Channel::Classical;
    std::string kind;
    Bytes payload;

    bool operator==(const Event &) const = default;
};

/// Append-only record of one session. The tick of each event is its position,
/// so the event order is the session's total order.
class Transcript {
   public:
    void record(std::string direction, Channel channel, std::string kind, Bytes payload = {});

    /// Rebuilds a transcript from parsed events; ticks must run 0,1,2,...
    static Transcript from_events(std::vector<Event> events);

    const std::vector<Event> &events() const { return events_; }
    std::size_t size() const { return events_.size(); }
    bool empty() const { return events_.empty(); }
    const Event &operator[](std::size_t i) const { return events_[i]; }

    bool operator==(const Transcript &) const = default;

   private:
    std::vector<Event> events_;
};

/// Oracle decorator that records each query (not the response) as an event.
class RecordingOracle final : public Oracle {
   public:
    RecordingOracle(Oracle &inner, Transcript &transcript, std::string direction)
        : inner_(&inner), transcript_(&transcript), direction_(std::move(direction)) {}

    Bits query(const Bits &q) override;
    std::size_t range_len() const override { return inner_->range_len(); }

   private:
    Oracle *inner_;
    Transcript *transcript_;
    std::string direction_;
};

}  // namespace qbsc

#endif  // QBSC_TRANSCRIPT_H
