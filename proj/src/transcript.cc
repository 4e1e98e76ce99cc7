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

#include "qbsc/transcript.h"

#include "qbsc/errors.h"

namespace qbsc {

std::string_view channel_name(Channel channel) {
    switch (channel) {
        case Channel::Classical:
            return "classical";
        case Channel::Quantum:
            return "quantum";
        case Channel::Oracle:
            return "oracle";
    }
    return "unknown";
}

Channel parse_channel(std::string_view name) {
    if (name == "classical") return Channel::Classical;
    if (name == "quantum") return Channel::Quantum;
    if (name == "oracle") return Channel::Oracle;
    throw InvalidParameter("unknown channel '" + std::string(name) + "'");
}

void Transcript::record(std::string direction, Channel channel, std::string kind, Bytes payload) {
    events_.push_back(Event{events_.size(), std::move(direction), channel, std::move(kind), std::move(payload)});
}

Transcript Transcript::from_events(std::vector<Event> events) {
    for (std::size_t i = 0; i < events.size(); ++i) {
        if (events[i].tick != i) {
            throw InvalidParameter("transcript event " + std::to_string(i) + " has tick " +
                                   std::to_string(events[i].tick));
        }
    }
    Transcript t;
    t.events_ = std::move(events);
    return t;
}

Bits RecordingOracle::query(const Bits &q) {
    transcript_->record(direction_, Channel::Oracle, "query", q.pack());
    return inner_->query(q);
}

}  // namespace qbsc
