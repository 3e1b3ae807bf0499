// Copyright 2026 The qperc Authors
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

#include "qperc/encoder.h"

#include <numbers>
#include <stdexcept>
#include <string>

namespace qperc {

double alpha(Event e) {
    return e == Event::kBack ? std::numbers::pi : 0.0;
}

char event_char(Event e) {
    return e == Event::kBack ? 'B' : 'F';
}

EventSequence::EventSequence(std::vector<Event> events) : events_(std::move(events)) {
    if (events_.empty()) {
        throw std::invalid_argument("EventSequence: a window needs at least one event");
    }
    for (Event e : events_) {
        if (e != Event::kFront && e != Event::kBack) {
            throw std::invalid_argument("EventSequence: event outside {front, back}");
        }
        back_ += e == Event::kBack;
    }
}

EventSequence EventSequence::parse(std::string_view line) {
    std::vector<Event> events;
    events.reserve(line.size());
    for (size_t k = 0; k < line.size(); k++) {
        switch (line[k]) {
            case 'F':
                events.push_back(Event::kFront);
                break;
            case 'B':
                events.push_back(Event::kBack);
                break;
            default:
                throw std::invalid_argument("unexpected character at column " + std::to_string(k + 1) +
                                            " (expected 'F' or 'B')");
        }
    }
    return EventSequence(std::move(events));
}

std::string EventSequence::to_string() const {
    std::string out;
    out.reserve(events_.size());
    for (Event e : events_) {
        out.push_back(event_char(e));
    }
    return out;
}

double relative_frequency(const EventSequence &seq, Event event) {
    return static_cast<double>(seq.count(event)) / static_cast<double>(seq.tau());
}

void validate(const EncoderConfig &cfg) {
    if (cfg.tau == 0) {
        throw std::invalid_argument("EncoderConfig: tau must be >= 1");
    }
}

QubitState initial_state(const EncoderConfig &cfg) {
    return cfg.init == InitState::kPlus ? apply(hadamard(), QubitState::zero()) : QubitState::zero();
}

double event_angle(Event e, const EncoderConfig &cfg) {
    validate(cfg);
    double tau = static_cast<double>(cfg.tau);
    if (cfg.init == InitState::kZero) {
        return e == Event::kBack ? std::numbers::pi / tau : 0.0;
    }
    double half_step = std::numbers::pi / (2.0 * tau);
    return e == Event::kBack ? half_step : -half_step;
}

Unitary2 event_operator(Event e, const EncoderConfig &cfg) {
    if (cfg.init == InitState::kZero && e == Event::kFront) {
        validate(cfg);
        return Unitary2::identity();
    }
    return rotation_y(event_angle(e, cfg));
}

QubitState encode_batch(const EventSequence &seq, const EncoderConfig &cfg) {
    validate(cfg);
    if (seq.tau() != cfg.tau) {
        throw std::invalid_argument("encode_batch: sequence length " + std::to_string(seq.tau()) +
                                    " does not match configured tau " + std::to_string(cfg.tau));
    }
    double tau = static_cast<double>(cfg.tau);
    double back = static_cast<double>(seq.tau_back());
    double angle;
    if (cfg.init == InitState::kZero) {
        angle = std::numbers::pi * (back / tau);
    } else {
        angle = std::numbers::pi * (2.0 * back - tau) / (2.0 * tau);
    }
    return apply(rotation_y(angle), initial_state(cfg));
}

QubitState online_update(const QubitState &state, Event e, const EncoderConfig &cfg) {
    return apply(event_operator(e, cfg), state);
}

PerceptionSession::PerceptionSession(EncoderConfig cfg) : cfg_(cfg) {
    validate(cfg_);
    state_ = initial_state(cfg_);
}

const QubitState &PerceptionSession::push(Event e) {
    if (complete()) {
        throw std::logic_error("PerceptionSession: window already complete");
    }
    state_ = online_update(state_, e, cfg_);
    seen_++;
    return state_;
}

void PerceptionSession::reset() {
    state_ = initial_state(cfg_);
    seen_ = 0;
}

std::vector<EventSequence> parse_sequence_file(std::string_view text) {
    std::vector<EventSequence> out;
    size_t line_no = 0;
    size_t pos = 0;
    while (pos < text.size()) {
        line_no++;
        size_t end = text.find('\n', pos);
        if (end == std::string_view::npos) {
            end = text.size();
        }
        std::string_view line = text.substr(pos, end - pos);
        try {
            out.push_back(EventSequence::parse(line));
        } catch (const std::invalid_argument &ex) {
            throw std::invalid_argument("line " + std::to_string(line_no) + ": " + ex.what());
        }
        pos = end + 1;
    }
    return out;
}

std::string format_sequence_file(std::span<const EventSequence> seqs) {
    std::string out;
    for (const auto &s : seqs) {
        out += s.to_string();
        out.push_back('\n');
    }
    return out;
}

}  // namespace qperc
