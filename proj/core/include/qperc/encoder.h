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

#ifndef QPERC_ENCODER_H
#define QPERC_ENCODER_H

#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "qperc/qubit.h"

namespace qperc {

/// A single sensor reading: the object is seen by the front sensor
/// (alpha = 0) or by the back sensor (alpha = pi).
enum class Event : uint8_t { kFront = 0, kBack = 1 };

/// Angle label of the event in radians: 0 or pi.
double alpha(Event e);

/// 'F' or 'B'.
char event_char(Event e);

/// Ordered window of tau >= 1 events.
class EventSequence {
   public:
    /// Throws std::invalid_argument if `events` is empty.
    explicit EventSequence(std::vector<Event> events);

    /// Parses one window in the `F`/`B` line format. Any other character,
    /// including whitespace, is rejected with std::invalid_argument.
    static EventSequence parse(std::string_view line);

    std::string to_string() const;

    const std::vector<Event> &events() const { return events_; }
    size_t tau() const { return events_.size(); }
    size_t count(Event e) const { return e == Event::kBack ? back_ : events_.size() - back_; }
    size_t tau_front() const { return count(Event::kFront); }
    size_t tau_back() const { return back_; }

    bool operator==(const EventSequence &) const = default;

   private:
    std::vector<Event> events_;
    size_t back_ = 0;
};

/// count(event) / tau.
double relative_frequency(const EventSequence &seq, Event event);

enum class InitState { kZero, kPlus };

struct EncoderConfig {
    InitState init = InitState::kZero;
    /// Window length. Fixed up front so online mode knows the per-event
    /// fraction before the window completes.
    size_t tau = 1;
};

/// Throws std::invalid_argument when cfg.tau == 0.
void validate(const EncoderConfig &cfg);

/// |0> for kZero, H|0> = |+> for kPlus.
QubitState initial_state(const EncoderConfig &cfg);

/// Signed y-rotation angle contributed by one event.
///   kZero: 0 for front, pi/tau for back.
///   kPlus: -pi/(2 tau) for front, +pi/(2 tau) for back.
double event_angle(Event e, const EncoderConfig &cfg);

/// Per-event operator. Identity for a front event under kZero.
Unitary2 event_operator(Event e, const EncoderConfig &cfg);

/// Encodes a complete window. The per-event rotations all share the y axis,
/// so they are fused into a single rotation by the summed angle. Both init
/// variants land on R_y(pi * tau_back / tau)|0>.
///
/// Throws std::invalid_argument if seq.tau() != cfg.tau.
QubitState encode_batch(const EventSequence &seq, const EncoderConfig &cfg);

/// Applies one event's operator to `state`.
QubitState online_update(const QubitState &state, Event e, const EncoderConfig &cfg);

/// Single-writer online perception state for one window at a time.
class PerceptionSession {
   public:
    explicit PerceptionSession(EncoderConfig cfg);

    /// Applies the event. Throws std::logic_error if the window is already
    /// complete; call reset() first.
    const QubitState &push(Event e);

    const QubitState &state() const { return state_; }
    size_t events_seen() const { return seen_; }

    /// Decoding guarantees hold only when this is true.
    bool complete() const { return seen_ == cfg_.tau; }

    void reset();

    const EncoderConfig &config() const { return cfg_; }

   private:
    EncoderConfig cfg_;
    QubitState state_;
    size_t seen_ = 0;
};

/// Reads one window per line. Blank lines are rejected; a trailing newline
/// at end of input is fine. Throws std::invalid_argument with the 1-based
/// line number on malformed input.
std::vector<EventSequence> parse_sequence_file(std::string_view text);

/// One `F`/`B` line per window, each `\n` terminated.
std::string format_sequence_file(std::span<const EventSequence> seqs);

}  // namespace qperc

#endif
