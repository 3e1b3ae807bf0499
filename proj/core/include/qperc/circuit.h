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

#ifndef QPERC_CIRCUIT_H
#define QPERC_CIRCUIT_H

#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "qperc/encoder.h"
#include "qperc/qubit.h"

namespace qperc {

enum class GateKind { kRy, kH };

struct Gate {
    GateKind kind = GateKind::kRy;
    /// Radians; only meaningful for kRy (always 0 for kH).
    double angle = 0.0;

    static Gate ry(double angle) { return {GateKind::kRy, angle}; }
    static Gate h() { return {GateKind::kH, 0.0}; }

    bool operator==(const Gate &) const = default;
};

/// Single-qubit circuit with an optional final measurement.
struct Circuit {
    std::vector<Gate> gates;
    bool measured = false;

    bool operator==(const Circuit &) const = default;
};

/// zero init: one ry(pi/tau) per back event, front events emit nothing.
/// plus init: h, then one signed ry per event.
/// Always measured. Equal-angle gates are kept separate.
Circuit compile(const EventSequence &seq, const EncoderConfig &cfg);

/// Statevector of the circuit's gates applied to |0> (measurement ignored).
QubitState simulate(const Circuit &c);

/// Shortest decimal that reads back to the same binary64.
std::string format_angle(double angle);

/// OpenQASM 2.0 text for a one-qubit, one-bit circuit. Lines are `\n`
/// terminated, with no trailing whitespace.
std::string emit(const Circuit &c);

/// Error raised by parse(), carrying a 1-based source location.
class CircuitParseError : public std::runtime_error {
   public:
    CircuitParseError(size_t line, size_t column, const std::string &message);

    size_t line() const { return line_; }
    size_t column() const { return column_; }

   private:
    size_t line_;
    size_t column_;
};

/// Parses the subset produced by emit(), plus `//` comments, blank lines
/// and free whitespace between tokens. Throws CircuitParseError for
/// anything outside it (other gates, wider registers, non-literal angles,
/// gates after the measurement).
Circuit parse(std::string_view text);

}  // namespace qperc

#endif
