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

#include "qperc/sampler.h"

#include <charconv>
#include <cmath>
#include <stdexcept>
#include <string>

#include "qperc/circuit.h"
#include "qperc/text.h"

namespace qperc {

namespace {

template <typename T>
T parse_number(std::string_view field, const char *what) {
    field = trim(field);
    T value{};
    auto [ptr, ec] = std::from_chars(field.data(), field.data() + field.size(), value);
    if (ec != std::errc{} || ptr != field.data() + field.size()) {
        throw std::invalid_argument(std::string("bad ") + what + " '" + std::string(field) + "'");
    }
    if constexpr (std::is_floating_point_v<T>) {
        if (!std::isfinite(value)) {
            throw std::invalid_argument(std::string(what) + " must be finite");
        }
    }
    return value;
}

bool is_probability(double p) {
    return p >= 0.0 && p <= 1.0;
}

}  // namespace

BackendCalibration parse_calibration(std::string_view text) {
    BackendCalibration cal;
    size_t line_no = 0;
    size_t pos = 0;
    while (pos <= text.size()) {
        size_t end = text.find('\n', pos);
        if (end == std::string_view::npos) {
            end = text.size();
        }
        std::string_view line = trim(text.substr(pos, end - pos));
        pos = end + 1;
        line_no++;
        if (line.empty() || line.front() == '#') {
            continue;
        }
        try {
            std::vector<std::string_view> fields;
            size_t start = 0;
            while (true) {
                size_t comma = line.find(',', start);
                fields.push_back(line.substr(start, comma == std::string_view::npos ? std::string_view::npos
                                                                                     : comma - start));
                if (comma == std::string_view::npos) {
                    break;
                }
                start = comma + 1;
            }
            if (fields.size() != 7) {
                throw std::invalid_argument("expected 7 fields, got " + std::to_string(fields.size()));
            }
            std::string name(trim(fields[0]));
            if (name.empty()) {
                throw std::invalid_argument("empty backend name");
            }
            if (cal.name.empty()) {
                cal.name = name;
            } else if (cal.name != name) {
                throw std::invalid_argument("mixed backends '" + cal.name + "' and '" + name + "'");
            }
            QubitCalibration q;
            q.qubit = parse_number<int>(fields[1], "qubit index");
            q.t1_us = parse_number<double>(fields[2], "t1_us");
            q.t2_us = parse_number<double>(fields[3], "t2_us");
            q.frequency_ghz = parse_number<double>(fields[4], "freq_ghz");
            q.readout_error = parse_number<double>(fields[5], "readout_error");
            q.u2_error_rate = parse_number<double>(fields[6], "u2_error");
            if (q.qubit != static_cast<int>(cal.qubits.size())) {
                throw std::invalid_argument("qubit indices must be listed in order starting at 0");
            }
            if (!(q.t1_us > 0.0) || !(q.t2_us > 0.0)) {
                throw std::invalid_argument("T1 and T2 must be positive");
            }
            if (q.t2_us > 2.0 * q.t1_us) {
                throw std::invalid_argument("T2 exceeds 2*T1");
            }
            if (!is_probability(q.readout_error) || !is_probability(q.u2_error_rate)) {
                throw std::invalid_argument("error rates must lie in [0, 1]");
            }
            cal.qubits.push_back(q);
        } catch (const std::invalid_argument &ex) {
            throw std::invalid_argument("calibration line " + std::to_string(line_no) + ": " + ex.what());
        }
    }
    if (cal.qubits.empty()) {
        throw std::invalid_argument("calibration: no qubit records");
    }
    return cal;
}

double NoiseModel::damping_gamma() const {
    if (!damping_enabled || gate_time_us <= 0.0) {
        return 0.0;
    }
    return -std::expm1(-gate_time_us / t1_us);
}

bool NoiseModel::is_trivial() const {
    return readout_flip == 0.0 && gate_depolarizing == 0.0 && damping_gamma() == 0.0;
}

void NoiseModel::validate() const {
    if (!is_probability(readout_flip) || !is_probability(gate_depolarizing)) {
        throw std::invalid_argument("NoiseModel: probabilities must lie in [0, 1]");
    }
    if (!(gate_time_us >= 0.0) || !std::isfinite(gate_time_us)) {
        throw std::invalid_argument("NoiseModel: gate time must be finite and >= 0");
    }
    if (damping_enabled && gate_time_us > 0.0 && !(t1_us > 0.0)) {
        throw std::invalid_argument("NoiseModel: damping needs a positive T1");
    }
}

NoiseModel noise_from_calibration(const BackendCalibration &cal, int qubit_index, double gate_time_us,
                                  bool damping_enabled) {
    if (qubit_index < 0 || static_cast<size_t>(qubit_index) >= cal.qubits.size()) {
        throw std::out_of_range("noise_from_calibration: backend '" + cal.name + "' has no qubit " +
                                std::to_string(qubit_index));
    }
    const QubitCalibration &q = cal.qubits[static_cast<size_t>(qubit_index)];
    NoiseModel m;
    m.readout_flip = q.readout_error;
    m.gate_depolarizing = q.u2_error_rate;
    m.gate_time_us = gate_time_us;
    m.t1_us = q.t1_us;
    m.damping_enabled = damping_enabled;
    m.validate();
    return m;
}

uint64_t sample_binomial(uint64_t n, double p, Rng &rng) {
    if (!(p >= 0.0 && p <= 1.0)) {
        throw std::invalid_argument("sample_binomial: p must lie in [0, 1]");
    }
    uint64_t k = 0;
    for (uint64_t i = 0; i < n; i++) {
        k += rng.uniform() < p;
    }
    return k;
}

ShotResult measure_shots(const QubitState &state, uint64_t n, const std::optional<NoiseModel> &noise,
                         uint64_t seed) {
    if (n == 0) {
        throw std::invalid_argument("measure_shots: need at least one shot");
    }
    Rng rng(seed);
    double p1 = state.prob_one();
    ShotResult r;
    r.n_shots = n;
    r.seed = seed;
    if (!noise || noise->is_trivial()) {
        r.n1 = sample_binomial(n, p1, rng);
    } else {
        noise->validate();
        for (uint64_t i = 0; i < n; i++) {
            bool one = rng.uniform() < p1;
            if (rng.uniform() < noise->readout_flip) {
                one = !one;
            }
            r.n1 += one;
        }
    }
    r.n0 = n - r.n1;
    return r;
}

ShotResult noisy_encode_shots(const EventSequence &seq, const EncoderConfig &cfg, uint64_t n,
                              const NoiseModel &noise, uint64_t seed) {
    noise.validate();
    if (noise.is_trivial()) {
        return measure_shots(encode_batch(seq, cfg), n, std::nullopt, seed);
    }
    if (n == 0) {
        throw std::invalid_argument("noisy_encode_shots: need at least one shot");
    }
    const Circuit circuit = compile(seq, cfg);
    std::vector<Unitary2> ops;
    ops.reserve(circuit.gates.size());
    for (const Gate &g : circuit.gates) {
        ops.push_back(g.kind == GateKind::kRy ? rotation_y(g.angle) : hadamard());
    }
    const Unitary2 paulis[3] = {pauli(PauliAxis::kX), pauli(PauliAxis::kY), pauli(PauliAxis::kZ)};
    const double gamma = noise.damping_gamma();
    const double keep = std::sqrt(1.0 - gamma);

    Rng rng(seed);
    ShotResult r;
    r.n_shots = n;
    r.seed = seed;
    for (uint64_t shot = 0; shot < n; shot++) {
        QubitState s = QubitState::zero();
        for (size_t k = 0; k < ops.size(); k++) {
            s = apply(ops[k], s);
            if (circuit.gates[k].kind != GateKind::kRy) {
                continue;
            }
            if (noise.gate_depolarizing > 0.0 && rng.uniform() < noise.gate_depolarizing) {
                s = apply(paulis[rng.uniform_below(3)], s);
            }
            if (gamma > 0.0) {
                if (rng.uniform() < gamma * std::norm(s.c1())) {
                    s = QubitState::zero();
                } else {
                    s = QubitState::normalized(s.c0(), s.c1() * keep);
                }
            }
        }
        bool one = rng.uniform() < s.prob_one();
        if (noise.readout_flip > 0.0 && rng.uniform() < noise.readout_flip) {
            one = !one;
        }
        r.n1 += one;
    }
    r.n0 = n - r.n1;
    return r;
}

}  // namespace qperc
