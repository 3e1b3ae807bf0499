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

#ifndef QPERC_SAMPLER_H
#define QPERC_SAMPLER_H

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "qperc/encoder.h"
#include "qperc/qubit.h"
#include "qperc/rng.h"

namespace qperc {

/// Counts from n_shots prepare-and-measure experiments.
struct ShotResult {
    uint64_t n_shots = 0;
    uint64_t n0 = 0;
    uint64_t n1 = 0;
    uint64_t seed = 0;

    bool operator==(const ShotResult &) const = default;
};

/// One qubit row of a backend calibration datasheet.
struct QubitCalibration {
    int qubit = 0;
    double t1_us = 0.0;
    double t2_us = 0.0;
    double frequency_ghz = 0.0;
    double readout_error = 0.0;
    double u2_error_rate = 0.0;
};

struct BackendCalibration {
    std::string name;
    std::vector<QubitCalibration> qubits;
};

/// Reads the `backend,qubit,t1_us,t2_us,freq_ghz,readout_error,u2_error`
/// record format. Blank lines and lines starting with '#' are skipped. Every
/// record must name the same backend. Throws std::invalid_argument with the
/// line number on malformed or unphysical records (probabilities outside
/// [0, 1], T2 > 2 T1).
BackendCalibration parse_calibration(std::string_view text);

/// Noise applied to a simulated single-qubit execution.
///
/// - readout_flip: symmetric probability that the recorded bit is flipped.
/// - gate_depolarizing: per R_y gate, probability of a uniformly chosen X, Y
///   or Z error after the gate.
/// - damping: per R_y gate amplitude damping with
///   gamma = 1 - exp(-gate_time_us / t1_us), simulated as a jump/no-jump
///   trajectory.
struct NoiseModel {
    double readout_flip = 0.0;
    double gate_depolarizing = 0.0;
    double gate_time_us = 0.0;
    double t1_us = 0.0;
    bool damping_enabled = false;

    /// Damping strength per gate; 0 when damping is off or the gate is
    /// instantaneous.
    double damping_gamma() const;

    /// True when the model cannot change any outcome.
    bool is_trivial() const;

    /// Throws std::invalid_argument on out-of-range fields.
    void validate() const;
};

/// Maps a calibration row onto a NoiseModel: readout error -> readout_flip,
/// U2 error rate -> gate_depolarizing, T1 plus the supplied gate time ->
/// damping. Throws std::out_of_range for an unknown qubit index.
NoiseModel noise_from_calibration(const BackendCalibration &cal, int qubit_index, double gate_time_us,
                                  bool damping_enabled = true);

/// Exact Binomial(n, p) draw built from per-trial uniform comparisons, so
/// the result depends only on the Rng stream.
uint64_t sample_binomial(uint64_t n, double p, Rng &rng);

/// Measures `n` identically prepared copies of `state`.
///
/// Without noise (or with a trivial model) n1 is one binomial draw. With
/// noise, each shot is sampled and then passed through the readout flip;
/// gate-level noise needs the gate list and is handled by
/// noisy_encode_shots. Throws std::invalid_argument when n == 0.
ShotResult measure_shots(const QubitState &state, uint64_t n, const std::optional<NoiseModel> &noise,
                         uint64_t seed);

/// Simulates the compiled circuit of `seq` shot by shot under `noise`.
///
/// A trivial model delegates to measure_shots(encode_batch(seq, cfg)), so the
/// counts are identical to the noiseless path for the same seed.
ShotResult noisy_encode_shots(const EventSequence &seq, const EncoderConfig &cfg, uint64_t n,
                              const NoiseModel &noise, uint64_t seed);

}  // namespace qperc

#endif
