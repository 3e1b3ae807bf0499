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

#ifndef QPERC_HARNESS_H
#define QPERC_HARNESS_H

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "qperc/decoder.h"
#include "qperc/encoder.h"
#include "qperc/env.h"
#include "qperc/sampler.h"

namespace qperc {

/// Grid of windows with evenly spaced back-event counts over [0, tau].
struct DatasetSpec {
    size_t tau = 10;
    size_t points = 11;
    uint64_t seed = 0;

    /// Throws std::invalid_argument unless tau >= 1 and points >= 2.
    void validate() const;
};

/// round(tau * i / (points - 1)) for i = 0 .. points-1.
std::vector<size_t> dataset_targets(const DatasetSpec &spec);

/// A uniformly random ordering of `tau_back` back events among `tau`.
EventSequence random_sequence(size_t tau, size_t tau_back, Rng &rng);

/// One random window per grid target. Entry i draws from its own stream
/// derived from (seed, i).
std::vector<EventSequence> build_dataset(const DatasetSpec &spec);

struct NoiseProfile {
    /// Written to the noise_profile column, e.g. "armonk:q0:gate_time_us=0".
    std::string label;
    NoiseModel model;
};

struct ExperimentPlan {
    std::vector<EventSequence> entries;
    uint64_t n_shots = 8192;
    uint64_t n_reps = 30;
    std::optional<NoiseProfile> noise;
    InitState init = InitState::kZero;
    uint64_t master_seed = 0;
    /// 0 picks std::thread::hardware_concurrency().
    unsigned workers = 0;

    void validate() const;

    /// entries * n_reps * n_shots.
    uint64_t total_experiments() const;
};

struct EntryResult {
    size_t tau = 0;
    size_t tau1 = 0;
    double true_f1 = 0.0;
    RunStatistics stats;
    /// Shot counts of every repetition, in repetition order.
    std::vector<ShotResult> shots;
};

/// Runs encode -> sample -> decode n_reps times for every entry and
/// aggregates. Repetition r of entry i is seeded with
/// derive_seed(master_seed, i, r), so the output does not depend on the
/// number of workers or on scheduling. Module errors are rethrown as
/// std::runtime_error naming the entry and repetition.
std::vector<EntryResult> run_plan(const ExperimentPlan &plan);

/// Results table with header
/// `tau,tau1,true_f1,mean_raw,std_raw,mean_corrected,std_corrected,eps,eps_raw,n_reps,n_shots,seed,noise_profile`,
/// preceded by one `#` line naming the RNG algorithm.
std::string format_results_csv(const ExperimentPlan &plan, const std::vector<EntryResult> &results);

/// Per-repetition rows: `tau,tau1,rep,seed,n1,raw,corrected,eps`.
std::string format_repetitions_csv(const std::vector<EntryResult> &results);

/// Whitespace-separated columns for gnuplot: f1, mean/std of raw and
/// corrected, and the expected raw value sin^2(pi f1 / 2).
std::string format_plot_data(const std::vector<EntryResult> &results);

/// A parsed row of the results table.
struct ResultRow {
    size_t tau = 0;
    size_t tau1 = 0;
    double true_f1 = 0.0;
    double mean_raw = 0.0;
    double std_raw = 0.0;
    double mean_corrected = 0.0;
    double std_corrected = 0.0;
    double eps = 0.0;
    double eps_raw = 0.0;
    uint64_t n_reps = 0;
    uint64_t n_shots = 0;
    uint64_t seed = 0;
    std::string noise_profile;
};

/// Throws DataError on a malformed table.
std::vector<ResultRow> parse_results_csv(std::string_view text);

/// One block per (noise profile, tau): a tau1 header row, the eps row and
/// the eps_raw row, columns in increasing tau1.
std::string format_table2(const std::vector<ResultRow> &rows);

struct OnlineOptions {
    size_t windows = 1;
    uint64_t n_shots = 8192;
    /// Seeds the per-window measurement; window w uses derive_seed(seed, w, 0).
    uint64_t seed = 0;
};

struct OnlineRecord {
    size_t window = 0;
    double t_start_s = 0.0;
    EventSequence sequence{std::vector<Event>{Event::kFront}};
    /// State right before measurement.
    QubitState state;
    ShotResult shots;
    DecodedFrequency decoded;
};

/// Online workflow: the world produces tau readings per window, each one is
/// applied to the perception state as it arrives, and at the window boundary
/// the state is measured, decoded and reset. Records are delivered in window
/// order. When `trace` is non-null every world sample is appended to it.
void run_online(const WorldConfig &world, const EncoderConfig &cfg, const OnlineOptions &options,
                const std::function<void(const OnlineRecord &)> &sink, std::vector<PoseSample> *trace = nullptr);

std::vector<OnlineRecord> run_online(const WorldConfig &world, const EncoderConfig &cfg,
                                     const OnlineOptions &options);

/// `window,t_start_s,sequence,tau,tau1,true_f1,theta,n1,raw,corrected,eps`.
std::string format_online_csv(const std::vector<OnlineRecord> &records);

}  // namespace qperc

#endif
