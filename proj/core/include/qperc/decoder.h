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

#ifndef QPERC_DECODER_H
#define QPERC_DECODER_H

#include <span>
#include <vector>

#include "qperc/sampler.h"

namespace qperc {

/// Empirical |c1|^2 and the frequency estimate recovered from it.
struct DecodedFrequency {
    double raw = 0.0;
    double corrected = 0.0;
};

/// (2/pi) * asin(sqrt(raw)), with the argument clamped to [0, 1].
double arcsin_correction(double raw);

/// raw = N1 / N, corrected = arcsin_correction(raw).
DecodedFrequency decode(const ShotResult &shots);

/// |true_f1 - decoded.corrected|.
double decoding_error(double true_f1, const DecodedFrequency &decoded);

struct RunStatistics {
    double mean_raw = 0.0;
    double std_raw = 0.0;
    double mean_corrected = 0.0;
    double std_corrected = 0.0;
    /// Decoding error of the mean corrected frequency.
    double eps = 0.0;
    /// |true_f1 - mean_raw|.
    double eps_raw = 0.0;
    size_t n_reps = 0;
    /// Decoding error of each repetition, in repetition order.
    std::vector<double> eps_per_rep;
};

/// Sample mean and (n-1) standard deviation over repetitions. A single
/// repetition has std 0. Throws std::invalid_argument on an empty list.
RunStatistics aggregate(std::span<const DecodedFrequency> runs, double true_f1);

}  // namespace qperc

#endif
