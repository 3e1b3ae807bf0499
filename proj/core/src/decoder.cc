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

#include "qperc/decoder.h"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>

namespace qperc {

double arcsin_correction(double raw) {
    double r = std::clamp(raw, 0.0, 1.0);
    if (r == 1.0) {
        return 1.0;
    }
    return std::clamp(2.0 / std::numbers::pi * std::asin(std::sqrt(r)), 0.0, 1.0);
}

DecodedFrequency decode(const ShotResult &shots) {
    if (shots.n_shots == 0 || shots.n0 + shots.n1 != shots.n_shots) {
        throw std::invalid_argument("decode: inconsistent shot counts");
    }
    DecodedFrequency d;
    d.raw = static_cast<double>(shots.n1) / static_cast<double>(shots.n_shots);
    d.corrected = arcsin_correction(d.raw);
    return d;
}

double decoding_error(double true_f1, const DecodedFrequency &decoded) {
    return std::abs(true_f1 - decoded.corrected);
}

namespace {

struct MeanStd {
    double mean;
    double std;
};

MeanStd mean_std(std::span<const DecodedFrequency> runs, double DecodedFrequency::*field) {
    double sum = 0.0;
    for (const auto &r : runs) {
        sum += r.*field;
    }
    double mean = sum / static_cast<double>(runs.size());
    if (runs.size() < 2) {
        return {mean, 0.0};
    }
    double ss = 0.0;
    for (const auto &r : runs) {
        double d = r.*field - mean;
        ss += d * d;
    }
    return {mean, std::sqrt(ss / static_cast<double>(runs.size() - 1))};
}

}  // namespace

RunStatistics aggregate(std::span<const DecodedFrequency> runs, double true_f1) {
    if (runs.empty()) {
        throw std::invalid_argument("aggregate: no repetitions");
    }
    RunStatistics s;
    auto raw = mean_std(runs, &DecodedFrequency::raw);
    auto corrected = mean_std(runs, &DecodedFrequency::corrected);
    s.mean_raw = raw.mean;
    s.std_raw = raw.std;
    s.mean_corrected = corrected.mean;
    s.std_corrected = corrected.std;
    s.eps = std::abs(true_f1 - s.mean_corrected);
    s.eps_raw = std::abs(true_f1 - s.mean_raw);
    s.n_reps = runs.size();
    s.eps_per_rep.reserve(runs.size());
    for (const auto &r : runs) {
        s.eps_per_rep.push_back(decoding_error(true_f1, r));
    }
    return s;
}

}  // namespace qperc
