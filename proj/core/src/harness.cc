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

#include "qperc/harness.h"

#include <algorithm>
#include <atomic>
#include <charconv>
#include <cmath>
#include <cstdio>
#include <exception>
#include <map>
#include <mutex>
#include <numbers>
#include <stdexcept>
#include <thread>

#include "qperc/text.h"

namespace qperc {

void DatasetSpec::validate() const {
    if (tau == 0) {
        throw std::invalid_argument("DatasetSpec: tau must be >= 1");
    }
    if (points < 2) {
        throw std::invalid_argument("DatasetSpec: points must be >= 2");
    }
}

std::vector<size_t> dataset_targets(const DatasetSpec &spec) {
    spec.validate();
    std::vector<size_t> out;
    out.reserve(spec.points);
    const uint64_t denom = spec.points - 1;
    for (uint64_t i = 0; i < spec.points; i++) {
        // Integer round-half-up of tau * i / denom.
        uint64_t num = static_cast<uint64_t>(spec.tau) * i;
        out.push_back(static_cast<size_t>((2 * num + denom) / (2 * denom)));
    }
    return out;
}

EventSequence random_sequence(size_t tau, size_t tau_back, Rng &rng) {
    if (tau == 0 || tau_back > tau) {
        throw std::invalid_argument("random_sequence: need 0 <= tau_back <= tau, tau >= 1");
    }
    std::vector<Event> events(tau, Event::kFront);
    std::fill(events.begin(), events.begin() + static_cast<std::ptrdiff_t>(tau_back), Event::kBack);
    // Fisher-Yates.
    for (size_t k = tau - 1; k > 0; k--) {
        size_t j = static_cast<size_t>(rng.uniform_below(k + 1));
        std::swap(events[k], events[j]);
    }
    return EventSequence(std::move(events));
}

std::vector<EventSequence> build_dataset(const DatasetSpec &spec) {
    std::vector<EventSequence> out;
    auto targets = dataset_targets(spec);
    out.reserve(targets.size());
    for (size_t i = 0; i < targets.size(); i++) {
        Rng rng(derive_seed(spec.seed, i, 0));
        out.push_back(random_sequence(spec.tau, targets[i], rng));
    }
    return out;
}

void ExperimentPlan::validate() const {
    if (entries.empty()) {
        throw std::invalid_argument("ExperimentPlan: no dataset entries");
    }
    if (n_shots == 0 || n_reps == 0) {
        throw std::invalid_argument("ExperimentPlan: shots and repetitions must be >= 1");
    }
    if (noise) {
        noise->model.validate();
    }
}

uint64_t ExperimentPlan::total_experiments() const {
    return static_cast<uint64_t>(entries.size()) * n_reps * n_shots;
}

std::vector<EntryResult> run_plan(const ExperimentPlan &plan) {
    plan.validate();
    const size_t n_entries = plan.entries.size();
    const size_t n_items = n_entries * plan.n_reps;
    std::vector<ShotResult> shots(n_items);

    std::atomic<size_t> cursor{0};
    std::exception_ptr failure;
    std::mutex failure_mu;

    auto worker = [&] {
        while (true) {
            size_t item = cursor.fetch_add(1);
            if (item >= n_items) {
                return;
            }
            size_t entry = item / plan.n_reps;
            size_t rep = item % plan.n_reps;
            try {
                const EventSequence &seq = plan.entries[entry];
                EncoderConfig cfg{plan.init, seq.tau()};
                uint64_t seed = derive_seed(plan.master_seed, entry, rep);
                if (plan.noise) {
                    shots[item] = noisy_encode_shots(seq, cfg, plan.n_shots, plan.noise->model, seed);
                } else {
                    shots[item] = measure_shots(encode_batch(seq, cfg), plan.n_shots, std::nullopt, seed);
                }
            } catch (const std::exception &ex) {
                std::lock_guard<std::mutex> lock(failure_mu);
                if (!failure) {
                    failure = std::make_exception_ptr(std::runtime_error(
                        "entry " + std::to_string(entry) + ", repetition " + std::to_string(rep) + ": " + ex.what()));
                }
                cursor.store(n_items);
                return;
            }
        }
    };

    unsigned n_workers = plan.workers != 0 ? plan.workers : std::max(1u, std::thread::hardware_concurrency());
    n_workers = static_cast<unsigned>(std::min<size_t>(n_workers, n_items));
    if (n_workers <= 1) {
        worker();
    } else {
        std::vector<std::jthread> pool;
        pool.reserve(n_workers);
        for (unsigned w = 0; w < n_workers; w++) {
            pool.emplace_back(worker);
        }
    }
    if (failure) {
        std::rethrow_exception(failure);
    }

    std::vector<EntryResult> results;
    results.reserve(n_entries);
    for (size_t entry = 0; entry < n_entries; entry++) {
        const EventSequence &seq = plan.entries[entry];
        EntryResult r;
        r.tau = seq.tau();
        r.tau1 = seq.tau_back();
        r.true_f1 = relative_frequency(seq, Event::kBack);
        r.shots.assign(shots.begin() + static_cast<std::ptrdiff_t>(entry * plan.n_reps),
                       shots.begin() + static_cast<std::ptrdiff_t>((entry + 1) * plan.n_reps));
        std::vector<DecodedFrequency> decoded;
        decoded.reserve(r.shots.size());
        for (const auto &s : r.shots) {
            decoded.push_back(decode(s));
        }
        r.stats = aggregate(decoded, r.true_f1);
        results.push_back(std::move(r));
    }
    return results;
}

std::string format_results_csv(const ExperimentPlan &plan, const std::vector<EntryResult> &results) {
    std::string out = "# rng=";
    out += kRngAlgorithm;
    out += '\n';
    out += "tau,tau1,true_f1,mean_raw,std_raw,mean_corrected,std_corrected,eps,eps_raw,n_reps,n_shots,seed,noise_profile\n";
    const std::string profile = plan.noise ? plan.noise->label : "none";
    for (const auto &r : results) {
        const RunStatistics &s = r.stats;
        out += std::to_string(r.tau) + ',' + std::to_string(r.tau1) + ',' + format_double(r.true_f1) + ',' +
               format_double(s.mean_raw) + ',' + format_double(s.std_raw) + ',' + format_double(s.mean_corrected) +
               ',' + format_double(s.std_corrected) + ',' + format_double(s.eps) + ',' + format_double(s.eps_raw) +
               ',' + std::to_string(s.n_reps) + ',' + std::to_string(plan.n_shots) + ',' +
               std::to_string(plan.master_seed) + ',' + profile + '\n';
    }
    return out;
}

std::string format_repetitions_csv(const std::vector<EntryResult> &results) {
    std::string out = "tau,tau1,rep,seed,n1,raw,corrected,eps\n";
    for (const auto &r : results) {
        for (size_t k = 0; k < r.shots.size(); k++) {
            DecodedFrequency d = decode(r.shots[k]);
            out += std::to_string(r.tau) + ',' + std::to_string(r.tau1) + ',' + std::to_string(k) + ',' +
                   std::to_string(r.shots[k].seed) + ',' + std::to_string(r.shots[k].n1) + ',' + format_double(d.raw) +
                   ',' + format_double(d.corrected) + ',' + format_double(r.stats.eps_per_rep[k]) + '\n';
        }
    }
    return out;
}

std::string format_plot_data(const std::vector<EntryResult> &results) {
    std::string out = "# f1 mean_raw std_raw mean_corrected std_corrected expected_raw\n";
    for (const auto &r : results) {
        double expected_raw = std::pow(std::sin(std::numbers::pi * r.true_f1 / 2.0), 2);
        out += format_double(r.true_f1) + ' ' + format_double(r.stats.mean_raw) + ' ' +
               format_double(r.stats.std_raw) + ' ' + format_double(r.stats.mean_corrected) + ' ' +
               format_double(r.stats.std_corrected) + ' ' + format_double(expected_raw) + '\n';
    }
    return out;
}

namespace {

template <typename T>
T parse_field(std::string_view f, const char *name, size_t line_no) {
    T v{};
    auto [ptr, ec] = std::from_chars(f.data(), f.data() + f.size(), v);
    if (ec != std::errc{} || ptr != f.data() + f.size()) {
        throw DataError("results line " + std::to_string(line_no) + ": bad " + name + " '" + std::string(f) + "'");
    }
    return v;
}

constexpr std::string_view kResultsHeader =
    "tau,tau1,true_f1,mean_raw,std_raw,mean_corrected,std_corrected,eps,eps_raw,n_reps,n_shots,seed,noise_profile";

}  // namespace

std::vector<ResultRow> parse_results_csv(std::string_view text) {
    std::vector<ResultRow> rows;
    bool seen_header = false;
    size_t line_no = 0;
    for (std::string_view raw : split(text, '\n')) {
        line_no++;
        std::string_view line = trim(raw);
        if (line.empty() || line.front() == '#') {
            continue;
        }
        if (!seen_header) {
            if (line != kResultsHeader) {
                throw DataError("results line " + std::to_string(line_no) + ": unexpected header");
            }
            seen_header = true;
            continue;
        }
        auto f = split(line, ',');
        if (f.size() != 13) {
            throw DataError("results line " + std::to_string(line_no) + ": expected 13 fields, got " +
                            std::to_string(f.size()));
        }
        ResultRow r;
        r.tau = parse_field<size_t>(f[0], "tau", line_no);
        r.tau1 = parse_field<size_t>(f[1], "tau1", line_no);
        r.true_f1 = parse_field<double>(f[2], "true_f1", line_no);
        r.mean_raw = parse_field<double>(f[3], "mean_raw", line_no);
        r.std_raw = parse_field<double>(f[4], "std_raw", line_no);
        r.mean_corrected = parse_field<double>(f[5], "mean_corrected", line_no);
        r.std_corrected = parse_field<double>(f[6], "std_corrected", line_no);
        r.eps = parse_field<double>(f[7], "eps", line_no);
        r.eps_raw = parse_field<double>(f[8], "eps_raw", line_no);
        r.n_reps = parse_field<uint64_t>(f[9], "n_reps", line_no);
        r.n_shots = parse_field<uint64_t>(f[10], "n_shots", line_no);
        r.seed = parse_field<uint64_t>(f[11], "seed", line_no);
        r.noise_profile = std::string(f[12]);
        rows.push_back(std::move(r));
    }
    if (!seen_header) {
        throw DataError("results: missing header");
    }
    return rows;
}

namespace {

std::string cell(double v) {
    if (v == 0.0) {
        return "0";
    }
    char buf[32];
    std::snprintf(buf, sizeof(buf), "%.4e", v);
    return buf;
}

std::string pad(std::string s, size_t width) {
    if (s.size() < width) {
        s.insert(0, width - s.size(), ' ');
    }
    return s;
}

}  // namespace

std::string format_table2(const std::vector<ResultRow> &rows) {
    // Group by (profile, tau) keeping first-seen order of groups.
    std::vector<std::pair<std::string, size_t>> order;
    std::map<std::pair<std::string, size_t>, std::map<size_t, const ResultRow *>> groups;
    for (const auto &r : rows) {
        auto key = std::make_pair(r.noise_profile, r.tau);
        if (!groups.contains(key)) {
            order.push_back(key);
        }
        groups[key][r.tau1] = &r;
    }
    constexpr size_t kWidth = 11;
    std::string out;
    for (const auto &key : order) {
        const auto &cols = groups[key];
        const ResultRow &first = *cols.begin()->second;
        out += "noise_profile=" + key.first + " tau=" + std::to_string(key.second) +
               " N=" + std::to_string(first.n_shots) + " n=" + std::to_string(first.n_reps) + '\n';
        std::string head = pad("tau1", 8);
        std::string eps = pad("eps", 8);
        std::string eps_raw = pad("eps_raw", 8);
        for (const auto &[tau1, row] : cols) {
            head += " " + pad(std::to_string(tau1), kWidth);
            eps += " " + pad(cell(row->eps), kWidth);
            eps_raw += " " + pad(cell(row->eps_raw), kWidth);
        }
        out += head + '\n' + eps + '\n' + eps_raw + "\n\n";
    }
    return out;
}

void run_online(const WorldConfig &world_cfg, const EncoderConfig &cfg, const OnlineOptions &options,
                const std::function<void(const OnlineRecord &)> &sink, std::vector<PoseSample> *trace) {
    if (options.windows == 0) {
        throw std::invalid_argument("run_online: need at least one window");
    }
    World world(world_cfg);
    world.set_trace(trace);
    PerceptionSession session(cfg);
    for (size_t w = 0; w < options.windows; w++) {
        double t_start = static_cast<double>(world.ticks()) * world_cfg.sample_period_s;
        std::vector<Event> events;
        events.reserve(cfg.tau);
        while (!session.complete()) {
            Event e = world.tick();
            events.push_back(e);
            session.push(e);
        }
        OnlineRecord rec;
        rec.window = w;
        rec.t_start_s = t_start;
        rec.sequence = EventSequence(std::move(events));
        rec.state = session.state();
        rec.shots = measure_shots(rec.state, options.n_shots, std::nullopt, derive_seed(options.seed, w, 0));
        rec.decoded = decode(rec.shots);
        sink(rec);
        session.reset();
    }
}

std::vector<OnlineRecord> run_online(const WorldConfig &world, const EncoderConfig &cfg,
                                     const OnlineOptions &options) {
    std::vector<OnlineRecord> out;
    out.reserve(options.windows);
    run_online(world, cfg, options, [&](const OnlineRecord &r) { out.push_back(r); });
    return out;
}

std::string format_online_csv(const std::vector<OnlineRecord> &records) {
    std::string out = "window,t_start_s,sequence,tau,tau1,true_f1,theta,n1,raw,corrected,eps\n";
    for (const auto &r : records) {
        double f1 = relative_frequency(r.sequence, Event::kBack);
        out += std::to_string(r.window) + ',' + format_double(r.t_start_s) + ',' + r.sequence.to_string() + ',' +
               std::to_string(r.sequence.tau()) + ',' + std::to_string(r.sequence.tau_back()) + ',' +
               format_double(f1) + ',' + format_double(bloch_from_state(r.state).theta) + ',' +
               std::to_string(r.shots.n1) + ',' + format_double(r.decoded.raw) + ',' +
               format_double(r.decoded.corrected) + ',' + format_double(decoding_error(f1, r.decoded)) + '\n';
    }
    return out;
}

}  // namespace qperc
