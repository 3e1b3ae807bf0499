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

#include <algorithm>
#include <cstdio>
#include <filesystem>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "qperc/circuit.h"
#include "qperc/encoder.h"
#include "qperc/env.h"
#include "qperc/harness.h"
#include "qperc/sampler.h"
#include "qperc/text.h"

namespace {

using namespace qperc;

constexpr int kExitOk = 0;
constexpr int kExitUsage = 1;
constexpr int kExitData = 2;

struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

InitState parse_init(const std::string &s) {
    if (s == "zero") {
        return InitState::kZero;
    }
    if (s == "plus") {
        return InitState::kPlus;
    }
    throw UsageError("--init must be 'zero' or 'plus'");
}

void write_output(const std::string &path, const std::string &text) {
    if (path.empty() || path == "-") {
        std::cout << text;
    } else {
        write_file(path, text);
    }
}

std::string read_input(const std::string &path) {
    if (path == "-") {
        std::ostringstream ss;
        ss << std::cin.rdbuf();
        return ss.str();
    }
    return read_file(path);
}

std::vector<EventSequence> load_sequences(const std::string &path) {
    try {
        return parse_sequence_file(read_input(path));
    } catch (const std::invalid_argument &ex) {
        throw DataError(path + ": " + ex.what());
    }
}

// --config FILE holds flat key=value pairs. They are spliced in front of the
// command line flags so that explicit flags win (options take the last value).
std::vector<std::string> expand_config(int argc, char **argv) {
    std::vector<std::string> args(argv + 1, argv + argc);
    auto it = std::find(args.begin(), args.end(), "--config");
    if (it == args.end()) {
        return args;
    }
    if (it + 1 == args.end()) {
        throw UsageError("--config needs a file argument");
    }
    std::string path = *(it + 1);
    args.erase(it, it + 2);
    std::vector<std::string> injected;
    size_t line_no = 0;
    const std::string text = read_file(path);
    for (std::string_view raw : split(text, '\n')) {
        line_no++;
        std::string_view line = trim(raw.substr(0, raw.find('#')));
        if (line.empty()) {
            continue;
        }
        size_t eq = line.find('=');
        if (eq == std::string_view::npos) {
            throw DataError(path + ":" + std::to_string(line_no) + ": expected key=value");
        }
        std::string key(trim(line.substr(0, eq)));
        std::string value(trim(line.substr(eq + 1)));
        std::replace(key.begin(), key.end(), '_', '-');
        if (value == "true") {
            injected.push_back("--" + key);
        } else if (value != "false") {
            injected.push_back("--" + key);
            injected.push_back(value);
        }
    }
    // Insert right after the subcommand name.
    auto pos = args.empty() ? args.end() : args.begin() + 1;
    args.insert(pos, injected.begin(), injected.end());
    return args;
}

struct DatasetArgs {
    size_t tau = 10;
    size_t points = 11;
    uint64_t seed = 0;
    std::string out = "-";
};

int cmd_dataset(const DatasetArgs &a) {
    DatasetSpec spec{a.tau, a.points, a.seed};
    try {
        spec.validate();
    } catch (const std::invalid_argument &ex) {
        throw UsageError(ex.what());
    }
    auto seqs = build_dataset(spec);
    write_output(a.out, format_sequence_file(seqs));
    return kExitOk;
}

struct EncodeArgs {
    std::string in;
    std::string init = "zero";
    std::string qasm_dir;
    std::string out = "-";
};

int cmd_encode(const EncodeArgs &a) {
    InitState init = parse_init(a.init);
    auto seqs = load_sequences(a.in);
    if (!a.qasm_dir.empty()) {
        std::filesystem::create_directories(a.qasm_dir);
    }
    std::string report = "line,tau,tau1,true_f1,theta,phi,prob_one\n";
    for (size_t i = 0; i < seqs.size(); i++) {
        EncoderConfig cfg{init, seqs[i].tau()};
        QubitState s = encode_batch(seqs[i], cfg);
        BlochAngles b = bloch_from_state(s);
        report += std::to_string(i + 1) + ',' + std::to_string(seqs[i].tau()) + ',' +
                  std::to_string(seqs[i].tau_back()) + ',' + format_double(relative_frequency(seqs[i], Event::kBack)) +
                  ',' + format_double(b.theta) + ',' + format_double(b.phi) + ',' + format_double(s.prob_one()) + '\n';
        if (!a.qasm_dir.empty()) {
            char name[32];
            std::snprintf(name, sizeof(name), "window_%04zu.qasm", i + 1);
            write_file((std::filesystem::path(a.qasm_dir) / name).string(), emit(compile(seqs[i], cfg)));
        }
    }
    write_output(a.out, report);
    return kExitOk;
}

struct RunArgs {
    std::string in;
    uint64_t shots = 8192;
    uint64_t reps = 30;
    std::string noise_file;
    int qubit = 0;
    double gate_time_us = 0.0;
    bool no_damping = false;
    std::optional<double> readout_flip;
    std::optional<double> gate_depolarizing;
    std::string init = "zero";
    uint64_t seed = 0;
    unsigned workers = 0;
    std::string out = "-";
    std::string reps_out;
    std::string plot_data;
};

std::optional<NoiseProfile> build_noise(const RunArgs &a) {
    if (a.noise_file.empty()) {
        if (!a.readout_flip && !a.gate_depolarizing) {
            return std::nullopt;
        }
        NoiseProfile p;
        p.model.readout_flip = a.readout_flip.value_or(0.0);
        p.model.gate_depolarizing = a.gate_depolarizing.value_or(0.0);
        try {
            p.model.validate();
        } catch (const std::invalid_argument &ex) {
            throw UsageError(ex.what());
        }
        p.label = "custom:readout_flip=" + format_double(p.model.readout_flip) +
                  ":gate_depolarizing=" + format_double(p.model.gate_depolarizing);
        return p;
    }
    if (a.readout_flip || a.gate_depolarizing) {
        throw UsageError("--readout-flip/--gate-depolarizing cannot be combined with --noise");
    }
    BackendCalibration cal;
    try {
        cal = parse_calibration(read_file(a.noise_file));
    } catch (const std::invalid_argument &ex) {
        throw DataError(a.noise_file + ": " + ex.what());
    }
    NoiseProfile p;
    try {
        p.model = noise_from_calibration(cal, a.qubit, a.gate_time_us, !a.no_damping);
    } catch (const std::out_of_range &ex) {
        throw UsageError(ex.what());
    } catch (const std::invalid_argument &ex) {
        throw UsageError(ex.what());
    }
    p.label = cal.name + ":q" + std::to_string(a.qubit) + ":gate_time_us=" + format_double(a.gate_time_us) +
              (a.no_damping ? ":no_damping" : "");
    return p;
}

int cmd_run(const RunArgs &a) {
    if (a.shots == 0 || a.reps == 0) {
        throw UsageError("--shots and --reps must be >= 1");
    }
    ExperimentPlan plan;
    plan.init = parse_init(a.init);
    plan.noise = build_noise(a);
    plan.entries = load_sequences(a.in);
    if (plan.entries.empty()) {
        throw DataError(a.in + ": no sequences");
    }
    plan.n_shots = a.shots;
    plan.n_reps = a.reps;
    plan.master_seed = a.seed;
    plan.workers = a.workers;
    auto results = run_plan(plan);
    write_output(a.out, format_results_csv(plan, results));
    if (!a.reps_out.empty()) {
        write_file(a.reps_out, format_repetitions_csv(results));
    }
    if (!a.plot_data.empty()) {
        write_file(a.plot_data, format_plot_data(results));
    }
    std::cerr << "experiments: " << plan.total_experiments() << "\n";
    return kExitOk;
}

struct OnlineArgs {
    size_t tau = 10;
    size_t windows = 1;
    std::string world_config;
    std::string init = "zero";
    uint64_t shots = 8192;
    uint64_t seed = 0;
    std::string out = "-";
    std::string trace;
};

int cmd_online(const OnlineArgs &a) {
    if (a.tau == 0 || a.windows == 0) {
        throw UsageError("--tau and --windows must be >= 1");
    }
    WorldConfig world;
    if (!a.world_config.empty()) {
        try {
            world = parse_world_config(read_file(a.world_config));
        } catch (const std::invalid_argument &ex) {
            throw DataError(a.world_config + ": " + ex.what());
        }
    }
    EncoderConfig cfg{parse_init(a.init), a.tau};
    OnlineOptions opts{a.windows, a.shots, a.seed};
    std::vector<PoseSample> trace;
    std::vector<OnlineRecord> records;
    run_online(
        world, cfg, opts, [&](const OnlineRecord &r) { records.push_back(r); },
        a.trace.empty() ? nullptr : &trace);
    write_output(a.out, format_online_csv(records));
    if (!a.trace.empty()) {
        write_file(a.trace, format_pose_trace(trace));
    }
    return kExitOk;
}

struct ReportArgs {
    std::string in;
    bool table2 = false;
    std::string out = "-";
};

int cmd_report(const ReportArgs &a) {
    if (!a.table2) {
        throw UsageError("report: choose a layout (--table2)");
    }
    write_output(a.out, format_table2(parse_results_csv(read_input(a.in))));
    return kExitOk;
}

struct CheckQasmArgs {
    std::string in = "-";
};

int cmd_check_qasm(const CheckQasmArgs &a) {
    Circuit c = parse(read_input(a.in));
    size_t ry = std::count_if(c.gates.begin(), c.gates.end(), [](const Gate &g) { return g.kind == GateKind::kRy; });
    BlochAngles b = bloch_from_state(simulate(c));
    std::cout << "gates=" << c.gates.size() << " ry=" << ry << " h=" << c.gates.size() - ry
              << " measured=" << (c.measured ? "yes" : "no") << " theta=" << format_double(b.theta)
              << " phi=" << format_double(b.phi) << "\n";
    return kExitOk;
}

}  // namespace

int main(int argc, char **argv) {
    CLI::App app{"Single-qubit perception encoder: datasets, encoding, shot sampling and error studies", "qperc"};
    app.option_defaults()->multi_option_policy(CLI::MultiOptionPolicy::TakeLast);
    app.require_subcommand(1);
    app.set_help_all_flag("--help-all");

    DatasetArgs dataset_args;
    auto *dataset = app.add_subcommand("dataset", "Write a grid of random windows, one F/B line each");
    dataset->add_option("--tau", dataset_args.tau, "Window length")->required();
    dataset->add_option("--points", dataset_args.points, "Number of tau1 grid points over [0, tau]")->required();
    dataset->add_option("--seed", dataset_args.seed, "Dataset seed");
    dataset->add_option("--out", dataset_args.out, "Output file ('-' for stdout)");

    EncodeArgs encode_args;
    auto *encode = app.add_subcommand("encode", "Encode each window and report Bloch angles");
    encode->add_option("--in", encode_args.in, "Sequence file ('-' for stdin)")->required();
    encode->add_option("--init", encode_args.init, "Initial state: zero or plus");
    encode->add_option("--emit-qasm", encode_args.qasm_dir, "Write one .qasm circuit per window into DIR");
    encode->add_option("--out", encode_args.out, "Report file ('-' for stdout)");

    RunArgs run_args;
    auto *run = app.add_subcommand("run", "Sample and decode every window; write aggregated statistics");
    run->add_option("--in", run_args.in, "Sequence file ('-' for stdin)")->required();
    run->add_option("--shots", run_args.shots, "Shots per repetition (N)");
    run->add_option("--reps", run_args.reps, "Repetitions per window (n)");
    run->add_option("--noise", run_args.noise_file, "Backend calibration file (.cal)");
    run->add_option("--qubit", run_args.qubit, "Calibrated qubit index");
    run->add_option("--gate-time-us", run_args.gate_time_us, "Gate duration for amplitude damping (us)");
    run->add_flag("--no-damping", run_args.no_damping, "Disable amplitude damping");
    run->add_option("--readout-flip", run_args.readout_flip, "Custom symmetric readout flip probability");
    run->add_option("--gate-depolarizing", run_args.gate_depolarizing, "Custom per-gate Pauli error probability");
    run->add_option("--init", run_args.init, "Initial state: zero or plus");
    run->add_option("--seed", run_args.seed, "Master seed");
    run->add_option("--workers", run_args.workers, "Worker threads (0 = hardware concurrency)");
    run->add_option("--out", run_args.out, "Results CSV ('-' for stdout)");
    run->add_option("--reps-out", run_args.reps_out, "Per-repetition CSV");
    run->add_option("--plot-data", run_args.plot_data, "gnuplot data file");

    OnlineArgs online_args;
    auto *online = app.add_subcommand("online", "Simulate the robot world and update the state per event");
    online->add_option("--tau", online_args.tau, "Window length")->required();
    online->add_option("--windows", online_args.windows, "Number of windows")->required();
    online->add_option("--world-config", online_args.world_config, "key=value world parameters");
    online->add_option("--init", online_args.init, "Initial state: zero or plus");
    online->add_option("--shots", online_args.shots, "Shots per window");
    online->add_option("--seed", online_args.seed, "Measurement seed");
    online->add_option("--out", online_args.out, "Output CSV ('-' for stdout)");
    online->add_option("--trace", online_args.trace, "Pose trace CSV (t,x,y,alpha)");

    ReportArgs report_args;
    auto *report = app.add_subcommand("report", "Format a results CSV");
    report->add_option("--in", report_args.in, "Results CSV ('-' for stdin)")->required();
    report->add_flag("--table2", report_args.table2, "Error table: one eps and one eps_raw row per profile");
    report->add_option("--out", report_args.out, "Output file ('-' for stdout)");

    CheckQasmArgs check_args;
    auto *check = app.add_subcommand("check-qasm", "Parse a circuit file and print its final Bloch angles");
    check->add_option("in", check_args.in, "Circuit file ('-' for stdin)");

    try {
        std::vector<std::string> args = expand_config(argc, argv);
        std::reverse(args.begin(), args.end());
        try {
            app.parse(args);
        } catch (const CLI::ParseError &e) {
            int code = app.exit(e);
            return code == 0 ? kExitOk : kExitUsage;
        }
        if (dataset->parsed()) {
            return cmd_dataset(dataset_args);
        }
        if (encode->parsed()) {
            return cmd_encode(encode_args);
        }
        if (run->parsed()) {
            return cmd_run(run_args);
        }
        if (online->parsed()) {
            return cmd_online(online_args);
        }
        if (report->parsed()) {
            return cmd_report(report_args);
        }
        if (check->parsed()) {
            return cmd_check_qasm(check_args);
        }
    } catch (const UsageError &ex) {
        std::cerr << "usage error: " << ex.what() << "\n";
        return kExitUsage;
    } catch (const CircuitParseError &ex) {
        std::cerr << "parse error: " << ex.what() << "\n";
        return kExitData;
    } catch (const std::exception &ex) {
        std::cerr << "error: " << ex.what() << "\n";
        return kExitData;
    }
    return kExitUsage;
}
