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

#include <cmath>
#include <numbers>

#include "gtest/gtest.h"
#include "oracle.h"
#include "qperc/text.h"

using namespace qperc;

namespace {

std::vector<size_t> tau_backs(const std::vector<EventSequence> &seqs) {
    std::vector<size_t> out;
    for (const auto &s : seqs) {
        out.push_back(s.tau_back());
    }
    return out;
}

}  // namespace

TEST(dataset_targets, grids) {
    EXPECT_EQ(dataset_targets({18, 3, 0}), (std::vector<size_t>{0, 9, 18}));
    EXPECT_EQ(dataset_targets({10, 11, 0}), (std::vector<size_t>{0, 1, 2, 3, 4, 5, 6, 7, 8, 9, 10}));
    EXPECT_EQ(dataset_targets({10, 2, 0}), (std::vector<size_t>{0, 10}));
    EXPECT_EQ(dataset_targets({3, 5, 0}), (std::vector<size_t>{0, 1, 2, 2, 3}));
    auto big = dataset_targets({1000, 101, 0});
    ASSERT_EQ(big.size(), 101u);
    for (size_t i = 0; i < big.size(); i++) {
        EXPECT_EQ(big[i], 10 * i);
    }
    EXPECT_THROW(dataset_targets({10, 1, 0}), std::invalid_argument);
    EXPECT_THROW(dataset_targets({0, 3, 0}), std::invalid_argument);
}

TEST(dataset_targets, invariants) {
    for (size_t tau = 1; tau < 60; tau += 7) {
        for (size_t points = 2; points < 40; points += 5) {
            auto t = dataset_targets({tau, points, 0});
            EXPECT_EQ(t.front(), 0u);
            EXPECT_EQ(t.back(), tau);
            for (size_t i = 1; i < t.size(); i++) {
                EXPECT_LE(t[i - 1], t[i]);
            }
        }
    }
}

TEST(build_dataset, counts_and_determinism) {
    DatasetSpec spec{18, 3, 5};
    auto a = build_dataset(spec);
    EXPECT_EQ(tau_backs(a), (std::vector<size_t>{0, 9, 18}));
    for (const auto &s : a) {
        EXPECT_EQ(s.tau(), 18u);
    }
    EXPECT_EQ(build_dataset(spec), a);
    spec.seed = 6;
    auto b = build_dataset(spec);
    EXPECT_EQ(tau_backs(b), tau_backs(a));
    EXPECT_NE(b[1], a[1]);
}

TEST(random_sequence, permutation_is_uniform) {
    // Each position should hold a back event with probability back/tau.
    Rng rng(9);
    const size_t tau = 6;
    const size_t back = 2;
    const int trials = 60000;
    std::vector<int> hits(tau, 0);
    for (int k = 0; k < trials; k++) {
        EventSequence s = random_sequence(tau, back, rng);
        ASSERT_EQ(s.tau_back(), back);
        for (size_t i = 0; i < tau; i++) {
            hits[i] += s.events()[i] == Event::kBack;
        }
    }
    double p = static_cast<double>(back) / tau;
    for (size_t i = 0; i < tau; i++) {
        EXPECT_NEAR(hits[i] / static_cast<double>(trials), p, 4 * oracle::proportion_sigma(p, trials)) << i;
    }
    EXPECT_THROW(random_sequence(3, 4, rng), std::invalid_argument);
}

TEST(run_plan, accounting_and_endpoints) {
    ExperimentPlan plan;
    plan.entries = build_dataset({10, 11, 1});
    plan.n_shots = 1024;
    plan.n_reps = 5;
    plan.master_seed = 3;
    EXPECT_EQ(plan.total_experiments(), 11u * 5u * 1024u);
    auto results = run_plan(plan);
    ASSERT_EQ(results.size(), 11u);
    EXPECT_EQ(results.front().stats.eps, 0.0);
    EXPECT_EQ(results.back().stats.eps, 0.0);
    for (size_t i = 0; i < results.size(); i++) {
        EXPECT_EQ(results[i].tau1, i);
        EXPECT_EQ(results[i].shots.size(), 5u);
        EXPECT_EQ(results[i].stats.n_reps, 5u);
        for (size_t r = 0; r < 5; r++) {
            EXPECT_EQ(results[i].shots[r].seed, derive_seed(3, i, r));
        }
    }
}

TEST(run_plan, single_shot_full_window) {
    ExperimentPlan plan;
    plan.entries = {EventSequence::parse("BBBB")};
    plan.n_shots = 1;
    plan.n_reps = 1;
    auto results = run_plan(plan);
    EXPECT_EQ(results[0].stats.mean_corrected, 1.0);
    EXPECT_EQ(results[0].stats.eps, 0.0);
}

TEST(run_plan, worker_count_does_not_change_results) {
    ExperimentPlan plan;
    plan.entries = build_dataset({20, 6, 2});
    plan.n_shots = 512;
    plan.n_reps = 7;
    plan.master_seed = 11;
    plan.workers = 1;
    auto serial = run_plan(plan);
    plan.workers = 4;
    auto parallel = run_plan(plan);
    EXPECT_EQ(format_results_csv(plan, serial), format_results_csv(plan, parallel));
    EXPECT_EQ(format_repetitions_csv(serial), format_repetitions_csv(parallel));
}

TEST(run_plan, midpoint_mean_matches_binomial_expectation) {
    ExperimentPlan plan;
    plan.entries = {EventSequence::parse("BBBBBFFFFF")};
    plan.n_shots = 8192;
    plan.n_reps = 30;
    auto r = run_plan(plan)[0];
    // sin^2(pi/4) = 0.5; the mean of 30 proportions has sigma sqrt(0.25 / (30 * 8192)).
    EXPECT_NEAR(r.stats.mean_raw, 0.5, 4 * std::sqrt(0.25 / (30.0 * 8192)));
    EXPECT_LT(r.stats.eps, 5e-3);
    EXPECT_LT(r.stats.eps_raw, 5e-3);
}

TEST(run_plan, readout_noise_closed_form) {
    ExperimentPlan plan;
    plan.entries = {EventSequence::parse("FFFFFFFFFF")};
    plan.noise = NoiseProfile{"flip", NoiseModel{}};
    plan.noise->model.readout_flip = 0.0815;
    auto r = run_plan(plan)[0];
    EXPECT_NEAR(r.stats.mean_corrected, 0.1843073898642082, 0.01);
}

TEST(run_plan, errors_carry_context) {
    ExperimentPlan plan;
    EXPECT_THROW(run_plan(plan), std::invalid_argument);
    plan.entries = {EventSequence::parse("FB")};
    plan.n_shots = 0;
    EXPECT_THROW(run_plan(plan), std::invalid_argument);
    plan.n_shots = 10;
    plan.noise = NoiseProfile{"bad", NoiseModel{}};
    plan.noise->model.readout_flip = 2.0;
    EXPECT_THROW(run_plan(plan), std::invalid_argument);
}

TEST(results_csv, round_trip_and_table) {
    ExperimentPlan plan;
    plan.entries = build_dataset({10, 3, 1});
    plan.n_shots = 256;
    plan.n_reps = 3;
    plan.master_seed = 8;
    auto results = run_plan(plan);
    std::string csv = format_results_csv(plan, results);
    EXPECT_EQ(csv.substr(0, 29), "# rng=mt19937_64+splitmix64\nt");
    auto rows = parse_results_csv(csv);
    ASSERT_EQ(rows.size(), 3u);
    EXPECT_EQ(rows[1].tau1, 5u);
    EXPECT_EQ(rows[1].mean_corrected, results[1].stats.mean_corrected);
    EXPECT_EQ(rows[1].seed, 8u);
    EXPECT_EQ(rows[1].noise_profile, "none");

    std::string table = format_table2(rows);
    EXPECT_NE(table.find("noise_profile=none tau=10 N=256 n=3"), std::string::npos);
    EXPECT_NE(table.find("    tau1"), std::string::npos);
    EXPECT_NE(table.find("     eps           0"), std::string::npos);

    EXPECT_THROW(parse_results_csv("a,b\n1,2\n"), DataError);
    EXPECT_THROW(parse_results_csv(csv + "1,2,3\n"), DataError);
    EXPECT_THROW(parse_results_csv(""), DataError);
}

TEST(plot_data, columns) {
    ExperimentPlan plan;
    plan.entries = {EventSequence::parse("FF"), EventSequence::parse("BB")};
    plan.n_shots = 16;
    plan.n_reps = 2;
    std::string data = format_plot_data(run_plan(plan));
    EXPECT_EQ(data,
              "# f1 mean_raw std_raw mean_corrected std_corrected expected_raw\n"
              "0 0 0 0 0 0\n"
              "1 1 0 1 0 1\n");
}

TEST(run_online, pinned_front_world_decodes_zero) {
    WorldConfig world;
    world.step_sigma = 0.0;
    world.start_x = 2.0;
    world.start_y = 0.0;
    auto records = run_online(world, {InitState::kZero, 10}, {3, 1024, 1});
    ASSERT_EQ(records.size(), 3u);
    for (const auto &r : records) {
        EXPECT_EQ(r.sequence.tau_back(), 0u);
        EXPECT_EQ(r.decoded.corrected, 0.0);
    }
    EXPECT_NEAR(records[2].t_start_s, 20 * world.sample_period_s, 1e-12);
}

TEST(run_online, matches_batch_replay) {
    WorldConfig world;
    world.seed = 44;
    world.step_sigma = 0.6;
    for (InitState init : {InitState::kZero, InitState::kPlus}) {
        EncoderConfig cfg{init, 25};
        auto records = run_online(world, cfg, {40, 256, 2});
        size_t mixed = 0;
        for (const auto &r : records) {
            EXPECT_LE(phase_distance(r.state, encode_batch(r.sequence, cfg)), 1e-12);
            mixed += r.sequence.tau_back() > 0 && r.sequence.tau_front() > 0;
        }
        EXPECT_GT(mixed, 0u);
    }
}

TEST(run_online, deterministic_output) {
    WorldConfig world;
    world.seed = 3;
    EncoderConfig cfg{InitState::kZero, 8};
    std::vector<PoseSample> trace_a;
    std::vector<PoseSample> trace_b;
    std::vector<OnlineRecord> a;
    std::vector<OnlineRecord> b;
    run_online(world, cfg, {5, 128, 9}, [&](const OnlineRecord &r) { a.push_back(r); }, &trace_a);
    run_online(world, cfg, {5, 128, 9}, [&](const OnlineRecord &r) { b.push_back(r); }, &trace_b);
    EXPECT_EQ(format_online_csv(a), format_online_csv(b));
    EXPECT_EQ(format_pose_trace(trace_a), format_pose_trace(trace_b));
    EXPECT_EQ(trace_a.size(), 40u);
    EXPECT_THROW(run_online(world, cfg, {0, 128, 9}), std::invalid_argument);
}
