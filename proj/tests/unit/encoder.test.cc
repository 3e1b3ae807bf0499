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

#include "qperc/encoder.h"

#include <algorithm>
#include <numbers>
#include <random>

#include "gtest/gtest.h"
#include "oracle.h"

using namespace qperc;

namespace {

constexpr double kPi = std::numbers::pi;

EventSequence with_counts(size_t tau, size_t back) {
    std::vector<Event> ev(tau, Event::kFront);
    for (size_t k = 0; k < back; k++) {
        ev[k] = Event::kBack;
    }
    return EventSequence(std::move(ev));
}

}  // namespace

TEST(event_sequence, parse_and_format) {
    EventSequence s = EventSequence::parse("FFBFBF");
    EXPECT_EQ(s.tau(), 6u);
    EXPECT_EQ(s.tau_back(), 2u);
    EXPECT_EQ(s.tau_front(), 4u);
    EXPECT_EQ(s.to_string(), "FFBFBF");
    EXPECT_THROW(EventSequence::parse(""), std::invalid_argument);
    EXPECT_THROW(EventSequence::parse("FF B"), std::invalid_argument);
    EXPECT_THROW(EventSequence::parse("FFX"), std::invalid_argument);
    EXPECT_THROW(EventSequence(std::vector<Event>{static_cast<Event>(7)}), std::invalid_argument);
}

TEST(event_sequence, file_format) {
    auto seqs = parse_sequence_file("FFB\nBBB\n");
    ASSERT_EQ(seqs.size(), 2u);
    EXPECT_EQ(format_sequence_file(seqs), "FFB\nBBB\n");
    EXPECT_EQ(parse_sequence_file("FB").size(), 1u);
    try {
        parse_sequence_file("FFB\n\nBB\n");
        FAIL();
    } catch (const std::invalid_argument &ex) {
        EXPECT_NE(std::string(ex.what()).find("line 2"), std::string::npos);
    }
    EXPECT_THROW(parse_sequence_file("FFB \n"), std::invalid_argument);
}

TEST(relative_frequency, examples) {
    EventSequence s = with_counts(12, 3);
    EXPECT_EQ(relative_frequency(s, Event::kBack), 0.25);
    EXPECT_EQ(relative_frequency(s, Event::kFront), 0.75);
    EXPECT_EQ(relative_frequency(with_counts(7, 0), Event::kBack), 0.0);

    std::mt19937_64 gen(21);
    for (int k = 0; k < 50; k++) {
        EventSequence r = oracle::random_events(gen, 10);
        EXPECT_EQ(relative_frequency(r, Event::kBack), oracle::count_events(r, Event::kBack) / 10.0);
        EXPECT_EQ(relative_frequency(r, Event::kBack) + relative_frequency(r, Event::kFront), 1.0);
    }
}

TEST(event_operator, examples) {
    EXPECT_EQ(event_operator(Event::kFront, {InitState::kZero, 10}), Unitary2::identity());
    EXPECT_EQ(event_operator(Event::kBack, {InitState::kZero, 4}), rotation_y(kPi / 4));
    // exp(-i pi sigma_y / (4 tau)) rewritten as R_y(pi / (2 tau)).
    Unitary2 plus_back = event_operator(Event::kBack, {InitState::kPlus, 10});
    EXPECT_LE(oracle::max_diff(oracle::ry_exponential(kPi / 20), plus_back), 1e-15);
    Unitary2 plus_front = event_operator(Event::kFront, {InitState::kPlus, 10});
    EXPECT_LE(oracle::max_diff(oracle::ry_exponential(-kPi / 20), plus_front), 1e-15);
    EXPECT_THROW(event_operator(Event::kBack, {InitState::kZero, 0}), std::invalid_argument);
}

TEST(encode_batch, worked_example) {
    QubitState s = encode_batch(with_counts(12, 3), {InitState::kZero, 12});
    EXPECT_LE(phase_distance(s, apply(rotation_y(kPi / 4), QubitState::zero())), 1e-15);
    EXPECT_NEAR(bloch_from_state(s).theta, kPi / 4, 1e-15);
}

TEST(encode_batch, no_back_events_is_ground_state) {
    EXPECT_EQ(encode_batch(with_counts(9, 0), {InitState::kZero, 9}), QubitState::zero());
}

TEST(encode_batch, midpoint_either_init) {
    for (InitState init : {InitState::kZero, InitState::kPlus}) {
        QubitState s = encode_batch(with_counts(10, 5), {init, 10});
        EXPECT_NEAR(bloch_from_state(s).theta, kPi / 2, 1e-12);
        EXPECT_NEAR(s.prob_one(), 0.5, 1e-12);
    }
}

TEST(encode_batch, length_mismatch) {
    EXPECT_THROW(encode_batch(with_counts(10, 5), {InitState::kZero, 11}), std::invalid_argument);
}

TEST(encode_batch, encoding_law) {
    for (size_t tau = 1; tau <= 1000; tau = tau < 20 ? tau + 1 : tau * 3 / 2) {
        for (size_t back = 0; back <= tau; back += std::max<size_t>(1, tau / 17)) {
            for (InitState init : {InitState::kZero, InitState::kPlus}) {
                QubitState s = encode_batch(with_counts(tau, back), {init, tau});
                double f = static_cast<double>(back) / static_cast<double>(tau);
                EXPECT_NEAR(bloch_from_state(s).theta, kPi * f, 1e-10) << tau << " " << back;
                if (init == InitState::kZero) {
                    EXPECT_EQ(bloch_from_state(s).phi, 0.0) << tau << " " << back;
                }
                double expected_p1 = std::pow(std::sin(kPi * f / 2), 2);
                EXPECT_NEAR(s.prob_one(), expected_p1, 1e-10);
            }
        }
    }
}

TEST(encode_batch, order_invariance) {
    std::mt19937_64 gen(22);
    for (int k = 0; k < 100; k++) {
        EventSequence s = oracle::random_events(gen, 1 + gen() % 40);
        std::vector<Event> shuffled = s.events();
        std::shuffle(shuffled.begin(), shuffled.end(), gen);
        EncoderConfig cfg{k % 2 ? InitState::kPlus : InitState::kZero, s.tau()};
        EXPECT_LE(phase_distance(encode_batch(s, cfg), encode_batch(EventSequence(shuffled), cfg)), 1e-12);
    }
}

TEST(encode_batch, init_variants_agree) {
    std::mt19937_64 gen(23);
    for (int k = 0; k < 200; k++) {
        EventSequence s = oracle::random_events(gen, 1 + gen() % 100);
        QubitState a = encode_batch(s, {InitState::kZero, s.tau()});
        QubitState b = encode_batch(s, {InitState::kPlus, s.tau()});
        EXPECT_LE(phase_distance(a, b), 1e-12);
    }
}

TEST(online_update, examples) {
    EncoderConfig cfg{InitState::kZero, 4};
    EXPECT_EQ(online_update(QubitState::zero(), Event::kFront, cfg), QubitState::zero());
    QubitState one = online_update(QubitState::zero(), Event::kBack, cfg);
    EXPECT_NEAR(bloch_from_state(one).theta, kPi / 4, 1e-15);
}

TEST(online_update, fold_matches_batch) {
    std::mt19937_64 gen(24);
    for (int k = 0; k < 200; k++) {
        EventSequence s = oracle::random_events(gen, 20);
        EncoderConfig cfg{k % 2 ? InitState::kPlus : InitState::kZero, 20};
        QubitState state = initial_state(cfg);
        for (Event e : s.events()) {
            state = online_update(state, e, cfg);
        }
        EXPECT_LE(phase_distance(state, encode_batch(s, cfg)), 1e-12);
    }
}

TEST(perception_session, window_lifecycle) {
    PerceptionSession session({InitState::kZero, 3});
    EXPECT_FALSE(session.complete());
    session.push(Event::kBack);
    session.push(Event::kFront);
    EXPECT_EQ(session.events_seen(), 2u);
    EXPECT_FALSE(session.complete());
    session.push(Event::kBack);
    EXPECT_TRUE(session.complete());
    EXPECT_NEAR(bloch_from_state(session.state()).theta, 2 * kPi / 3, 1e-15);
    EXPECT_THROW(session.push(Event::kBack), std::logic_error);
    session.reset();
    EXPECT_EQ(session.state(), QubitState::zero());
    EXPECT_EQ(session.events_seen(), 0u);
    EXPECT_THROW(PerceptionSession({InitState::kZero, 0}), std::invalid_argument);
}
