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

#include <random>

#include "benchmark/benchmark.h"
#include "qperc/circuit.h"
#include "qperc/encoder.h"
#include "qperc/sampler.h"

using namespace qperc;

namespace {

EventSequence make_sequence(size_t tau) {
    std::mt19937_64 gen(tau);
    std::vector<Event> ev(tau);
    for (auto &e : ev) {
        e = (gen() & 1) ? Event::kBack : Event::kFront;
    }
    return EventSequence(std::move(ev));
}

}  // namespace

static void encode_batch_zero(benchmark::State &state) {
    EventSequence s = make_sequence(static_cast<size_t>(state.range(0)));
    EncoderConfig cfg{InitState::kZero, s.tau()};
    for (auto _ : state) {
        benchmark::DoNotOptimize(encode_batch(s, cfg));
    }
}
BENCHMARK(encode_batch_zero)->Arg(10)->Arg(1000);

static void online_session(benchmark::State &state) {
    EventSequence s = make_sequence(static_cast<size_t>(state.range(0)));
    EncoderConfig cfg{InitState::kZero, s.tau()};
    for (auto _ : state) {
        PerceptionSession session(cfg);
        for (Event e : s.events()) {
            session.push(e);
        }
        benchmark::DoNotOptimize(session.state());
    }
}
BENCHMARK(online_session)->Arg(10)->Arg(1000);

static void measure_noiseless(benchmark::State &state) {
    QubitState q = apply(rotation_y(1.0), QubitState::zero());
    uint64_t seed = 0;
    for (auto _ : state) {
        benchmark::DoNotOptimize(measure_shots(q, 8192, std::nullopt, seed++));
    }
    state.SetItemsProcessed(state.iterations() * 8192);
}
BENCHMARK(measure_noiseless);

static void noisy_encode(benchmark::State &state) {
    EventSequence s = make_sequence(10);
    EncoderConfig cfg{InitState::kZero, 10};
    NoiseModel noise;
    noise.readout_flip = 0.0815;
    noise.gate_depolarizing = 7.9e-4;
    noise.gate_time_us = 0.1;
    noise.t1_us = 144.3;
    uint64_t seed = 0;
    for (auto _ : state) {
        benchmark::DoNotOptimize(noisy_encode_shots(s, cfg, 8192, noise, seed++));
    }
    state.SetItemsProcessed(state.iterations() * 8192);
}
BENCHMARK(noisy_encode);

static void emit_parse(benchmark::State &state) {
    Circuit c = compile(make_sequence(static_cast<size_t>(state.range(0))),
                        {InitState::kPlus, static_cast<size_t>(state.range(0))});
    for (auto _ : state) {
        benchmark::DoNotOptimize(parse(emit(c)));
    }
}
BENCHMARK(emit_parse)->Arg(1000);

BENCHMARK_MAIN();
