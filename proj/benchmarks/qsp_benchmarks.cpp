// Copyright 2026 The QSP Authors
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

#include <cmath>

#include "benchmark/benchmark.h"
#include "qsp/qsp.hpp"

namespace {

void bm_propagate_n(benchmark::State &state) {
    qsp::TransitionMatrix k{1.255, 1.56, 1.56, -1.255};
    for (auto _ : state) {
        benchmark::DoNotOptimize(qsp::propagate_n(k, {0.825, 0.565}, state.range(0)));
    }
}
BENCHMARK(bm_propagate_n)->RangeMultiplier(8)->Range(8, 4096);

void bm_enumerate_paths(benchmark::State &state) {
    auto channels = qsp::ChannelMatrix::from_signed(1, -1, 2, 1);
    for (auto _ : state) {
        benchmark::DoNotOptimize(qsp::enumerate_paths(channels, {1, 0}, state.range(0), qsp::State::One));
    }
}
BENCHMARK(bm_enumerate_paths)->DenseRange(4, 16, 4);

void bm_mean_over_rotations(benchmark::State &state) {
    auto side = static_cast<std::uint64_t>(state.range(0));
    for (auto _ : state) {
        benchmark::DoNotOptimize(qsp::mean_over_rotations(side / 4, side - side / 4));
    }
}
BENCHMARK(bm_mean_over_rotations)->RangeMultiplier(4)->Range(16, 1024);

void bm_schrodinger_probabilities(benchmark::State &state) {
    qsp::Hamiltonian h{0, 1.56, 1.255, 1};
    double t = 0;
    for (auto _ : state) {
        benchmark::DoNotOptimize(qsp::probabilities(h, {0.825, 0.565}, t));
        t += 1e-3;
    }
}
BENCHMARK(bm_schrodinger_probabilities);

void bm_interpolating_wavefunction(benchmark::State &state) {
    qsp::NormalizedTransition nt = qsp::normalize_unitary({1.255, 1.56, 1.56, -1.255});
    qsp::InitialState c{0.6, 0.8};
    double t = 0;
    for (auto _ : state) {
        benchmark::DoNotOptimize(qsp::interpolating_wavefunction(nt, c, t, 0.5));
        t += 1e-3;
    }
}
BENCHMARK(bm_interpolating_wavefunction);

}  // namespace

BENCHMARK_MAIN();
