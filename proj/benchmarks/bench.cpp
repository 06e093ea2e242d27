// Copyright 2026 The loqsim Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <complex>
#include <vector>

#include <benchmark/benchmark.h>

#include "loqsim/loqsim.hpp"

namespace {

using namespace loqsim;

/// One photon per path 1..n with alternating polarization and OAM sign.
PureState ladder_state(int n) {
    std::vector<ModeLabel> modes;
    modes.reserve(static_cast<std::size_t>(n));
    for (int p = 1; p <= n; ++p) {
        modes.push_back(mode(p, (p % 2 == 1) ? Pol::H : Pol::V, (p % 2 == 1) ? 1 : -1));
    }
    return PureState::vacuum().create_photons(modes);
}

/// Brick-wall of beam splitters over n paths; the configuration count grows
/// roughly as 2^n, which is the dominant cost of sparse transform application.
void BM_SplitterLadder(benchmark::State &state) {
    const int n = static_cast<int>(state.range(0));
    const PureState in = ladder_state(n);
    TransformSequence seq;
    for (int p = 1; p + 1 <= n; p += 2) {
        seq.push(beam_splitter(p, p + 1, p, p + 1));
    }
    for (int p = 2; p + 1 <= n; p += 2) {
        seq.push(beam_splitter(p, p + 1, p, p + 1));
    }
    for (auto _ : state) {
        benchmark::DoNotOptimize(seq.apply(in));
    }
}
BENCHMARK(BM_SplitterLadder)->DenseRange(2, 10, 2);

void BM_HyperBellDecompose(benchmark::State &state) {
    Eigen::Vector4cd in;
    in << cplx(0.5, 0.1), cplx(-0.3, 0.2), cplx(0.4, -0.4), cplx(0.2, 0.5);
    in.normalize();
    for (auto _ : state) {
        benchmark::DoNotOptimize(hyper_bell_decompose(in));
    }
}
BENCHMARK(BM_HyperBellDecompose);

void BM_SamBsmStage(benchmark::State &state) {
    const PureState in = hyper_bell_state({SamBell::PhiMinus, OamBell::OmegaPlus}, 1, 2);
    for (auto _ : state) {
        benchmark::DoNotOptimize(sam_bsm_stage(in, 1, 2));
    }
}
BENCHMARK(BM_SamBsmStage);

void BM_FullMeasurementChain(benchmark::State &state) {
    const PureState in = hyper_bell_state({SamBell::PhiMinus, OamBell::OmegaPlus}, 1, 2);
    for (auto _ : state) {
        benchmark::DoNotOptimize(full_hbsm(in, 1, 2, 4, 5));
    }
}
BENCHMARK(BM_FullMeasurementChain);

void BM_TeleportIdeal(benchmark::State &state) {
    const auto ids = all_input_ids();
    const InputStateId id = ids[static_cast<std::size_t>(state.range(0))];
    const NoiseParams noise = NoiseParams::ideal();
    for (auto _ : state) {
        benchmark::DoNotOptimize(run_teleportation(id, noise));
    }
}
BENCHMARK(BM_TeleportIdeal)->DenseRange(0, 4)->Unit(benchmark::kMillisecond);

void BM_TeleportCalibration(benchmark::State &state) {
    const NoiseParams noise = NoiseParams::calibration();
    for (auto _ : state) {
        benchmark::DoNotOptimize(run_teleportation(InputStateId::E, noise));
    }
}
BENCHMARK(BM_TeleportCalibration)->Unit(benchmark::kMillisecond);

void BM_Cascade(benchmark::State &state) {
    const int n = static_cast<int>(state.range(0));
    for (auto _ : state) {
        benchmark::DoNotOptimize(run_cascade(n));
    }
}
BENCHMARK(BM_Cascade)->DenseRange(1, 8);

void BM_CascadeAmplitudeCheck(benchmark::State &state) {
    const int n = static_cast<int>(state.range(0));
    for (auto _ : state) {
        benchmark::DoNotOptimize(amplitude_check(n));
    }
}
BENCHMARK(BM_CascadeAmplitudeCheck)->DenseRange(1, 2);

void BM_HomScan(benchmark::State &state) {
    std::vector<double> delays;
    for (int d = -1200; d <= 1200; d += 100) {
        delays.push_back(static_cast<double>(d));
    }
    for (auto _ : state) {
        benchmark::DoNotOptimize(hom_scan(Interferometer::Bs1, delays, kCoherenceTimeFs, 1.0));
    }
}
BENCHMARK(BM_HomScan);

}  // namespace

BENCHMARK_MAIN();
