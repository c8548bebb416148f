// SPDX-License-Identifier: Apache-2.0
//
// rissim - system-level simulator for RIS-assisted multi-cell networks
// Copyright (C) 2026 The rissim Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
// http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.
// ------------------------------------------------------------------------

#include "rissim/channel.hpp"
#include "rissim/netsim.hpp"
#include "rissim/ris.hpp"

#include <benchmark/benchmark.h>

#include <random>

namespace
{

using namespace rissim;

constexpr double kLambda = kSpeedOfLight / 2.6e9;

void BM_ArrayPhasorSum(benchmark::State &state)
{
    const int n = static_cast<int>(state.range(0));
    const RISPanel panel{n, n, 0.5, 0.8, {}};
    std::mt19937_64 rng(1);
    std::uniform_real_distribution<double> ang(-kPi, kPi);
    PhaseProfile p;
    p.phases.resize(panel.element_count());
    for (auto &v : p.phases)
        v = ang(rng);
    const ArrayPhasor array(panel, kLambda, p);
    Vec3 g = (kTwoPi / kLambda) * (spherical_unit_vector(80.0, 20.0) + spherical_unit_vector(95.0, -40.0));
    for (auto _ : state)
    {
        benchmark::DoNotOptimize(array.sum(g));
        g.y += 1e-6;
    }
    state.SetItemsProcessed(state.iterations() * panel.element_count());
}
BENCHMARK(BM_ArrayPhasorSum)->Arg(16)->Arg(40);

void BM_ReferencePathPower(benchmark::State &state)
{
    const int n = static_cast<int>(state.range(0));
    BsNode bs;
    bs.pose = {{-100.0, 0.0, 25.0}, {0.0, 0.0}};
    const RISPanel ris{n, n, 0.5, 0.8, {{0.0, 0.0, 15.0}, {180.0, 0.0}}};
    UeNode ue;
    ue.pose = {{-60.0, 50.0, 1.5}, {}};
    const CarrierConfig c;
    for (auto _ : state)
        benchmark::DoNotOptimize(ris_path_power(bs, ris, ue, {}, {80.0, 0.0}, {80.0, 0.0}, c));
}
BENCHMARK(BM_ReferencePathPower)->Arg(16);

void BM_RunDrop(benchmark::State &state)
{
    ScenarioConfig cfg;
    cfg.ris.rows = cfg.ris.cols = static_cast<int>(state.range(0));
    cfg = cfg.resolved();
    int drop = 0;
    for (auto _ : state)
        benchmark::DoNotOptimize(run_drop(cfg, drop++));
}
BENCHMARK(BM_RunDrop)->Arg(16)->Arg(40)->Unit(benchmark::kMillisecond);

void BM_Quantize(benchmark::State &state)
{
    std::mt19937_64 rng(3);
    std::uniform_real_distribution<double> ang(-10.0, 10.0);
    PhaseProfile p;
    p.phases.resize(1600);
    for (auto &v : p.phases)
        v = ang(rng);
    for (auto _ : state)
        benchmark::DoNotOptimize(quantize_phase(p, 2));
}
BENCHMARK(BM_Quantize);

} // namespace

BENCHMARK_MAIN();
