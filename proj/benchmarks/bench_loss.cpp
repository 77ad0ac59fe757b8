// Copyright 2026 The piezoloss authors.

// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at

//     http://www.apache.org/licenses/LICENSE-2.0

// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <benchmark/benchmark.h>

#include "piezoloss/piezoloss.hpp"

using namespace piezoloss;
using constants::micron;
using constants::pi;

namespace {

const MaterialDatabase& db()
{
    static const MaterialDatabase instance = MaterialDatabase::builtin();
    return instance;
}

ThermalState table_state()
{
    return ThermalState{2.0 * pi * 10e9, 0.010, 1.0};
}

StackProfile fig_strip()
{
    return microstrip_profile(20 * micron, 2 * micron, 0.2 * micron, db().material("Al"),
                              db().material("Al2O3"), db());
}

void BM_closed_form_interface(benchmark::State& state)
{
    const auto& e = db().interface("Al/vacuum");
    const ThermalState ts = table_state();
    const SideMedium a = db().medium(e.side_minus);
    const SideMedium b = db().medium(e.side_plus);
    const SideMedium eps = db().medium(e.eps_host);
    for (auto _ : state)
        benchmark::DoNotOptimize(interface_tan_delta(e.t_i, e.g_i, a, b, eps, ts));
}
BENCHMARK(BM_closed_form_interface);

void BM_golden_rule_microstrip(benchmark::State& state)
{
    const StackProfile strip = fig_strip();
    const ThermalState ts = table_state();
    for (auto _ : state)
        benchmark::DoNotOptimize(golden_rule_loss(strip, PlaneWaveTransverse{}, ts).inverse_q);
}
BENCHMARK(BM_golden_rule_microstrip);

void BM_real_space_slab(benchmark::State& state)
{
    // oscillatory 2D quadrature workload; L in phonon wavelengths
    const double wavelengths = static_cast<double>(state.range(0));
    const Material quartz = db().material("SiO2");
    const ThermalState ts = table_state();
    const double lambda = 2.0 * pi * quartz.sound_velocity / ts.omega;
    std::vector<PiezoElement> elements;
    elements.push_back(Slab{0.09, -wavelengths * lambda, 0.0, quartz, "S"});
    const StackProfile profile = build_stack(std::move(elements), 1e-14, 1e-8);
    for (auto _ : state)
        benchmark::DoNotOptimize(real_space_loss(profile, PlaneWaveTransverse{}, ts).inverse_q);
}
BENCHMARK(BM_real_space_slab)->Arg(1)->Arg(4)->Arg(16);

void BM_spectrum_sweep(benchmark::State& state)
{
    const StackProfile strip = fig_strip();
    const std::map<std::string, double> participation{
        {"MV", 6.5e-6}, {"DV", 2.9e-4}, {"DM", 2.9e-3}};
    SweepOptions options;
    options.threads = static_cast<int>(state.range(0));
    for (auto _ : state) {
        benchmark::DoNotOptimize(
            microstrip_spectrum(strip, participation, 1e9, 20e9, 256, table_state(), options));
    }
}
BENCHMARK(BM_spectrum_sweep)->Arg(1)->Arg(2)->Arg(0);

} // namespace

BENCHMARK_MAIN();
