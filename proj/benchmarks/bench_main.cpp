// SPDX-License-Identifier: Apache-2.0
//
// radioprop - propagation measurement analysis toolkit
// Copyright (C) 2026 radioprop contributors
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

#include <random>
#include <string>
#include <vector>

#include <benchmark/benchmark.h>

#include "radioprop/geo.hpp"
#include "radioprop/measurements.hpp"
#include "radioprop/pathloss.hpp"
#include "radioprop/shadowing.hpp"
#include "radioprop/smallscale.hpp"

namespace {

std::string make_csv(std::size_t rows) {
    std::mt19937_64 rng(99);
    std::uniform_real_distribution<double> lat(12.9, 13.1), lon(80.1, 80.3), val(-120.0, -60.0);
    std::string text = "lon,lat,val\n";
    for (std::size_t i = 0; i < rows; ++i) {
        text += radioprop::to_decimal_string(lon(rng)) + "," +
                radioprop::to_decimal_string(lat(rng)) + "," +
                radioprop::to_decimal_string(val(rng)) + "\n";
    }
    return text;
}

std::vector<double> make_gaussian(std::size_t n) {
    std::mt19937_64 rng(7);
    std::normal_distribution<double> dist(-85.0, 6.0);
    std::vector<double> v(n);
    for (auto &x : v)
        x = dist(rng);
    return v;
}

void BM_quantize_rsrp(benchmark::State &state) {
    double x = -140.0;
    for (auto _ : state) {
        benchmark::DoNotOptimize(radioprop::quantize_rsrp(x));
        x += 0.37;
        if (x > -44.0)
            x = -140.0;
    }
}
BENCHMARK(BM_quantize_rsrp);

void BM_invert_umi_nlos(benchmark::State &state) {
    const radioprop::UmiNlosModel model{2.32};
    double pl = 100.0;
    for (auto _ : state) {
        benchmark::DoNotOptimize(radioprop::invert_umi_nlos_m(model, pl));
        pl += 0.13;
        if (pl > 150.0)
            pl = 100.0;
    }
}
BENCHMARK(BM_invert_umi_nlos);

void BM_parse_measurement_csv(benchmark::State &state) {
    const std::string text = make_csv(static_cast<std::size_t>(state.range(0)));
    for (auto _ : state)
        benchmark::DoNotOptimize(radioprop::parse_measurement_csv(text));
    state.SetBytesProcessed(static_cast<std::int64_t>(state.iterations() * text.size()));
}
BENCHMARK(BM_parse_measurement_csv)->Arg(100)->Arg(10000);

void BM_simulate_envelope(benchmark::State &state) {
    radioprop::MultipathConfig cfg;
    cfg.n_paths = static_cast<int>(state.range(0));
    cfg.velocity_mps = 30.0;
    cfg.fc_hz = 1.0e9;
    cfg.seed = 11;
    for (auto _ : state)
        benchmark::DoNotOptimize(radioprop::simulate_envelope(cfg, 1.0, 10000.0));
    state.SetItemsProcessed(state.iterations() * 10000);
}
BENCHMARK(BM_simulate_envelope)->Arg(8)->Arg(64);

void BM_fit_shadowing(benchmark::State &state) {
    const auto samples = make_gaussian(static_cast<std::size_t>(state.range(0)));
    for (auto _ : state)
        benchmark::DoNotOptimize(radioprop::fit_shadowing(samples, 1.0));
    state.SetItemsProcessed(state.iterations() * state.range(0));
}
BENCHMARK(BM_fit_shadowing)->Arg(1000)->Arg(100000);

void BM_rayleigh_fit(benchmark::State &state) {
    radioprop::MultipathConfig cfg;
    cfg.n_paths = 64;
    cfg.velocity_mps = 30.0;
    cfg.fc_hz = 1.0e9;
    cfg.seed = 11;
    const auto env =
        radioprop::envelope(radioprop::simulate_envelope(cfg, 1.0, state.range(0) * 1.0));
    for (auto _ : state)
        benchmark::DoNotOptimize(radioprop::estimate_rayleigh_scale(env));
    state.SetItemsProcessed(state.iterations() * state.range(0));
}
BENCHMARK(BM_rayleigh_fit)->Arg(10000)->Arg(100000);

void BM_haversine(benchmark::State &state) {
    const radioprop::GeoPoint a{13.0801464, 80.2260452};
    radioprop::GeoPoint b{13.0804985, 80.2257557};
    for (auto _ : state) {
        benchmark::DoNotOptimize(radioprop::haversine_m(a, b));
        b.lat_deg += 1e-7;
        if (b.lat_deg > 14.0)
            b.lat_deg = 13.0;
    }
}
BENCHMARK(BM_haversine);

} // namespace

BENCHMARK_MAIN();
