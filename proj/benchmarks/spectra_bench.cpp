/*
 * Copyright 2026 The optotriplet Authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     https://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

#include <benchmark/benchmark.h>

#include "optotriplet/grid.hpp"
#include "optotriplet/optimizer.hpp"
#include "optotriplet/params.hpp"
#include "optotriplet/spectra.hpp"
#include "optotriplet/sweep.hpp"

namespace optotriplet {
namespace {

void BM_Coeffs(benchmark::State& state) {
  const DerivedParams d = derive(table1_preset());
  double w = 1e4;
  for (auto _ : state) {
    benchmark::DoNotOptimize(coeffs(d, w));
    w = w < 1e6 ? w * 1.001 : 1e4;
  }
}
BENCHMARK(BM_Coeffs);

void BM_AnalyticOptimum(benchmark::State& state) {
  const DerivedParams d = derive(table1_preset());
  const CoeffSet c = coeffs(d, 3e5);
  for (auto _ : state) {
    const Complex y = y_opt_analytic(c);
    benchmark::DoNotOptimize(s_qu(c, y));
  }
}
BENCHMARK(BM_AnalyticOptimum);

void BM_NumericOptimum(benchmark::State& state) {
  const DerivedParams d = derive(table1_preset());
  const CoeffSet c = coeffs(d, 3e5);
  for (auto _ : state) {
    benchmark::DoNotOptimize(y_opt_numeric(c, Complex(0.0, 0.0), 1e-10));
  }
}
BENCHMARK(BM_NumericOptimum);

void BM_Sweep(benchmark::State& state) {
  const DerivedParams d = derive(table1_preset());
  const auto grid = default_grid(d.tau).build();
  for (auto _ : state) {
    benchmark::DoNotOptimize(spectrum_sweep(d, grid, YPolicy::analytic_optimal()));
  }
  state.SetItemsProcessed(state.iterations() * static_cast<int64_t>(grid.size()));
}
BENCHMARK(BM_Sweep);

}  // namespace
}  // namespace optotriplet
