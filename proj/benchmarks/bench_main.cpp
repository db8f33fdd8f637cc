/*
 * Copyright (c) 2026, The wflag Authors.
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

#include <benchmark/benchmark.h>

#include "wflag/equations.hpp"
#include "wflag/search.hpp"
#include "wflag/series.hpp"

using namespace wflag;

static void HilbertSeriesG2(benchmark::State& state) {
  const auto rs = build_root_system(GroupType::g2());
  const Coweight mu{state.range(0), 1};
  for (auto _ : state) {
    auto hs = hilbert_series(rs, Weight{3, 2}, mu, 20);
    benchmark::DoNotOptimize(hs);
  }
}
BENCHMARK(HilbertSeriesG2)->Arg(0)->Arg(2)->Arg(4);

static void HilbertSeriesGr26(benchmark::State& state) {
  const auto rs = build_root_system(GroupType::gl(6));
  const Weight lambda{1, 1, 0, 0, 0, 0};
  const Coweight mu{2, 1, 0, 0, -1, -2};
  for (auto _ : state) {
    auto hs = hilbert_series(rs, lambda, mu, 4);
    benchmark::DoNotOptimize(hs);
  }
}
BENCHMARK(HilbertSeriesGr26);

static void ExpandSeries(benchmark::State& state) {
  const auto rs = build_root_system(GroupType::g2());
  const auto hs = hilbert_series(rs, Weight{3, 2}, Coweight{1, 0}, 4);
  for (auto _ : state) {
    auto c = expand(hs, static_cast<int>(state.range(0)));
    benchmark::DoNotOptimize(c);
  }
  state.SetComplexityN(state.range(0));
}
BENCHMARK(ExpandSeries)->RangeMultiplier(4)->Range(16, 4096)->Complexity();

static void EquationOracle(benchmark::State& state) {
  const auto qs = g2_quadrics();
  const auto n = static_cast<int>(state.range(0));
  for (auto _ : state) {
    auto h = graded_hilbert_function(qs, n);
    benchmark::DoNotOptimize(h);
  }
}
BENCHMARK(EquationOracle)->DenseRange(2, 4)->Unit(benchmark::kMillisecond);

static void GroebnerDimension(benchmark::State& state) {
  const auto qs = pfaffians_gr26();
  for (auto _ : state) benchmark::DoNotOptimize(projective_dimension(qs));
}
BENCHMARK(GroebnerDimension)->Unit(benchmark::kMillisecond);

static void SearchG2(benchmark::State& state) {
  const auto rs = build_root_system(GroupType::g2());
  SearchLimits limits;
  limits.threads = 1;
  for (auto _ : state) {
    auto r = enumerate_candidates(rs, Weight{3, 2}, MuBox::symmetric(2, state.range(0)), 1, 6,
                                  SearchTarget::CalabiYau, limits);
    benchmark::DoNotOptimize(r);
  }
}
BENCHMARK(SearchG2)->Arg(1)->Arg(3)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
