/*
 * Copyright 2026 The Lanetrack Authors
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

// Serial vs OpenMP timings for the data-parallel kernels.

#include <random>
#include <vector>

#include <benchmark/benchmark.h>

#include "lanetrack/kernels.h"
#include "lanetrack/track.h"

namespace lanetrack {
namespace {

std::vector<Point2> RandomPoints(size_t n) {
  std::mt19937_64 rng(7);
  std::uniform_real_distribution<double> u(-40.0, 80.0);
  std::vector<Point2> pts(n);
  for (Point2& p : pts) p = {u(rng), u(rng)};
  return pts;
}

template <bool kParallel>
void BM_ProjectOntoPath(benchmark::State& state) {
  const TrackGeometry g(MakeFixtureTrack("figure_course"));
  const auto pts = RandomPoints(static_cast<size_t>(state.range(0)));
  for (auto _ : state) {
    auto out = kParallel ? ProjectOntoPath(pts, g.reference())
                         : ProjectOntoPathSerial(pts, g.reference());
    benchmark::DoNotOptimize(out.data());
  }
  state.SetItemsProcessed(state.iterations() * state.range(0));
  state.counters["threads"] = kParallel ? KernelThreads() : 1;
}
BENCHMARK(BM_ProjectOntoPath<false>)->Arg(1000)->Arg(20000);
BENCHMARK(BM_ProjectOntoPath<true>)->Arg(1000)->Arg(20000);

std::vector<Scenario> Batch(int n) {
  std::vector<Scenario> runs;
  for (int i = 0; i < n; ++i) {
    Scenario s;
    s.track = MakeFixtureTrack("oval");
    s.mode = i % 2 ? SimMode::kVision : SimMode::kPresetPath;
    s.duration_max = 5.0;
    s.rng_seed = static_cast<std::uint64_t>(i + 1);
    runs.push_back(s);
  }
  return runs;
}

template <bool kParallel>
void BM_RunBatch(benchmark::State& state) {
  const auto runs = Batch(static_cast<int>(state.range(0)));
  for (auto _ : state) {
    auto logs = kParallel ? RunBatch(runs) : RunBatchSerial(runs);
    benchmark::DoNotOptimize(logs.data());
  }
  state.SetItemsProcessed(state.iterations() * state.range(0));
  state.counters["threads"] = kParallel ? KernelThreads() : 1;
}
BENCHMARK(BM_RunBatch<false>)->Arg(4)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_RunBatch<true>)->Arg(4)->Unit(benchmark::kMillisecond);

}  // namespace
}  // namespace lanetrack

BENCHMARK_MAIN();
