// Copyright 2026 The Cevian Authors
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

#include <benchmark/benchmark.h>

#include <random>
#include <vector>

#include "cevian/density.h"
#include "cevian/dynamics.h"
#include "cevian/geometry.h"
#include "cevian/maps.h"
#include "cevian/simplex.h"

namespace cevian {
namespace {

AngleTriple Scalene() { return MakeTriple(0.5, 1.0, kPi - 1.5); }

void BM_ApplyWord(benchmark::State& state) {
  std::mt19937_64 rng(1);
  MapWord w;
  for (int i = 0; i < state.range(0); ++i) w.push_back(MapIndex(1 + rng() % 6));
  const AngleTriple t = Scalene();
  for (auto _ : state) benchmark::DoNotOptimize(ApplyWord(w, t));
}
BENCHMARK(BM_ApplyWord)->Arg(8)->Arg(64);

void BM_PreimageWord(benchmark::State& state) {
  const AngleTriple t = Scalene();
  for (auto _ : state) {
    benchmark::DoNotOptimize(PreimageWord(t, static_cast<int>(state.range(0))));
  }
}
BENCHMARK(BM_PreimageWord)->Arg(59);

void BM_Approximate(benchmark::State& state) {
  const AngleTriple start;
  const AngleTriple target = Scalene();
  for (auto _ : state) benchmark::DoNotOptimize(Approximate(start, target, 1e-6));
}
BENCHMARK(BM_Approximate);

void BM_Subdivide(benchmark::State& state) {
  const CenterStrategy strategies[] = {
      CenterStrategy::Centroid(), CenterStrategy::Incenter(),
      CenterStrategy::Gergonne(), CenterStrategy::Lemoine()};
  const CenterStrategy& s = strategies[state.range(0)];
  const AngleTriple t = Scalene();
  for (auto _ : state) benchmark::DoNotOptimize(Subdivide(s, t));
  state.SetLabel(s.name());
}
BENCHMARK(BM_Subdivide)->DenseRange(0, 3);

void BM_EnumerateGeneration(benchmark::State& state) {
  const AngleTriple t = Scalene();
  for (auto _ : state) {
    benchmark::DoNotOptimize(EnumerateGeneration(
        t, CenterStrategy::Centroid(), static_cast<int>(state.range(0))));
  }
}
BENCHMARK(BM_EnumerateGeneration)->Arg(4)->Arg(6);

void BM_SampleWalks(benchmark::State& state) {
  const CenterStrategy s = state.range(0) == 0 ? CenterStrategy::Incenter()
                                               : CenterStrategy::Centroid();
  for (auto _ : state) {
    benchmark::DoNotOptimize(SampleWalks(AngleTriple(), s, 20, 10000, 7));
  }
  state.SetItemsProcessed(state.iterations() * 10000);
  state.SetLabel(s.name());
}
BENCHMARK(BM_SampleWalks)->Arg(0)->Arg(1);

void BM_RegionBounds(benchmark::State& state) {
  const RegionImage r = MakeRegionImage(ParseWord("123456"));
  for (auto _ : state) benchmark::DoNotOptimize(RegionMinAngleBounds(r));
}
BENCHMARK(BM_RegionBounds);

void BM_CdfBounds(benchmark::State& state) {
  const auto thetas = UniformThetaGrid(512);
  for (auto _ : state) {
    benchmark::DoNotOptimize(
        ComputeCdfBounds(static_cast<int>(state.range(0)), thetas));
  }
}
BENCHMARK(BM_CdfBounds)->Arg(4)->Arg(6)->Unit(benchmark::kMillisecond);

}  // namespace
}  // namespace cevian

BENCHMARK_MAIN();
