// Copyright 2026 The sacsphere Authors.
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

// Serial reference vs OpenMP kernels: subdivision and metric reductions.

#include <benchmark/benchmark.h>

#include <map>
#include <string>

#include "sacsphere/meshgen.hpp"
#include "sacsphere/metrics.hpp"
#include "sacsphere/parallel.hpp"
#include "sacsphere/sequence.hpp"

namespace {

using sacsphere::Exec;

const sacsphere::SphericalConfig& level(int l) {
  static std::map<int, sacsphere::SphericalConfig> cache;
  auto it = cache.find(l);
  if (it == cache.end()) {
    const auto seq = sacsphere::parse_sequence("1,1;(4,0)^" + std::to_string(l));
    it = cache.emplace(l, sacsphere::generate(sacsphere::BasePolyhedron::kIcosahedron, seq)).first;
  }
  return it->second;
}

template <Exec E>
void BM_Subdivide(benchmark::State& state) {
  const auto base = sacsphere::base_polyhedron(sacsphere::BasePolyhedron::kIcosahedron);
  const sacsphere::IntegerPair pair(static_cast<int>(state.range(0)), 0);
  for (auto _ : state) {
    auto cfg = sacsphere::subdivide_mesh(base, pair, E);
    benchmark::DoNotOptimize(cfg.points.data());
  }
  state.counters["N"] = static_cast<double>(10 * state.range(0) * state.range(0) + 2);
  state.counters["threads"] = sacsphere::max_threads();
}

template <Exec E>
void BM_Metrics(benchmark::State& state) {
  const auto& cfg = level(static_cast<int>(state.range(0)));
  for (auto _ : state) {
    auto m = sacsphere::compute_metrics(cfg, E);
    benchmark::DoNotOptimize(m.mesh_ratio);
  }
  state.counters["N"] = static_cast<double>(cfg.points.size());
}

}  // namespace

BENCHMARK(BM_Subdivide<Exec::kSerial>)->Arg(16)->Arg(64)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_Subdivide<Exec::kParallel>)->Arg(16)->Arg(64)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_Metrics<Exec::kSerial>)->Arg(2)->Arg(3)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_Metrics<Exec::kParallel>)->Arg(2)->Arg(3)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
