// Copyright 2026 The dqcbench Authors
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

#include <benchmark/benchmark.h>

#include "dqcbench/circuits.hpp"
#include "dqcbench/noisemodel.hpp"
#include "dqcbench/sim.hpp"
#include "dqcbench/topology.hpp"

namespace {

using namespace dqcbench;
using topology::TopologyKind;

topology::ExtendedGraph grid(int n) { return topology::standard_topology(TopologyKind::Grid2D, n, true); }

void BM_AllocationSerial(benchmark::State& state) {
  const auto g = grid(static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(noisemodel::allocation_matrix_serial(g, true));
}

void BM_AllocationParallel(benchmark::State& state) {
  const auto g = grid(static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(noisemodel::allocation_matrix(g, true));
}

struct NoisyCase {
  circuits::PhysicalCircuit pc;
  sim::NoiseAttachment noise;
};

NoisyCase noisy_case(int n) {
  const auto g = topology::standard_topology(TopologyKind::Line1D, n, true);
  NoisyCase c{circuits::compile(sim::benchmark_circuit(n, 1, 0), g),
              sim::NoiseAttachment::from_spec(noisemodel::NoiseSpec::uniform(g, 0.003, 0.003))};
  return c;
}

void BM_RunNoisySerial(benchmark::State& state) {
  const auto c = noisy_case(static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(sim::run_noisy_serial(c.pc, c.noise, 2000, 1));
}

void BM_RunNoisyParallel(benchmark::State& state) {
  const auto c = noisy_case(static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(sim::run_noisy(c.pc, c.noise, 2000, 1));
}

void BM_BenchmarkSerial(benchmark::State& state) {
  const auto g = topology::standard_topology(TopologyKind::Line1D, static_cast<int>(state.range(0)), false);
  const auto noise = sim::NoiseAttachment::from_spec(noisemodel::NoiseSpec::uniform(g, 0.0015));
  for (auto _ : state) benchmark::DoNotOptimize(sim::run_benchmark_serial(g, noise, {16, 1000, 1}));
}

void BM_BenchmarkParallel(benchmark::State& state) {
  const auto g = topology::standard_topology(TopologyKind::Line1D, static_cast<int>(state.range(0)), false);
  const auto noise = sim::NoiseAttachment::from_spec(noisemodel::NoiseSpec::uniform(g, 0.0015));
  for (auto _ : state) benchmark::DoNotOptimize(sim::run_benchmark(g, noise, {16, 1000, 1}));
}

}  // namespace

BENCHMARK(BM_AllocationSerial)->Arg(8)->Arg(12)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_AllocationParallel)->Arg(8)->Arg(12)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_RunNoisySerial)->Arg(6)->Arg(8)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_RunNoisyParallel)->Arg(6)->Arg(8)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_BenchmarkSerial)->Arg(6)->Arg(8)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_BenchmarkParallel)->Arg(6)->Arg(8)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
