// Copyright 2026 The lightcone authors
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

#include "lightcone/bounds.hpp"
#include "lightcone/evolve.hpp"
#include "lightcone/liouvillian.hpp"
#include "lightcone/model.hpp"

namespace {

using namespace lightcone;

void BM_BuildLindbladian(benchmark::State& state) {
  const auto model = catalog_dephasing_chain(int(state.range(0)), 0.5);
  for (auto _ : state) {
    benchmark::DoNotOptimize(build_lindbladian(model));
  }
}
BENCHMARK(BM_BuildLindbladian)->Arg(11)->Arg(21)->Arg(31);

void BM_BuildDeformedGenerator(benchmark::State& state) {
  const auto model = catalog_hopping_chain(int(state.range(0)), 1.0);
  const Complex zeta(0.0, 0.4);
  for (auto _ : state) {
    benchmark::DoNotOptimize(build_deformed_generator(model, zeta, -zeta));
  }
}
BENCHMARK(BM_BuildDeformedGenerator)->Arg(11)->Arg(21)->Arg(31);

void BM_Propagator(benchmark::State& state) {
  const auto model = catalog_dephasing_chain(int(state.range(0)), 0.5);
  const Superoperator generator = build_lindbladian(model);
  for (auto _ : state) {
    benchmark::DoNotOptimize(propagator(generator, 1.0));
  }
}
BENCHMARK(BM_Propagator)->Arg(9)->Arg(13)->Arg(21)->Unit(benchmark::kMillisecond);

void BM_S1AscentRestart(benchmark::State& state) {
  const auto model = catalog_dephasing_chain(13, 0.5);
  const Superoperator e = propagator(build_lindbladian(model), 1.0);
  for (auto _ : state) {
    benchmark::DoNotOptimize(s1_opnorm_lower(e, int(state.range(0)), 7));
  }
}
BENCHMARK(BM_S1AscentRestart)->Arg(1)->Arg(4)->Unit(benchmark::kMillisecond);

void BM_VelocityCPrime(benchmark::State& state) {
  const auto model = catalog_hopping_chain(int(state.range(0)), 1.0);
  for (auto _ : state) {
    benchmark::DoNotOptimize(velocity_c_prime(model, 0.4));
  }
}
BENCHMARK(BM_VelocityCPrime)->Arg(41)->Arg(128);

}  // namespace

BENCHMARK_MAIN();
