// Copyright 2026 The hqsa Authors
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

#include "hqsa/oracle.hpp"
#include "hqsa/protocol.hpp"
#include "hqsa/rng.hpp"

namespace hqsa {
namespace {

ProtocolConfig lattice_config(int rows, int cols) {
  const auto g = square_lattice(rows, cols);
  ProtocolConfig cfg;
  cfg.hamiltonian = build_accreditable(g, CouplingTable::uniform(g, 1.0));
  const auto n = cfg.hamiltonian.qubit_count();
  cfg.target = {identity_layer(n), identity_layer(n), cfg.hamiltonian.sum(), 0.8};
  cfg.theta = 0.2;
  cfg.alpha = 0.9;
  cfg.seed = 3;
  cfg.error.attach(AttachPoint::evolution_1, ErrorChannel::depolarizing(0.1, {1, 2}));
  return cfg;
}

void BM_TrapExecution(benchmark::State& state) {
  const auto cfg = lattice_config(1, static_cast<int>(state.range(0)));
  const auto n = cfg.hamiltonian.qubit_count();
  const TrapOracle oracle(cfg.hamiltonian, cfg.target.t, cfg.error);
  CounterRng rng(11, 1);
  const auto r = draw_trap_randomness(n, rng);
  for (auto _ : state) benchmark::DoNotOptimize(oracle.distribution(r));
}
BENCHMARK(BM_TrapExecution)->DenseRange(2, 8, 2);

void BM_PIncoEnumeration(benchmark::State& state) {
  const auto cfg = lattice_config(1, static_cast<int>(state.range(0)));
  const TrapOracle oracle(cfg.hamiltonian, cfg.target.t, cfg.error);
  for (auto _ : state) benchmark::DoNotOptimize(oracle.p_inco_exact());
}
BENCHMARK(BM_PIncoEnumeration)->DenseRange(2, 3)->Unit(benchmark::kMillisecond);

void BM_RunProtocol(benchmark::State& state) {
  const auto cfg = lattice_config(1, static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(run_protocol(cfg, {1, false}));
}
BENCHMARK(BM_RunProtocol)->Arg(2)->Arg(4)->Unit(benchmark::kMillisecond);

}  // namespace
}  // namespace hqsa
