// Copyright 2026 The Authors.
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

#include "matext/ak.h"
#include "matext/catalog.h"
#include "matext/dl.h"
#include "matext/lp.h"

namespace matext {
namespace {

void BM_FlatsTicTacToe(benchmark::State& state) {
  for (auto _ : state) {
    const Matroid m = TicTacToe();
    benchmark::DoNotOptimize(m.flats().size());
  }
}
BENCHMARK(BM_FlatsTicTacToe);

void BM_SingleAkLp(benchmark::State& state) {
  const Matroid m = TicTacToeDual();
  const AKSequence seq = {{StepKind::kAk, 0b000011011, 0b011000000, ""}};
  const PolymatroidLP lp = BuildSequenceLP(m, seq);
  for (auto _ : state) benchmark::DoNotOptimize(Solve(lp).status);
}
BENCHMARK(BM_SingleAkLp)->Unit(benchmark::kMillisecond);

void BM_TwoStepAkLp(benchmark::State& state) {
  const Matroid m = TicTacToeDual();
  const AKSequence seq = {{StepKind::kAk, 0b000011011, 0b011000000, ""},
                          {StepKind::kAk, 0b000110110, 0b110000000, ""}};
  const PolymatroidLP lp = BuildSequenceLP(m, seq);
  for (auto _ : state) benchmark::DoNotOptimize(Solve(lp).status);
}
BENCHMARK(BM_TwoStepAkLp)->Unit(benchmark::kMillisecond);

void BM_OneAkFiltered(benchmark::State& state) {
  const Matroid m = TicTacToe();
  AKOptions o;
  o.scan_all_pairs = true;
  for (auto _ : state) benchmark::DoNotOptimize(CheckOneAk(m, o).verdict);
}
BENCHMARK(BM_OneAkFiltered)->Unit(benchmark::kMillisecond);

void BM_VamosOneDl(benchmark::State& state) {
  const Matroid m = Vamos();
  for (auto _ : state) benchmark::DoNotOptimize(IsKDL(m, 1).verdict);
}
BENCHMARK(BM_VamosOneDl)->Unit(benchmark::kMillisecond);

}  // namespace
}  // namespace matext

BENCHMARK_MAIN();
