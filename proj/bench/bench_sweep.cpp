/* Copyright 2026 The plactic Authors. All Rights Reserved.
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *    http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 * ========================================================================= */


#include <benchmark/benchmark.h>

#include "plactic/schensted.hpp"
#include "plactic/sweep.hpp"

using namespace plactic;

namespace {

void BM_VerifySerial(benchmark::State& state) {
  SweepConfig c;
  c.n       = static_cast<std::size_t>(state.range(0));
  c.max_len = 4;
  for (auto _ : state) {
    benchmark::DoNotOptimize(verify_gs_basis_serial(c));
  }
  state.SetItemsProcessed(state.iterations() * count_rows(Alphabet(c.n), 4)
                          * count_rows(Alphabet(c.n), 4)
                          * count_rows(Alphabet(c.n), 4));
}
BENCHMARK(BM_VerifySerial)
    ->Arg(3)
    ->Arg(4)
    ->UseRealTime()
    ->Unit(benchmark::kMillisecond);

void BM_VerifyParallel(benchmark::State& state) {
  SweepConfig c;
  c.n       = static_cast<std::size_t>(state.range(0));
  c.max_len = 4;
  auto const exec = Execution::with_threads(static_cast<int>(state.range(1)));
  for (auto _ : state) {
    benchmark::DoNotOptimize(verify_gs_basis(c, exec));
  }
  state.SetItemsProcessed(state.iterations() * count_rows(Alphabet(c.n), 4)
                          * count_rows(Alphabet(c.n), 4)
                          * count_rows(Alphabet(c.n), 4));
}
BENCHMARK(BM_VerifyParallel)
    ->ArgsProduct({{3, 4}, {1, 2, 4}})
    ->UseRealTime()
    ->Unit(benchmark::kMillisecond);

void BM_EquivalenceSweep(benchmark::State& state) {
  auto const exec = state.range(0) == 0
                        ? Execution::serial()
                        : Execution::with_threads(static_cast<int>(state.range(0)));
  for (auto _ : state) {
    benchmark::DoNotOptimize(sweep_equivalence(Alphabet(5), 5, exec));
  }
}
BENCHMARK(BM_EquivalenceSweep)->Arg(0)->Arg(2)->Arg(4)->UseRealTime();

Row long_row(Count len, std::size_t offset) {
  std::vector<Count> counts(8, 0);
  for (std::size_t p = offset; p < 8; p += 2) {
    counts[p] = len;
  }
  return Row(std::move(counts));
}

void BM_RowProductClosedForm(benchmark::State& state) {
  auto const w = long_row(static_cast<Count>(state.range(0)), 0);
  auto const z = long_row(static_cast<Count>(state.range(0)), 1);
  for (auto _ : state) {
    benchmark::DoNotOptimize(multiply_rows_closed_form(w, z));
  }
}
BENCHMARK(BM_RowProductClosedForm)->Range(4, 4096);

void BM_RowProductSchensted(benchmark::State& state) {
  auto const w = long_row(static_cast<Count>(state.range(0)), 0);
  auto const z = long_row(static_cast<Count>(state.range(0)), 1);
  for (auto _ : state) {
    benchmark::DoNotOptimize(multiply_rows_schensted(w, z));
  }
}
BENCHMARK(BM_RowProductSchensted)->Range(4, 4096);

}  // namespace

BENCHMARK_MAIN();
