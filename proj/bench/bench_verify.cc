// Copyright 2026 The GFR Codes Authors
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

// Serial reference kernels against their OpenMP counterparts. Codes are
// built over GF(2^16) so the scans run to completion instead of stopping
// at an early witness.

#include <benchmark/benchmark.h>

#include "gfr/verify.h"

namespace {

gfr::GfrCode code_for(const gfr::SystemParams& p) {
  return gfr::construct_with_retry(p, gfr::FieldSpec(16), 16, 1,
                                   {.exhaustive_edge_limit = 0});
}

const gfr::SystemParams kReconstruction[] = {{12, 6, 7}, {14, 7, 9}, {16, 8, 10}};
const gfr::SystemParams kProperty2[] = {{7, 3, 3}, {8, 4, 5}, {9, 4, 4}};

void BM_ReconstructionSerial(benchmark::State& state) {
  const auto code = code_for(kReconstruction[state.range(0)]);
  for (auto _ : state) {
    benchmark::DoNotOptimize(gfr::detail::verify_reconstruction_serial(code, code.params.k));
  }
}

void BM_ReconstructionParallel(benchmark::State& state) {
  const auto code = code_for(kReconstruction[state.range(0)]);
  for (auto _ : state) {
    benchmark::DoNotOptimize(gfr::detail::verify_reconstruction_parallel(code, code.params.k));
  }
}

void BM_Property2Serial(benchmark::State& state) {
  const auto code = code_for(kProperty2[state.range(0)]);
  for (auto _ : state) benchmark::DoNotOptimize(gfr::detail::verify_property2_serial(code));
}

void BM_Property2Parallel(benchmark::State& state) {
  const auto code = code_for(kProperty2[state.range(0)]);
  for (auto _ : state) benchmark::DoNotOptimize(gfr::detail::verify_property2_parallel(code));
}

BENCHMARK(BM_ReconstructionSerial)->DenseRange(0, 2)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_ReconstructionParallel)->DenseRange(0, 2)->Unit(benchmark::kMillisecond)->UseRealTime();
BENCHMARK(BM_Property2Serial)->DenseRange(0, 2)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_Property2Parallel)->DenseRange(0, 2)->Unit(benchmark::kMillisecond)->UseRealTime();

}  // namespace

BENCHMARK_MAIN();
