// Copyright 2026 The ladder360 Authors
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

#include <vector>

#include <ladder360/config.hpp>
#include <ladder360/solver.hpp>

namespace {

using ladder360::CandidateRep;
using ladder360::Config;
using ladder360::default_config;

void BM_GenerateCandidates(benchmark::State& state) {
  const Config config = default_config();
  const int content_type = static_cast<int>(state.range(0));
  for (auto _ : state) {
    benchmark::DoNotOptimize(ladder360::generate_candidates(
        config.solver, config.grid, config.resolutions, config.models,
        content_type, config.thresholds));
  }
}

BENCHMARK(BM_GenerateCandidates)->Arg(1)->Arg(2)->Arg(3);

void BM_Solve(benchmark::State& state) {
  Config config = default_config();
  const int content_type = static_cast<int>(state.range(0));
  config.solver.gamma = static_cast<double>(state.range(1)) / 10.0;
  const std::vector<CandidateRep> pool = ladder360::generate_candidates(
      config.solver, config.grid, config.resolutions, config.models,
      content_type, config.thresholds);
  for (auto _ : state) {
    benchmark::DoNotOptimize(ladder360::solve(pool, config.solver));
  }
}

BENCHMARK(BM_Solve)
    ->Args({1, 0})
    ->Args({1, 1})
    ->Args({1, 5})
    ->Args({2, 1})
    ->Args({3, 1});

void BM_ValidateLadder(benchmark::State& state) {
  const Config config = default_config();
  const std::vector<CandidateRep> pool = ladder360::generate_candidates(
      config.solver, config.grid, config.resolutions, config.models, 1,
      config.thresholds);
  const ladder360::Ladder ladder = ladder360::solve(pool, config.solver);
  for (auto _ : state) {
    benchmark::DoNotOptimize(ladder360::validate_ladder(ladder, config.solver));
  }
}

BENCHMARK(BM_ValidateLadder);

}  // namespace
