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

#include <ladder360/bdrate.hpp>
#include <ladder360/config.hpp>
#include <ladder360/rdmodel.hpp>

namespace {

using ladder360::ModelKind;
using ladder360::PowerFitParams;
using ladder360::RDSample;

std::vector<RDSample> sampled_curve(const PowerFitParams& params) {
  std::vector<RDSample> samples;
  for (double z : {1.0, 2.0, 4.0, 8.0, 16.0, 32.0, 45.0}) {
    samples.push_back({z, ladder360::eval_model(params, z)});
  }
  return samples;
}

void BM_FitPowerSeries(benchmark::State& state) {
  const PowerFitParams params = ladder360::default_config().models.at(
      static_cast<int>(state.range(0)), 1, ModelKind::kDistortion);
  const std::vector<RDSample> samples = sampled_curve(params);
  for (auto _ : state) {
    benchmark::DoNotOptimize(
        ladder360::fit_power_series(samples, ModelKind::kDistortion));
  }
}

BENCHMARK(BM_FitPowerSeries)->Arg(1)->Arg(2)->Arg(3);

void BM_EvalModel(benchmark::State& state) {
  const PowerFitParams params =
      ladder360::default_config().models.at(1, 1, ModelKind::kDistortion);
  for (auto _ : state) {
    double sum = 0.0;
    for (double z = 1.0; z < 45.0; z += 0.5) {
      sum += ladder360::eval_model(params, z);
    }
    benchmark::DoNotOptimize(sum);
  }
}

BENCHMARK(BM_EvalModel);

void BM_BdRate(benchmark::State& state) {
  const ladder360::RDCurve reference = ladder360::RDCurve::make(
      {{1.0, 30.0}, {2.5, 34.5}, {5.0, 38.0}, {11.0, 41.2}, {24.0, 43.9}});
  const ladder360::RDCurve test = ladder360::RDCurve::make(
      {{0.9, 30.2}, {2.2, 34.9}, {4.7, 38.3}, {10.1, 41.5}, {22.8, 44.0}});
  for (auto _ : state) {
    benchmark::DoNotOptimize(ladder360::bd_rate(reference, test));
  }
}

BENCHMARK(BM_BdRate);

}  // namespace
