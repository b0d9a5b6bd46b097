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

#include <cstdint>

#include <ladder360/sphere_metrics.hpp>

namespace {

using ladder360::LumaFrame;
using ladder360::TileRegion;

LumaFrame patterned_frame(int width, int height, int seed) {
  LumaFrame frame{width, height, {}};
  frame.samples.resize(static_cast<std::size_t>(width) * height);
  for (int y = 0; y < height; ++y) {
    for (int x = 0; x < width; ++x) {
      frame.samples[static_cast<std::size_t>(y) * width + x] =
          static_cast<std::uint8_t>((x * 7 + y * 13 + seed) & 0xFF);
    }
  }
  return frame;
}

void BM_WsMseFullFrame(benchmark::State& state) {
  const int width = static_cast<int>(state.range(0));
  const int height = width / 2;
  const LumaFrame reference = patterned_frame(width, height, 0);
  const LumaFrame test = patterned_frame(width, height, 3);
  for (auto _ : state) {
    benchmark::DoNotOptimize(ladder360::ws_mse(reference, test));
  }
  state.SetBytesProcessed(state.iterations() * int64_t{2} * width * height);
}

BENCHMARK(BM_WsMseFullFrame)->Arg(512)->Arg(1024)->Arg(2048)->Arg(4096);

void BM_WsMsePerTile(benchmark::State& state) {
  const int width = 2048;
  const int height = 1024;
  const LumaFrame reference = patterned_frame(width, height, 0);
  const LumaFrame test = patterned_frame(width, height, 3);
  const auto tiles =
      ladder360::tile_grid(width, height, 2, static_cast<int>(state.range(0)) / 2);
  for (auto _ : state) {
    double sum = 0.0;
    for (const TileRegion& tile : tiles) {
      sum += ladder360::ws_mse(reference, test, tile);
    }
    benchmark::DoNotOptimize(sum);
  }
}

BENCHMARK(BM_WsMsePerTile)->Arg(4)->Arg(10)->Arg(16);

void BM_ErpWeightRow(benchmark::State& state) {
  const int height = 2048;
  for (auto _ : state) {
    double sum = 0.0;
    for (int y = 0; y < height; ++y) {
      sum += ladder360::erp_weight(y, height);
    }
    benchmark::DoNotOptimize(sum);
  }
}

BENCHMARK(BM_ErpWeightRow);

}  // namespace
