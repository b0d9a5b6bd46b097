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

#include <ladder360/cost.hpp>

#include <gtest/gtest.h>

#include <ladder360/domain.hpp>
#include <ladder360/rdmodel.hpp>

namespace ladder360 {
namespace {

TEST(ClassifyTilePixels, FourClassesWithInclusiveUpperEdges) {
  EXPECT_EQ(classify_tile_pixels(1), ResolutionClass::kUpTo720p);
  EXPECT_EQ(classify_tile_pixels(921600), ResolutionClass::kUpTo720p);
  EXPECT_EQ(classify_tile_pixels(921601), ResolutionClass::kUpTo1080p);
  EXPECT_EQ(classify_tile_pixels(2073600), ResolutionClass::kUpTo1080p);
  EXPECT_EQ(classify_tile_pixels(2073601), ResolutionClass::kUpTo4k);
  EXPECT_EQ(classify_tile_pixels(8388608), ResolutionClass::kUpTo4k);
  EXPECT_EQ(classify_tile_pixels(8388609), ResolutionClass::kUpTo8k);
  EXPECT_EQ(classify_tile_pixels(33554432), ResolutionClass::kUpTo8k);
}

TEST(ClassifyTilePixels, RejectsOutOfRange) {
  EXPECT_THROW(classify_tile_pixels(0), ConfigError);
  EXPECT_THROW(classify_tile_pixels(33554433), ConfigError);
}

TEST(CostMultiplier, DoublesPerClass) {
  EXPECT_EQ(cost_multiplier(ResolutionClass::kUpTo720p), 1);
  EXPECT_EQ(cost_multiplier(ResolutionClass::kUpTo1080p), 2);
  EXPECT_EQ(cost_multiplier(ResolutionClass::kUpTo4k), 4);
  EXPECT_EQ(cost_multiplier(ResolutionClass::kUpTo8k), 8);
}

TEST(EncodingCostTile, ScalesWithClassMultiplier) {
  EXPECT_DOUBLE_EQ(encoding_cost_tile(500000, 0.017), 0.017);
  EXPECT_DOUBLE_EQ(encoding_cost_tile(1000000, 0.017), 0.034);
  EXPECT_DOUBLE_EQ(encoding_cost_tile(4000000, 0.017), 0.068);
  EXPECT_DOUBLE_EQ(encoding_cost_tile(10000000, 0.017), 0.136);
}

TEST(StorageCostTile, LinearInDataSize) {
  EXPECT_DOUBLE_EQ(storage_cost_tile(100.0, 0.023), 2.3);
  EXPECT_DOUBLE_EQ(storage_cost_tile(0.0, 0.023), 0.0);
  EXPECT_THROW(storage_cost_tile(-1.0, 0.023), std::invalid_argument);
}

TEST(RepCostTotal, SumsEncodeAndStorageOverTiles) {
  // 3072x1536 split into 10 tiles: 471859 pixels per tile, first class.
  const Resolution res{3072, 1536};
  const PowerFitParams data_size{0.7613, 0.9901, 52.54};
  const RepCost rep = rep_cost(res, 10.0, data_size, 10, 0.017, 0.023);
  const double expected_size = eval_model(data_size, 10.0);
  EXPECT_DOUBLE_EQ(rep.data_size, expected_size);
  EXPECT_NEAR(rep.cost, 10 * 0.017 * 1 + 0.023 * expected_size, 1e-12);
}

TEST(RepCostTotal, LargerFramesPayHigherEncodeClass) {
  // 8192x4096 split into 10 tiles: 3355443 pixels per tile, third class.
  const Resolution res{8192, 4096};
  const PowerFitParams data_size{0.8264, 0.9846, 214.9};
  const RepCost rep = rep_cost(res, 20.0, data_size, 10, 0.017, 0.023);
  const double expected_size = eval_model(data_size, 20.0);
  EXPECT_NEAR(rep.cost, 10 * 0.017 * 4 + 0.023 * expected_size, 1e-12);
}

TEST(RepCostTotal, ClampsNegativeDataSize) {
  const Resolution res{1024, 512};
  const PowerFitParams data_size{0.1, 1.0, -100.0};
  const RepCost rep = rep_cost(res, 1.0, data_size, 4, 0.017, 0.023);
  EXPECT_DOUBLE_EQ(rep.data_size, 0.0);
  EXPECT_DOUBLE_EQ(rep.cost, 4 * 0.017 * 1);
}

}  // namespace
}  // namespace ladder360
