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

#ifndef LADDER360_COST_HPP_
#define LADDER360_COST_HPP_

#include <cstdint>

#include "ladder360/domain.hpp"

namespace ladder360 {

// Encoding effort depends on the tile pixel count through four broken-line
// classes; the boundaries are the pixel counts of 1280x720, 1920x1080,
// 4096x2048 and 8192x4096 frames.
struct CostThresholds {
  std::int64_t up_to_720p = 921600;
  std::int64_t up_to_1080p = 2073600;
  std::int64_t up_to_4k = 8388608;
  std::int64_t up_to_8k = 33554432;

  friend bool operator==(const CostThresholds&, const CostThresholds&) = default;
};

enum class ResolutionClass { kUpTo720p, kUpTo1080p, kUpTo4k, kUpTo8k };

// Throws ConfigError when tile_pixels is non-positive or above the largest
// class boundary.
ResolutionClass classify_tile_pixels(std::int64_t tile_pixels,
                                     const CostThresholds& thresholds = {});

// Cost multiplier per class: 1, 2, 4, 8.
int cost_multiplier(ResolutionClass cls);

// Per-tile encoding cost mu_e * multiplier(class(tile_pixels)).
double encoding_cost_tile(std::int64_t tile_pixels, double mu_e,
                          const CostThresholds& thresholds = {});

// Per-tile storage cost mu_s * tile_data_size. Throws std::invalid_argument
// on negative tile_data_size.
double storage_cost_tile(double tile_data_size, double mu_s);

struct RepCost {
  double cost = 0.0;       // c_i: encoding plus storage over all tiles
  double data_size = 0.0;  // s_i: data-size model output at z, clamped to >= 0
};

// Total cost of a representation at bitrate z: the frame is split into
// n_tiles equal-area tiles (integer division of the pixel count), each tile
// pays the class-based encoding cost and stores an equal share of the
// modelled data size.
RepCost rep_cost(const Resolution& resolution, double z,
                 const PowerFitParams& data_size_model, int n_tiles, double mu_e,
                 double mu_s, const CostThresholds& thresholds = {});

}  // namespace ladder360

#endif  // LADDER360_COST_HPP_
