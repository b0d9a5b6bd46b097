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

#include "ladder360/cost.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

#include "ladder360/rdmodel.hpp"

namespace ladder360 {

ResolutionClass classify_tile_pixels(std::int64_t tile_pixels,
                                     const CostThresholds& thresholds) {
  if (tile_pixels <= 0) {
    throw ConfigError("tile pixel count must be positive");
  }
  if (tile_pixels <= thresholds.up_to_720p) return ResolutionClass::kUpTo720p;
  if (tile_pixels <= thresholds.up_to_1080p) return ResolutionClass::kUpTo1080p;
  if (tile_pixels <= thresholds.up_to_4k) return ResolutionClass::kUpTo4k;
  if (tile_pixels <= thresholds.up_to_8k) return ResolutionClass::kUpTo8k;
  throw ConfigError("tile pixel count " + std::to_string(tile_pixels) +
                    " exceeds the largest encoding cost class");
}

int cost_multiplier(ResolutionClass cls) {
  switch (cls) {
    case ResolutionClass::kUpTo720p:
      return 1;
    case ResolutionClass::kUpTo1080p:
      return 2;
    case ResolutionClass::kUpTo4k:
      return 4;
    case ResolutionClass::kUpTo8k:
      return 8;
  }
  throw std::invalid_argument("unknown resolution class");
}

double encoding_cost_tile(std::int64_t tile_pixels, double mu_e,
                          const CostThresholds& thresholds) {
  return mu_e * cost_multiplier(classify_tile_pixels(tile_pixels, thresholds));
}

double storage_cost_tile(double tile_data_size, double mu_s) {
  if (tile_data_size < 0.0) {
    throw std::invalid_argument("tile data size must be non-negative");
  }
  return mu_s * tile_data_size;
}

RepCost rep_cost(const Resolution& resolution, double z,
                 const PowerFitParams& data_size_model, int n_tiles, double mu_e,
                 double mu_s, const CostThresholds& thresholds) {
  if (n_tiles <= 0) throw std::invalid_argument("n_tiles must be positive");

  const std::int64_t tile_pixels = resolution.pixels() / n_tiles;
  RepCost result;
  result.data_size = std::max(eval_model(data_size_model, z), 0.0);

  const double tile_share = result.data_size / n_tiles;
  double cost = 0.0;
  for (int tile = 0; tile < n_tiles; ++tile) {
    cost += encoding_cost_tile(tile_pixels, mu_e, thresholds);
    cost += storage_cost_tile(tile_share, mu_s);
  }
  result.cost = cost;
  return result;
}

}  // namespace ladder360
