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

#ifndef LADDER360_SPHERE_METRICS_HPP_
#define LADDER360_SPHERE_METRICS_HPP_

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <vector>

#include "ladder360/domain.hpp"

namespace ladder360 {

struct LumaFrame {
  int width = 0;
  int height = 0;
  std::vector<std::uint8_t> samples;  // row-major, width * height entries
};

struct TileRegion {
  int x = 0;
  int y = 0;
  int width = 0;
  int height = 0;

  friend bool operator==(const TileRegion&, const TileRegion&) = default;
};

// Latitude weight of pixel row y in an equirectangular frame of the given
// height: cos((y + 0.5 - height/2) * pi / height).
double erp_weight(int y, int frame_height);

// Spherically weighted mean squared error over a region of two frames with
// identical dimensions. Row weights come from the full frame so tile values
// aggregate exactly to the frame value. Accumulation uses exact integer row
// sums combined with compensated summation. Throws std::invalid_argument on
// dimension mismatch or a region outside the frame.
double ws_mse(const LumaFrame& reference, const LumaFrame& test,
              const TileRegion& region);

// Full-frame convenience overload.
double ws_mse(const LumaFrame& reference, const LumaFrame& test);

// 10 * log10(peak^2 / mse); +infinity when mse == 0. Throws
// std::invalid_argument when mse < 0 or peak <= 0.
double ws_psnr(double mse, double peak = 255.0);

// Splits a width x height frame into rows x cols tiles, row-major; remainder
// pixels go to the last row/column. Throws std::invalid_argument when the
// grid does not fit.
std::vector<TileRegion> tile_grid(int width, int height, int rows, int cols);

// Streaming reader for the YUV4MPEG2 subset used here: parameters W, H, F and
// C with 4:2:0 or mono color spaces (4:2:0 requires even dimensions), unknown
// parameters are ignored and only the luma plane is retained. Throws
// ParseError on malformed headers or truncated frames.
class Y4mReader {
 public:
  explicit Y4mReader(std::istream& input);

  int width() const { return width_; }
  int height() const { return height_; }

  // Next luma plane, or std::nullopt at end of stream.
  std::optional<LumaFrame> next();

 private:
  std::istream& input_;
  int width_ = 0;
  int height_ = 0;
  std::size_t chroma_bytes_ = 0;
  std::size_t frames_read_ = 0;
};

struct SequenceResult {
  int rows = 0;
  int cols = 0;
  std::size_t frame_count = 0;
  std::vector<double> tile_mean_mse;  // row-major, rows * cols entries
  double frame_mean_mse = 0.0;
};

// Mean per-tile and full-frame WS-MSE over two Y4M streams. Frames are
// processed concurrently but aggregated in stream order, so results do not
// depend on thread scheduling. Throws ConfigError when the streams disagree
// in dimensions or frame count, or contain no frames.
SequenceResult sequence_ws_mse(std::istream& reference, std::istream& test,
                               int rows, int cols);

}  // namespace ladder360

#endif  // LADDER360_SPHERE_METRICS_HPP_
