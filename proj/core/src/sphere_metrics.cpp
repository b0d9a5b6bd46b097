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

#include "ladder360/sphere_metrics.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <cstdint>
#include <future>
#include <istream>
#include <limits>
#include <numbers>
#include <stdexcept>
#include <string>
#include <string_view>
#include <thread>
#include <utility>
#include <vector>

namespace ladder360 {
namespace {

// Compensated (Kahan) accumulator for long weighted sums.
class CompensatedSum {
 public:
  void add(double value) {
    const double y = value - compensation_;
    const double t = sum_ + y;
    compensation_ = (t - sum_) - y;
    sum_ = t;
  }

  double value() const { return sum_; }

 private:
  double sum_ = 0.0;
  double compensation_ = 0.0;
};

void check_frame(const LumaFrame& frame, const char* role) {
  if (frame.width <= 0 || frame.height <= 0) {
    throw std::invalid_argument(std::string(role) +
                                " frame has non-positive dimensions");
  }
  const std::size_t expected = static_cast<std::size_t>(frame.width) *
                               static_cast<std::size_t>(frame.height);
  if (frame.samples.size() != expected) {
    throw std::invalid_argument(std::string(role) +
                                " frame sample count does not match its "
                                "dimensions");
  }
}

}  // namespace

double erp_weight(int y, int frame_height) {
  if (frame_height <= 0) {
    throw std::invalid_argument("frame height must be positive");
  }
  if (y < 0 || y >= frame_height) {
    throw std::invalid_argument("row index outside the frame");
  }
  const double h = static_cast<double>(frame_height);
  return std::cos((static_cast<double>(y) + 0.5 - h / 2.0) *
                  std::numbers::pi / h);
}

double ws_mse(const LumaFrame& reference, const LumaFrame& test,
              const TileRegion& region) {
  check_frame(reference, "reference");
  check_frame(test, "test");
  if (reference.width != test.width || reference.height != test.height) {
    throw std::invalid_argument("reference and test frame dimensions differ");
  }
  if (region.width <= 0 || region.height <= 0) {
    throw std::invalid_argument("region must have positive size");
  }
  if (region.x < 0 || region.y < 0 ||
      region.x + region.width > reference.width ||
      region.y + region.height > reference.height) {
    throw std::invalid_argument("region extends outside the frame");
  }

  CompensatedSum numerator;
  CompensatedSum denominator;
  for (int row = region.y; row < region.y + region.height; ++row) {
    const std::size_t base = static_cast<std::size_t>(row) *
                                 static_cast<std::size_t>(reference.width) +
                             static_cast<std::size_t>(region.x);
    // Squared differences are integers <= 255^2, so the row sum is exact.
    std::int64_t row_sum = 0;
    for (int col = 0; col < region.width; ++col) {
      const int diff = static_cast<int>(reference.samples[base + col]) -
                       static_cast<int>(test.samples[base + col]);
      row_sum += static_cast<std::int64_t>(diff) * diff;
    }
    const double weight = erp_weight(row, reference.height);
    numerator.add(weight * static_cast<double>(row_sum));
    denominator.add(weight * static_cast<double>(region.width));
  }
  return numerator.value() / denominator.value();
}

double ws_mse(const LumaFrame& reference, const LumaFrame& test) {
  check_frame(reference, "reference");
  return ws_mse(reference, test,
                TileRegion{0, 0, reference.width, reference.height});
}

double ws_psnr(double mse, double peak) {
  if (!(peak > 0.0)) {
    throw std::invalid_argument("peak must be positive");
  }
  if (mse < 0.0) {
    throw std::invalid_argument("mean squared error must be non-negative");
  }
  if (mse == 0.0) {
    return std::numeric_limits<double>::infinity();
  }
  return 10.0 * std::log10(peak * peak / mse);
}

std::vector<TileRegion> tile_grid(int width, int height, int rows, int cols) {
  if (width <= 0 || height <= 0) {
    throw std::invalid_argument("frame dimensions must be positive");
  }
  if (rows <= 0 || cols <= 0) {
    throw std::invalid_argument("grid must have at least one row and column");
  }
  if (rows > height || cols > width) {
    throw std::invalid_argument("grid is finer than the frame");
  }
  const int base_w = width / cols;
  const int base_h = height / rows;
  std::vector<TileRegion> tiles;
  tiles.reserve(static_cast<std::size_t>(rows) * cols);
  for (int r = 0; r < rows; ++r) {
    const int y = r * base_h;
    const int h = (r == rows - 1) ? height - y : base_h;
    for (int c = 0; c < cols; ++c) {
      const int x = c * base_w;
      const int w = (c == cols - 1) ? width - x : base_w;
      tiles.push_back(TileRegion{x, y, w, h});
    }
  }
  return tiles;
}

namespace {

int parse_header_int(std::string_view text, const char* what) {
  int value = 0;
  const auto [ptr, ec] =
      std::from_chars(text.data(), text.data() + text.size(), value);
  if (ec != std::errc{} || ptr != text.data() + text.size() || value <= 0) {
    throw ParseError(std::string("invalid ") + what +
                     " in stream header: '" + std::string(text) + "'");
  }
  return value;
}

}  // namespace

Y4mReader::Y4mReader(std::istream& input) : input_(input) {
  std::string header;
  if (!std::getline(input_, header)) {
    throw ParseError("missing stream header");
  }
  if (!header.empty() && header.back() == '\r') {
    header.pop_back();
  }
  constexpr std::string_view kMagic = "YUV4MPEG2";
  std::string_view view(header);
  if (view.substr(0, kMagic.size()) != kMagic) {
    throw ParseError("stream does not start with YUV4MPEG2");
  }
  view.remove_prefix(kMagic.size());

  std::string colour = "420";
  bool have_width = false;
  bool have_height = false;
  while (!view.empty()) {
    if (view.front() != ' ') {
      throw ParseError("malformed stream header parameters");
    }
    view.remove_prefix(1);
    const std::size_t end = view.find(' ');
    const std::string_view param = view.substr(0, end);
    view.remove_prefix(param.size());
    if (param.empty()) {
      continue;
    }
    const char tag = param.front();
    const std::string_view rest = param.substr(1);
    switch (tag) {
      case 'W':
        width_ = parse_header_int(rest, "width");
        have_width = true;
        break;
      case 'H':
        height_ = parse_header_int(rest, "height");
        have_height = true;
        break;
      case 'C':
        colour = std::string(rest);
        break;
      default:
        break;  // F, I, A, X... do not affect plane layout
    }
  }
  if (!have_width || !have_height) {
    throw ParseError("stream header lacks W or H");
  }

  if (colour.rfind("420", 0) == 0) {
    if (width_ % 2 != 0 || height_ % 2 != 0) {
      throw ParseError("4:2:0 streams require even dimensions");
    }
    chroma_bytes_ = 2 * (static_cast<std::size_t>(width_) / 2) *
                    (static_cast<std::size_t>(height_) / 2);
  } else if (colour.rfind("mono", 0) == 0) {
    chroma_bytes_ = 0;
  } else {
    throw ParseError("unsupported colour space 'C" + colour + "'");
  }
}

std::optional<LumaFrame> Y4mReader::next() {
  std::string marker;
  if (!std::getline(input_, marker)) {
    return std::nullopt;
  }
  if (!marker.empty() && marker.back() == '\r') {
    marker.pop_back();
  }
  if (marker != "FRAME" && marker.rfind("FRAME ", 0) != 0) {
    throw ParseError("expected FRAME marker before frame " +
                     std::to_string(frames_read_ + 1));
  }

  LumaFrame frame;
  frame.width = width_;
  frame.height = height_;
  const std::size_t luma_bytes =
      static_cast<std::size_t>(width_) * static_cast<std::size_t>(height_);
  frame.samples.resize(luma_bytes);
  input_.read(reinterpret_cast<char*>(frame.samples.data()),
              static_cast<std::streamsize>(luma_bytes));
  if (static_cast<std::size_t>(input_.gcount()) != luma_bytes) {
    throw ParseError("truncated luma plane in frame " +
                     std::to_string(frames_read_ + 1));
  }
  if (chroma_bytes_ > 0) {
    input_.ignore(static_cast<std::streamsize>(chroma_bytes_));
    if (static_cast<std::size_t>(input_.gcount()) != chroma_bytes_) {
      throw ParseError("truncated chroma planes in frame " +
                       std::to_string(frames_read_ + 1));
    }
  }
  ++frames_read_;
  return frame;
}

namespace {

struct FrameMetrics {
  std::vector<double> tiles;
  double full = 0.0;
};

FrameMetrics measure_frame(const LumaFrame& reference, const LumaFrame& test,
                           const std::vector<TileRegion>& tiles) {
  FrameMetrics metrics;
  metrics.tiles.reserve(tiles.size());
  for (const TileRegion& tile : tiles) {
    metrics.tiles.push_back(ws_mse(reference, test, tile));
  }
  metrics.full = ws_mse(reference, test);
  return metrics;
}

}  // namespace

SequenceResult sequence_ws_mse(std::istream& reference, std::istream& test,
                               int rows, int cols) {
  Y4mReader ref_reader(reference);
  Y4mReader test_reader(test);
  if (ref_reader.width() != test_reader.width() ||
      ref_reader.height() != test_reader.height()) {
    throw ConfigError("reference and test streams have different dimensions");
  }
  const std::vector<TileRegion> tiles =
      tile_grid(ref_reader.width(), ref_reader.height(), rows, cols);

  const unsigned hw = std::thread::hardware_concurrency();
  const std::size_t max_in_flight = hw == 0 ? 2 : hw;

  std::vector<CompensatedSum> tile_sums(tiles.size());
  CompensatedSum full_sum;
  std::size_t frame_count = 0;

  std::vector<std::future<FrameMetrics>> in_flight;
  const auto drain_one = [&]() {
    FrameMetrics metrics = in_flight.front().get();
    in_flight.erase(in_flight.begin());
    for (std::size_t i = 0; i < tiles.size(); ++i) {
      tile_sums[i].add(metrics.tiles[i]);
    }
    full_sum.add(metrics.full);
    ++frame_count;
  };

  for (;;) {
    std::optional<LumaFrame> ref_frame = ref_reader.next();
    std::optional<LumaFrame> test_frame = test_reader.next();
    if (ref_frame.has_value() != test_frame.has_value()) {
      throw ConfigError(
          "reference and test streams have different frame counts");
    }
    if (!ref_frame.has_value()) {
      break;
    }
    if (in_flight.size() >= max_in_flight) {
      drain_one();
    }
    in_flight.push_back(std::async(
        std::launch::async,
        [&tiles](LumaFrame ref, LumaFrame tst) {
          return measure_frame(ref, tst, tiles);
        },
        std::move(*ref_frame), std::move(*test_frame)));
  }
  while (!in_flight.empty()) {
    drain_one();
  }

  if (frame_count == 0) {
    throw ConfigError("streams contain no frames");
  }

  SequenceResult result;
  result.rows = rows;
  result.cols = cols;
  result.frame_count = frame_count;
  result.tile_mean_mse.reserve(tiles.size());
  for (const CompensatedSum& sum : tile_sums) {
    result.tile_mean_mse.push_back(sum.value() /
                                   static_cast<double>(frame_count));
  }
  result.frame_mean_mse = full_sum.value() / static_cast<double>(frame_count);
  return result;
}

}  // namespace ladder360
