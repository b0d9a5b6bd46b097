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

#include "ladder360/features.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <istream>
#include <string>

namespace ladder360 {

namespace {

std::string strip(const std::string& s) {
  auto begin = s.find_first_not_of(" \t\r");
  if (begin == std::string::npos) return "";
  auto end = s.find_last_not_of(" \t\r");
  return s.substr(begin, end - begin + 1);
}

}  // namespace

std::vector<FrameRecord> parse_frame_stats(std::istream& input) {
  std::vector<FrameRecord> records;
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(input, line)) {
    ++line_no;
    const std::string text = strip(line);
    if (text.empty() || text.front() == '#') continue;

    const auto comma = text.find(',');
    if (comma == std::string::npos) {
      throw ParseError("frame stats line " + std::to_string(line_no) +
                       ": expected \"<KIND>,<SIZE_BYTES>\"");
    }
    const std::string kind = strip(text.substr(0, comma));
    const std::string size = strip(text.substr(comma + 1));

    FrameRecord record;
    if (kind == "I") {
      record.kind = FrameRecord::Kind::kIntra;
    } else if (kind == "P") {
      record.kind = FrameRecord::Kind::kPredicted;
    } else {
      throw ParseError("frame stats line " + std::to_string(line_no) +
                       ": unknown frame kind \"" + kind + "\"");
    }

    std::uint64_t value = 0;
    const auto [ptr, ec] = std::from_chars(size.data(), size.data() + size.size(), value);
    if (ec != std::errc{} || ptr != size.data() + size.size() || value == 0) {
      throw ParseError("frame stats line " + std::to_string(line_no) +
                       ": size must be a positive integer");
    }
    record.size_bytes = value;
    records.push_back(record);
  }
  return records;
}

EncodingFeatures extract_features(const std::vector<FrameRecord>& records,
                                  double normalizer_bytes) {
  if (!(normalizer_bytes > 0.0)) {
    throw ConfigError("feature normalizer must be positive");
  }
  std::uint64_t intra_sum = 0, intra_count = 0;
  std::uint64_t pred_sum = 0, pred_count = 0;
  for (const FrameRecord& r : records) {
    if (r.kind == FrameRecord::Kind::kIntra) {
      intra_sum += r.size_bytes;
      ++intra_count;
    } else {
      pred_sum += r.size_bytes;
      ++pred_count;
    }
  }
  if (intra_count == 0) {
    throw ConfigError("feature extraction requires at least one intra frame");
  }

  const double mean_intra = static_cast<double>(intra_sum) / static_cast<double>(intra_count);
  EncodingFeatures features;
  features.f_spa = std::clamp(mean_intra / normalizer_bytes, 0.0, 1.0);
  if (pred_count > 0) {
    const double mean_pred = static_cast<double>(pred_sum) / static_cast<double>(pred_count);
    features.f_tmp = mean_pred / mean_intra;
  }
  return features;
}

int classify(const EncodingFeatures& features, const std::vector<Centroid>& centroids) {
  if (centroids.empty()) throw ConfigError("centroid set must not be empty");

  int best_type = 0;
  double best_dist = 0.0;
  bool first = true;
  for (const Centroid& c : centroids) {
    const double dx = features.f_spa - c.f_spa;
    const double dy = features.f_tmp - c.f_tmp;
    const double dist = dx * dx + dy * dy;
    if (first || dist < best_dist ||
        (dist == best_dist && c.content_type < best_type)) {
      best_type = c.content_type;
      best_dist = dist;
      first = false;
    }
  }
  return best_type;
}

}  // namespace ladder360
