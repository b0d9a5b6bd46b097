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

#ifndef LADDER360_FEATURES_HPP_
#define LADDER360_FEATURES_HPP_

#include <cstdint>
#include <iosfwd>
#include <vector>

#include "ladder360/domain.hpp"

namespace ladder360 {

struct FrameRecord {
  enum class Kind { kIntra, kPredicted };
  Kind kind = Kind::kIntra;
  std::uint64_t size_bytes = 0;

  friend bool operator==(const FrameRecord&, const FrameRecord&) = default;
};

// Spatial and temporal complexity of a sequence, both in [0, 1] for f_spa and
// >= 0 for f_tmp.
struct EncodingFeatures {
  double f_spa = 0.0;
  double f_tmp = 0.0;

  friend bool operator==(const EncodingFeatures&, const EncodingFeatures&) = default;
};

struct Centroid {
  int content_type = 0;  // 1-based index
  double f_spa = 0.0;
  double f_tmp = 0.0;

  friend bool operator==(const Centroid&, const Centroid&) = default;
};

// Parses the frame statistics format: one record per line, "<KIND>,<SIZE_BYTES>"
// where KIND is "I" or "P" and SIZE_BYTES is a positive integer. Blank lines
// and lines starting with '#' are skipped. Throws ParseError with the
// offending 1-based line number.
std::vector<FrameRecord> parse_frame_stats(std::istream& input);

// f_spa = mean intra frame size / normalizer, clamped to [0, 1].
// f_tmp = mean predicted frame size / mean intra frame size (0 when the
// sequence has no predicted frames). Means use exact integer accumulation, so
// the result is invariant under permutation of the records. Throws ConfigError
// when there is no intra frame or normalizer_bytes <= 0.
EncodingFeatures extract_features(const std::vector<FrameRecord>& records,
                                  double normalizer_bytes);

// Nearest centroid by Euclidean distance in the (f_spa, f_tmp) plane; ties are
// broken by the lowest content-type index. Returns the content type. Throws
// ConfigError on an empty centroid set.
int classify(const EncodingFeatures& features, const std::vector<Centroid>& centroids);

}  // namespace ladder360

#endif  // LADDER360_FEATURES_HPP_
