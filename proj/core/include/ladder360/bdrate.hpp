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

#ifndef LADDER360_BDRATE_HPP_
#define LADDER360_BDRATE_HPP_

#include <iosfwd>
#include <vector>

#include "ladder360/domain.hpp"

namespace ladder360 {

struct RDPoint {
  double rate_mbps = 0.0;
  double quality_db = 0.0;

  friend bool operator==(const RDPoint&, const RDPoint&) = default;
};

// Rate-distortion curve: at least four points with strictly increasing
// positive rates. make() throws ConfigError on violations.
class RDCurve {
 public:
  static RDCurve make(std::vector<RDPoint> points);

  const std::vector<RDPoint>& points() const { return points_; }

  friend bool operator==(const RDCurve&, const RDCurve&) = default;

 private:
  std::vector<RDPoint> points_;
};

// Average bitrate difference of `test` against `reference` in percent over
// the overlapping quality range; negative means `test` needs less bitrate at
// equal quality. log10(rate) is interpolated over quality with a monotone
// piecewise-cubic Hermite spline and integrated in closed form. Throws
// ConfigError when a curve's quality is not strictly increasing or the
// quality ranges do not overlap.
double bd_rate(const RDCurve& reference, const RDCurve& test);

// Reads a curve from CSV with exact header "rate_mbps,quality_db". Throws
// ParseError on malformed rows, ConfigError on RDCurve violations.
RDCurve load_rd_curve(std::istream& input);

}  // namespace ladder360

#endif  // LADDER360_BDRATE_HPP_
