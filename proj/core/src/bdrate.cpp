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

#include "ladder360/bdrate.hpp"

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <istream>
#include <sstream>
#include <string>
#include <vector>

namespace ladder360 {
namespace {

// Shape-preserving piecewise-cubic Hermite interpolant (Fritsch-Carlson
// slopes) of y over strictly increasing x, with closed-form integration.
class MonotoneCubic {
 public:
  MonotoneCubic(std::vector<double> x, std::vector<double> y)
      : x_(std::move(x)), y_(std::move(y)), slope_(x_.size(), 0.0) {
    const std::size_t n = x_.size();
    std::vector<double> h(n - 1);
    std::vector<double> delta(n - 1);
    for (std::size_t i = 0; i + 1 < n; ++i) {
      h[i] = x_[i + 1] - x_[i];
      delta[i] = (y_[i + 1] - y_[i]) / h[i];
    }
    for (std::size_t i = 1; i + 1 < n; ++i) {
      if (delta[i - 1] * delta[i] <= 0.0) {
        slope_[i] = 0.0;
      } else {
        const double w1 = 2.0 * h[i] + h[i - 1];
        const double w2 = h[i] + 2.0 * h[i - 1];
        slope_[i] = (w1 + w2) / (w1 / delta[i - 1] + w2 / delta[i]);
      }
    }
    slope_[0] = end_slope(h[0], h[1], delta[0], delta[1]);
    slope_[n - 1] = end_slope(h[n - 2], h[n - 3], delta[n - 2], delta[n - 3]);
  }

  // Integral of the interpolant over [a, b], both inside [x_front, x_back].
  double integrate(double a, double b) const {
    double total = 0.0;
    for (std::size_t i = 0; i + 1 < x_.size(); ++i) {
      const double lo = std::max(a, x_[i]);
      const double hi = std::min(b, x_[i + 1]);
      if (lo >= hi) continue;
      const double h = x_[i + 1] - x_[i];
      const double ta = (lo - x_[i]) / h;
      const double tb = (hi - x_[i]) / h;
      total += h * (segment_antiderivative(i, tb, h) -
                    segment_antiderivative(i, ta, h));
    }
    return total;
  }

 private:
  // Non-centered three-point boundary slope with the usual monotone clamps.
  static double end_slope(double h0, double h1, double d0, double d1) {
    double m = ((2.0 * h0 + h1) * d0 - h0 * d1) / (h0 + h1);
    if (m * d0 <= 0.0) {
      m = 0.0;
    } else if (d0 * d1 <= 0.0 && std::abs(m) > 3.0 * std::abs(d0)) {
      m = 3.0 * d0;
    }
    return m;
  }

  // Antiderivative in normalized coordinate t of the cubic Hermite basis
  // combination on segment i.
  double segment_antiderivative(std::size_t i, double t, double h) const {
    const double t2 = t * t;
    const double t3 = t2 * t;
    const double t4 = t3 * t;
    const double i00 = t4 / 2.0 - t3 + t;
    const double i10 = t4 / 4.0 - 2.0 * t3 / 3.0 + t2 / 2.0;
    const double i01 = -t4 / 2.0 + t3;
    const double i11 = t4 / 4.0 - t3 / 3.0;
    return i00 * y_[i] + i10 * h * slope_[i] + i01 * y_[i + 1] +
           i11 * h * slope_[i + 1];
  }

  std::vector<double> x_;
  std::vector<double> y_;
  std::vector<double> slope_;
};

MonotoneCubic log_rate_over_quality(const RDCurve& curve, const char* role) {
  std::vector<double> quality;
  std::vector<double> log_rate;
  for (const RDPoint& point : curve.points()) {
    quality.push_back(point.quality_db);
    log_rate.push_back(std::log10(point.rate_mbps));
  }
  for (std::size_t i = 1; i < quality.size(); ++i) {
    if (!(quality[i] > quality[i - 1])) {
      throw ConfigError(std::string(role) +
                        " curve quality values must be strictly increasing");
    }
  }
  return MonotoneCubic(std::move(quality), std::move(log_rate));
}

}  // namespace

RDCurve RDCurve::make(std::vector<RDPoint> points) {
  if (points.size() < 4) {
    throw ConfigError("an RD curve needs at least four points");
  }
  for (std::size_t i = 0; i < points.size(); ++i) {
    if (!(points[i].rate_mbps > 0.0)) {
      throw ConfigError("RD curve rates must be positive");
    }
    if (i > 0 && !(points[i].rate_mbps > points[i - 1].rate_mbps)) {
      throw ConfigError("RD curve rates must be strictly increasing");
    }
    if (!std::isfinite(points[i].quality_db)) {
      throw ConfigError("RD curve quality values must be finite");
    }
  }
  RDCurve curve;
  curve.points_ = std::move(points);
  return curve;
}

double bd_rate(const RDCurve& reference, const RDCurve& test) {
  const MonotoneCubic ref = log_rate_over_quality(reference, "reference");
  const MonotoneCubic tst = log_rate_over_quality(test, "test");

  const double lo = std::max(reference.points().front().quality_db,
                             test.points().front().quality_db);
  const double hi = std::min(reference.points().back().quality_db,
                             test.points().back().quality_db);
  if (!(hi > lo)) {
    throw ConfigError("RD curve quality ranges do not overlap");
  }

  const double mean_diff =
      (tst.integrate(lo, hi) - ref.integrate(lo, hi)) / (hi - lo);
  return (std::pow(10.0, mean_diff) - 1.0) * 100.0;
}

RDCurve load_rd_curve(std::istream& input) {
  std::string line;
  if (!std::getline(input, line)) {
    throw ParseError("empty RD curve input");
  }
  if (!line.empty() && line.back() == '\r') line.pop_back();
  if (line != "rate_mbps,quality_db") {
    throw ParseError("RD curve header must be 'rate_mbps,quality_db'");
  }

  std::vector<RDPoint> points;
  std::size_t line_number = 1;
  while (std::getline(input, line)) {
    ++line_number;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty()) continue;
    std::istringstream row(line);
    std::string rate_text;
    std::string quality_text;
    if (!std::getline(row, rate_text, ',') ||
        !std::getline(row, quality_text)) {
      throw ParseError("line " + std::to_string(line_number) +
                       ": expected 'rate,quality'");
    }
    try {
      std::size_t used = 0;
      RDPoint point;
      point.rate_mbps = std::stod(rate_text, &used);
      if (used != rate_text.size()) throw std::invalid_argument(rate_text);
      point.quality_db = std::stod(quality_text, &used);
      if (used != quality_text.size()) {
        throw std::invalid_argument(quality_text);
      }
      points.push_back(point);
    } catch (const std::exception&) {
      throw ParseError("line " + std::to_string(line_number) +
                       ": malformed number");
    }
  }
  return RDCurve::make(std::move(points));
}

}  // namespace ladder360
