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

#ifndef LADDER360_RDMODEL_HPP_
#define LADDER360_RDMODEL_HPP_

#include <iosfwd>
#include <span>
#include <vector>

#include "ladder360/domain.hpp"

namespace ladder360 {

// Fit failure: too few samples, non-positive sample bitrates, or divergence.
class FitError : public std::runtime_error {
 public:
  explicit FitError(const std::string& what) : std::runtime_error(what) {}
};

struct RDSample {
  double z = 0.0;      // bitrate, Mbps
  double value = 0.0;  // distortion or data size at z

  friend bool operator==(const RDSample&, const RDSample&) = default;
};

// Evaluates k * z^omega + phi. Throws std::invalid_argument when z <= 0.
double eval_model(const PowerFitParams& params, double z);

struct RepDistortion {
  double total = 0.0;            // d_i, clamped to >= 0
  std::vector<double> per_tile;  // d_ij = d_i / n_tiles, one entry per tile
};

// Distortion of a representation encoded at bitrate z, split equally over
// n_tiles tiles. Negative model output is clamped to zero before the split.
RepDistortion rep_distortion(const PowerFitParams& params, double z, int n_tiles);

struct FitResult {
  PowerFitParams params;
  double sse = 0.0;    // sum of squared residuals at the returned parameters
  int iterations = 0;  // Gauss-Newton trial steps taken
};

// Least-squares fit of the two-term power series to (z, value) samples by
// Gauss-Newton iteration with Levenberg damping. Initialization: phi0 is
// min(value) - 1e-6 for distortion and 0 for data size, then (k0, omega0) come
// from an ordinary least-squares line through (log z, log(value - phi0)),
// discarding non-positive shifted values. Converged when the relative SSE
// improvement of an accepted step falls below 1e-10, capped at 500 trials.
// Deterministic: no randomization anywhere. Requires >= 4 samples with >= 3
// distinct positive z; throws FitError otherwise or when residuals become
// non-finite.
FitResult fit_power_series(std::span<const RDSample> samples, ModelKind kind);

// Reads CSV with the exact header "z,value" followed by numeric rows. Blank
// lines and '#' comments are skipped. Throws ParseError.
std::vector<RDSample> load_rd_samples(std::istream& input);

}  // namespace ladder360

#endif  // LADDER360_RDMODEL_HPP_
