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

#include <ladder360/rdmodel.hpp>

#include <cmath>
#include <sstream>
#include <vector>

#include <gtest/gtest.h>

#include <ladder360/config.hpp>
#include <ladder360/domain.hpp>

namespace ladder360 {
namespace {

TEST(EvalModel, TwoTermPowerSeries) {
  const PowerFitParams params{220.1, -0.3583, 6.447};
  const double expected = 220.1 * std::pow(10.0, -0.3583) + 6.447;
  EXPECT_DOUBLE_EQ(eval_model(params, 10.0), expected);
}

TEST(EvalModel, RejectsNonPositiveBitrate) {
  EXPECT_THROW(eval_model({1.0, 1.0, 0.0}, 0.0), std::invalid_argument);
  EXPECT_THROW(eval_model({1.0, 1.0, 0.0}, -1.0), std::invalid_argument);
}

TEST(RepDistortion, SplitsEquallyOverTiles) {
  const PowerFitParams params{1809.0, -0.6959, 5.649};
  const RepDistortion rep = rep_distortion(params, 10.0, 10);
  EXPECT_NEAR(rep.total, 370.0, 0.2);
  ASSERT_EQ(rep.per_tile.size(), 10u);
  double sum = 0.0;
  for (double tile : rep.per_tile) {
    EXPECT_DOUBLE_EQ(tile, rep.total / 10.0);
    sum += tile;
  }
  EXPECT_NEAR(sum, rep.total, 1e-9);
}

TEST(RepDistortion, ClampsNegativeModelOutput) {
  // Large negative offset drives the series below zero at high bitrates.
  const PowerFitParams params{10.0, -1.0, -100.0};
  const RepDistortion rep = rep_distortion(params, 50.0, 4);
  EXPECT_DOUBLE_EQ(rep.total, 0.0);
  for (double tile : rep.per_tile) EXPECT_DOUBLE_EQ(tile, 0.0);
}

std::vector<RDSample> sample_curve(const PowerFitParams& params,
                                   const std::vector<double>& bitrates) {
  std::vector<RDSample> samples;
  for (double z : bitrates) samples.push_back({z, eval_model(params, z)});
  return samples;
}

TEST(FitPowerSeries, RecoversDistortionParameters) {
  const PowerFitParams truth{1809.0, -0.6959, 5.649};
  const std::vector<RDSample> samples =
      sample_curve(truth, {1, 2, 4, 8, 16, 32, 45});
  const FitResult fit = fit_power_series(samples, ModelKind::kDistortion);
  EXPECT_NEAR(fit.params.k, truth.k, std::abs(truth.k) * 0.01);
  EXPECT_NEAR(fit.params.omega, truth.omega, std::abs(truth.omega) * 0.01);
  EXPECT_NEAR(fit.params.phi, truth.phi, std::abs(truth.phi) * 0.01);
  EXPECT_LT(fit.sse, 1e-6);
}

TEST(FitPowerSeries, RecoversDataSizeParameters) {
  const PowerFitParams truth{0.7613, 0.9901, 52.54};
  const std::vector<RDSample> samples =
      sample_curve(truth, {1, 2, 4, 8, 16, 32, 45});
  const FitResult fit = fit_power_series(samples, ModelKind::kDataSize);
  EXPECT_NEAR(fit.params.k, truth.k, std::abs(truth.k) * 0.01);
  EXPECT_NEAR(fit.params.omega, truth.omega, std::abs(truth.omega) * 0.01);
  EXPECT_NEAR(fit.params.phi, truth.phi, std::abs(truth.phi) * 0.01);
}

TEST(FitPowerSeries, RecoversNegativeOffsets) {
  const PowerFitParams truth{616.9, -0.2837, -23.78};
  const std::vector<RDSample> samples =
      sample_curve(truth, {1, 2, 4, 8, 16, 32, 45});
  const FitResult fit = fit_power_series(samples, ModelKind::kDistortion);
  EXPECT_NEAR(fit.params.phi, truth.phi, std::abs(truth.phi) * 0.01);
}

TEST(FitPowerSeries, ToleratesMildNoise) {
  const PowerFitParams truth{480.6, -0.3643, -5.728};
  std::vector<RDSample> samples =
      sample_curve(truth, {1, 2, 4, 8, 16, 32, 45});
  // Deterministic +-0.1% perturbation.
  double sign = 1.0;
  for (RDSample& sample : samples) {
    sample.value *= 1.0 + sign * 1e-3;
    sign = -sign;
  }
  const FitResult fit = fit_power_series(samples, ModelKind::kDistortion);
  EXPECT_NEAR(fit.params.omega, truth.omega, std::abs(truth.omega) * 0.05);
}

TEST(FitPowerSeries, RequiresEnoughDistinctSamples) {
  const std::vector<RDSample> three = {{1, 10}, {2, 8}, {4, 7}};
  EXPECT_THROW(fit_power_series(three, ModelKind::kDistortion), FitError);
  const std::vector<RDSample> repeated = {{1, 10}, {1, 10}, {2, 8}, {2, 8}};
  EXPECT_THROW(fit_power_series(repeated, ModelKind::kDistortion), FitError);
}

TEST(FitPowerSeries, RejectsNonPositiveBitrates) {
  const std::vector<RDSample> samples = {{0, 10}, {2, 8}, {4, 7}, {8, 6}};
  EXPECT_THROW(fit_power_series(samples, ModelKind::kDistortion), FitError);
}

TEST(LoadRdSamples, ParsesCsv) {
  std::istringstream input("z,value\n1,370.0\n2,250.5\n\n# comment\n4,180\n");
  const std::vector<RDSample> samples = load_rd_samples(input);
  ASSERT_EQ(samples.size(), 3u);
  EXPECT_DOUBLE_EQ(samples[1].z, 2.0);
  EXPECT_DOUBLE_EQ(samples[1].value, 250.5);
}

TEST(LoadRdSamples, RequiresExactHeader) {
  std::istringstream input("bitrate,value\n1,370.0\n");
  EXPECT_THROW(load_rd_samples(input), ParseError);
}

TEST(LoadRdSamples, ReportsBadRowNumber) {
  std::istringstream input("z,value\n1,370.0\n2,abc\n");
  try {
    load_rd_samples(input);
    FAIL() << "expected ParseError";
  } catch (const ParseError& error) {
    EXPECT_NE(std::string(error.what()).find("line 3"), std::string::npos);
  }
}

}  // namespace
}  // namespace ladder360
