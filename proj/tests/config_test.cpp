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

#include <ladder360/config.hpp>

#include <sstream>
#include <string>

#include <gtest/gtest.h>

#include <ladder360/domain.hpp>

namespace ladder360 {
namespace {

TEST(DefaultConfig, IsValidAndComplete) {
  const Config config = default_config();
  EXPECT_NO_THROW(validate_full_config(config));
  EXPECT_EQ(config.solver.profiles.size(), 4u);
  EXPECT_EQ(config.resolutions.size(), 3u);
  EXPECT_EQ(config.centroids.size(), 3u);
  EXPECT_NO_THROW(config.models.require_complete(3, 3));
}

TEST(DefaultConfig, SpotChecksAgainstTheShippedTables) {
  const Config config = default_config();
  EXPECT_DOUBLE_EQ(config.solver.gamma, 0.1);
  EXPECT_EQ(config.solver.m_total, 12);
  EXPECT_DOUBLE_EQ(config.solver.tau, 1.2);
  EXPECT_DOUBLE_EQ(config.solver.profiles[2].b_min_mbps, 15.0);
  EXPECT_DOUBLE_EQ(config.solver.profiles[3].b_max_mbps, 40.0);
  EXPECT_EQ(config.resolutions[2], (Resolution{8192, 4096}));
  EXPECT_DOUBLE_EQ(config.centroids[1].f_spa, 0.843);
  EXPECT_DOUBLE_EQ(config.centroids[1].f_tmp, 0.090);

  const PowerFitParams& o2g3 = config.models.at(2, 3, ModelKind::kDistortion);
  EXPECT_DOUBLE_EQ(o2g3.k, 480.6);
  EXPECT_DOUBLE_EQ(o2g3.omega, -0.3643);
  EXPECT_DOUBLE_EQ(o2g3.phi, -5.728);
  const PowerFitParams& o3g1 = config.models.at(3, 1, ModelKind::kDataSize);
  EXPECT_DOUBLE_EQ(o3g1.k, 0.6631);
  EXPECT_DOUBLE_EQ(o3g1.omega, 1.001);
  EXPECT_DOUBLE_EQ(o3g1.phi, 10.69);
}

TEST(ConfigRoundTrip, SerializeParseIsIdentity) {
  const Config config = default_config();
  const std::string text = serialize_config(config);
  std::istringstream input(text);
  const Config reparsed = parse_config(input);
  EXPECT_EQ(reparsed, config);
  // A second round trip must produce byte-identical text.
  EXPECT_EQ(serialize_config(reparsed), text);
}

TEST(ConfigRoundTrip, PreservesCustomSetups) {
  Config config = default_config();
  config.solver.gamma = 0.35;
  config.solver.m_total = 8;
  config.solver.profiles[1].b_max_mbps = 18.5;
  config.grid.rules[2] = {15.0, 1.33};
  config.thresholds.up_to_720p = 1000000;
  const std::string text = serialize_config(config);
  std::istringstream input(text);
  EXPECT_EQ(parse_config(input), config);
}

TEST(ParseConfig, ReadsMinimalFile) {
  const std::string text = R"(# minimal setup
[solver]
gamma = 0.2
m_total = 4
tau = 1.1
s_max = 100
c_max = 100
mu_e = 0.01
mu_s = 0.02
n_tiles = 4

[profiles]
low.b_min_mbps = 1.00
low.b_max_mbps = 10.00
low.lambda = 1

[resolutions]
g1.width = 1024
g1.height = 512

[centroids]
o1.f_spa = 0.5
o1.f_tmp = 0.1

[models]
o1.g1.distortion.k = 100
o1.g1.distortion.omega = -0.5
o1.g1.distortion.phi = 2
o1.g1.data_size.k = 0.5
o1.g1.data_size.omega = 1
o1.g1.data_size.phi = 10
)";
  std::istringstream input(text);
  const Config config = parse_config(input);
  EXPECT_EQ(config.solver.profiles.size(), 1u);
  EXPECT_EQ(config.solver.profiles[0].name, "low");
  EXPECT_DOUBLE_EQ(config.solver.profiles[0].b_max_mbps, 10.0);
  // Without a [grids] section each profile anchors at the smallest band
  // minimum with the standard ratio.
  ASSERT_EQ(config.grid.rules.size(), 1u);
  EXPECT_DOUBLE_EQ(config.grid.rules[0].anchor_mbps, 1.0);
  EXPECT_DOUBLE_EQ(config.grid.rules[0].ratio, 1.2);
  // Without a [cost] section the standard class boundaries apply.
  EXPECT_EQ(config.thresholds, CostThresholds{});
}

TEST(ParseConfig, KeepsProfileOrderOfFirstAppearance) {
  const std::string text = R"([solver]
gamma = 0
m_total = 2
tau = 1
s_max = 10
c_max = 10
mu_e = 0.01
mu_s = 0.01
n_tiles = 1

[profiles]
high.b_min_mbps = 10.00
high.b_max_mbps = 20.00
high.lambda = 1
low.b_min_mbps = 1.00
low.b_max_mbps = 5.00
low.lambda = 1

[resolutions]
g1.width = 1024
g1.height = 512

[centroids]
o1.f_spa = 0.5
o1.f_tmp = 0.1

[models]
o1.g1.distortion.k = 100
o1.g1.distortion.omega = -0.5
o1.g1.distortion.phi = 2
o1.g1.data_size.k = 0.5
o1.g1.data_size.omega = 1
o1.g1.data_size.phi = 10
)";
  std::istringstream input(text);
  const Config config = parse_config(input);
  ASSERT_EQ(config.solver.profiles.size(), 2u);
  EXPECT_EQ(config.solver.profiles[0].name, "high");
  EXPECT_EQ(config.solver.profiles[1].name, "low");
}

std::string default_text_with(const std::string& needle,
                              const std::string& replacement) {
  std::string text = serialize_config(default_config());
  const std::size_t pos = text.find(needle);
  EXPECT_NE(pos, std::string::npos) << needle;
  text.replace(pos, needle.size(), replacement);
  return text;
}

TEST(ParseConfig, RejectsUnknownSectionsAndKeys) {
  {
    std::istringstream input(default_text_with("[solver]", "[sover]"));
    EXPECT_THROW(parse_config(input), ConfigError);
  }
  {
    std::istringstream input(default_text_with("gamma =", "gama ="));
    EXPECT_THROW(parse_config(input), ConfigError);
  }
}

TEST(ParseConfig, RejectsDuplicateAndMissingKeys) {
  {
    std::string text = serialize_config(default_config());
    text += "\n[solver]\ngamma = 0.3\n";
    std::istringstream input(text);
    EXPECT_THROW(parse_config(input), ConfigError);
  }
  {
    std::istringstream input(default_text_with("tau = 1.2\n", ""));
    EXPECT_THROW(parse_config(input), ConfigError);
  }
}

TEST(ParseConfig, RejectsMalformedNumbersWithLineInfo) {
  std::istringstream input(default_text_with("gamma = 0.1", "gamma = x.1"));
  try {
    parse_config(input);
    FAIL() << "expected ParseError";
  } catch (const ParseError& error) {
    EXPECT_NE(std::string(error.what()).find("line"), std::string::npos);
  }
}

TEST(ValidateFullConfig, RejectsCrossFieldInconsistencies) {
  {
    Config config = default_config();
    config.resolutions[1] = config.resolutions[2];
    EXPECT_THROW(validate_full_config(config), ConfigError);
  }
  {
    Config config = default_config();
    config.centroids[1].content_type = 5;  // must stay contiguous o1..oN
    EXPECT_THROW(validate_full_config(config), ConfigError);
  }
  {
    Config config = default_config();
    config.centroids[0].f_spa = 1.5;
    EXPECT_THROW(validate_full_config(config), ConfigError);
  }
  {
    Config config = default_config();
    config.grid.rules.pop_back();
    EXPECT_THROW(validate_full_config(config), ConfigError);
  }
  {
    Config config = default_config();
    config.grid.rules[0].anchor_mbps = 1.005;  // finer than two decimals
    EXPECT_THROW(validate_full_config(config), ConfigError);
  }
  {
    Config config = default_config();
    config.thresholds.up_to_1080p = config.thresholds.up_to_720p;
    EXPECT_THROW(validate_full_config(config), ConfigError);
  }
}

}  // namespace
}  // namespace ladder360
