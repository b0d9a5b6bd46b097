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

#include <ladder360/report.hpp>

#include <sstream>
#include <string>

#include <gtest/gtest.h>

#include <ladder360/config.hpp>
#include <ladder360/domain.hpp>
#include <ladder360/solver.hpp>

namespace ladder360 {
namespace {

Ladder solved_default_ladder(int content_type) {
  const Config config = default_config();
  return solve(generate_candidates(config.solver, config.grid,
                                   config.resolutions, config.models,
                                   content_type, config.thresholds),
               config.solver);
}

TEST(VendorLadders, ShipThreeReferenceSetups) {
  EXPECT_EQ(vendor_ladders().size(), 3u);
  const VendorLadder& apple = vendor_ladder("apple");
  ASSERT_EQ(apple.rungs.size(), 4u);
  EXPECT_EQ(apple.rungs[0].resolution, (Resolution{3072, 1536}));
  EXPECT_DOUBLE_EQ(apple.rungs[0].z_mbps, 11.0);
  EXPECT_DOUBLE_EQ(apple.rungs[3].z_mbps, 45.0);

  const VendorLadder& netflix = vendor_ladder("netflix");
  EXPECT_DOUBLE_EQ(netflix.rungs[0].z_mbps, 17.5);
  EXPECT_EQ(netflix.rungs[2].resolution, (Resolution{4096, 2048}));

  EXPECT_THROW(vendor_ladder("unknown"), ConfigError);
}

TEST(FormatReport, EchoesConfigAndRungs) {
  RunReport report;
  report.content_type = 1;
  report.solver = default_config().solver;
  report.ladder = solved_default_ladder(1);
  report.candidate_count = 63;
  report.wall_ms = 1.5;
  const std::string text = format_report(report);
  EXPECT_NE(text.find("content_type: o1"), std::string::npos);
  EXPECT_NE(text.find("candidates: 63"), std::string::npos);
  EXPECT_NE(text.find("gamma=0.1"), std::string::npos);
  EXPECT_NE(text.find("3072x1536"), std::string::npos);
  EXPECT_NE(text.find("2.49"), std::string::npos);  // two-decimal bitrates
  EXPECT_NE(text.find("objective:"), std::string::npos);
}

TEST(LadderJson, RoundTripsThroughParser) {
  const Ladder ladder = solved_default_ladder(2);
  const SolverConfig solver = default_config().solver;
  const std::string json = ladder_to_json(ladder, solver);

  std::istringstream input(json);
  const ParsedLadder parsed = parse_ladder_json(input);
  ASSERT_EQ(parsed.entries.size(), ladder.entries.size());
  EXPECT_DOUBLE_EQ(parsed.gamma, solver.gamma);
  for (std::size_t i = 0; i < parsed.entries.size(); ++i) {
    EXPECT_EQ(parsed.entries[i].resolution, ladder.entries[i].rep.resolution);
    EXPECT_NEAR(parsed.entries[i].z_mbps, ladder.entries[i].rep.z_mbps, 0.005);
    EXPECT_NEAR(parsed.entries[i].distortion, ladder.entries[i].rep.distortion,
                0.0005);
  }
}

TEST(LadderJson, DeterministicText) {
  const Ladder ladder = solved_default_ladder(3);
  const SolverConfig solver = default_config().solver;
  EXPECT_EQ(ladder_to_json(ladder, solver), ladder_to_json(ladder, solver));
}

TEST(ParseLadderJson, RejectsMalformedDocuments) {
  {
    std::istringstream input("not json");
    EXPECT_THROW(parse_ladder_json(input), ParseError);
  }
  {
    std::istringstream input(R"({"objective": 1.0})");
    EXPECT_THROW(parse_ladder_json(input), ParseError);
  }
  {
    std::istringstream input(
        R"({"representations": [{"profile": "p1"}], "objective": 1, "gamma": 0})");
    EXPECT_THROW(parse_ladder_json(input), ParseError);
  }
}

}  // namespace
}  // namespace ladder360
