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

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include <gtest/gtest.h>

#include <ladder360/config.hpp>

#include "commands.hpp"

namespace ladder360::tools {
namespace {

class TempDir {
 public:
  TempDir() {
    root_ = std::filesystem::temp_directory_path() /
            ("ladder360_cli_test_" + std::to_string(::getpid()) + "_" +
             std::to_string(counter_++));
    std::filesystem::create_directories(root_);
  }
  ~TempDir() { std::filesystem::remove_all(root_); }

  std::string file(const std::string& name, const std::string& content) const {
    const std::filesystem::path path = root_ / name;
    std::ofstream out(path, std::ios::binary);
    out << content;
    return path.string();
  }

  std::string path(const std::string& name) const {
    return (root_ / name).string();
  }

 private:
  static inline int counter_ = 0;
  std::filesystem::path root_;
};

std::string y4m_constant(int width, int height, int frames,
                         std::uint8_t value) {
  std::string out = "YUV4MPEG2 W" + std::to_string(width) + " H" +
                    std::to_string(height) + " F30:1 C420jpeg\n";
  const std::size_t luma = static_cast<std::size_t>(width) * height;
  const std::size_t chroma = 2 * static_cast<std::size_t>(width / 2) * (height / 2);
  for (int f = 0; f < frames; ++f) {
    out += "FRAME\n";
    out.append(luma, static_cast<char>(value));
    out.append(chroma, '\x80');
  }
  return out;
}

TEST(CmdExtractFeatures, PrintsBothFeatures) {
  TempDir dir;
  ExtractOptions options;
  options.stats_path =
      dir.file("stats.csv", "I,120000\nP,12000\nP,12000\nI,120000\n");
  options.normalizer_bytes = 160000.0;
  std::ostringstream out, err;
  EXPECT_EQ(cmd_extract_features(options, out, err), kExitOk);
  EXPECT_EQ(out.str(), "f_spa=0.750 f_tmp=0.100\n");
  EXPECT_TRUE(err.str().empty());
}

TEST(CmdExtractFeatures, MissingFileGivesInputError) {
  TempDir dir;
  ExtractOptions options;
  options.stats_path = dir.path("absent.csv");
  options.normalizer_bytes = 1000.0;
  std::ostringstream out, err;
  EXPECT_EQ(cmd_extract_features(options, out, err), kExitInput);
  EXPECT_NE(err.str().find("error:"), std::string::npos);
}

TEST(CmdClassify, ClassifiesExplicitFeaturePair) {
  ClassifyOptions options;
  options.features = "0.977,0.065";
  std::ostringstream out, err;
  EXPECT_EQ(cmd_classify(options, out, err), kExitOk);
  EXPECT_EQ(out.str(), "o1\n");
}

TEST(CmdClassify, ClassifiesFromStats) {
  TempDir dir;
  ClassifyOptions options;
  options.stats_path = dir.file("stats.csv", "I,90000\nP,50000\n");
  options.normalizer_bytes = 100000.0;
  std::ostringstream out, err;
  EXPECT_EQ(cmd_classify(options, out, err), kExitOk);
  // f_spa = 0.9, f_tmp = 0.556 -> nearest to the third centroid.
  EXPECT_EQ(out.str(), "o3\n");
}

TEST(CmdClassify, RejectsMalformedFeaturePair) {
  ClassifyOptions options;
  options.features = "0.5;0.5";
  std::ostringstream out, err;
  EXPECT_EQ(cmd_classify(options, out, err), kExitInput);
}

TEST(CmdFit, RecoversCleanSamples) {
  TempDir dir;
  FitOptions options;
  options.samples_path = dir.file(
      "samples.csv",
      "z,value\n1,1814.649\n2,1121.9440461058245\n4,694.7689009826737\n"
      "8,431.3282237503526\n16,268.8692035381493\n32,168.6558862160382\n");
  options.kind = "distortion";
  std::ostringstream out, err;
  EXPECT_EQ(cmd_fit(options, out, err), kExitOk);
  EXPECT_NE(out.str().find("k="), std::string::npos);
  EXPECT_NE(out.str().find("omega="), std::string::npos);
  EXPECT_NE(out.str().find("phi="), std::string::npos);
  EXPECT_NE(out.str().find("sse="), std::string::npos);
}

TEST(CmdFit, RejectsUnknownKind) {
  TempDir dir;
  FitOptions options;
  options.samples_path = dir.file("samples.csv", "z,value\n1,10\n2,8\n4,7\n8,6\n");
  options.kind = "quality";
  std::ostringstream out, err;
  EXPECT_EQ(cmd_fit(options, out, err), kExitInput);
}

TEST(CmdOptimize, ReportsLadderAndWritesJson) {
  TempDir dir;
  OptimizeOptions options;
  options.content_type = "o1";
  options.json_path = dir.path("ladder.json");
  std::ostringstream out, err;
  EXPECT_EQ(cmd_optimize(options, out, err), kExitOk);
  EXPECT_NE(out.str().find("content_type: o1"), std::string::npos);
  EXPECT_NE(out.str().find("objective: 4385.861"), std::string::npos);

  std::ifstream json(options.json_path);
  ASSERT_TRUE(json.good());
  std::stringstream buffer;
  buffer << json.rdbuf();
  EXPECT_NE(buffer.str().find("\"representations\""), std::string::npos);
  EXPECT_NE(buffer.str().find("\"z_mbps\": 2.49"), std::string::npos);
}

TEST(CmdOptimize, GammaOverrideChangesObjective) {
  OptimizeOptions options;
  options.content_type = "o2";
  options.gamma = 0.5;
  std::ostringstream out, err;
  EXPECT_EQ(cmd_optimize(options, out, err), kExitOk);
  EXPECT_NE(out.str().find("gamma=0.5"), std::string::npos);
  EXPECT_NE(out.str().find("objective: 579.777"), std::string::npos);
}

TEST(CmdOptimize, ClassifiesWhenGivenFeatures) {
  OptimizeOptions options;
  options.features = "0.789,0.212";
  std::ostringstream out, err;
  EXPECT_EQ(cmd_optimize(options, out, err), kExitOk);
  EXPECT_NE(out.str().find("content_type: o3"), std::string::npos);
}

TEST(CmdOptimize, InfeasibleSetupExitsWithDedicatedCode) {
  TempDir dir;
  Config config = default_config();
  config.solver.s_max = 1.0;  // far below any 12-rung ladder
  OptimizeOptions options;
  options.config_path = dir.file("tight.cfg", serialize_config(config));
  options.content_type = "o1";
  std::ostringstream out, err;
  EXPECT_EQ(cmd_optimize(options, out, err), kExitInfeasible);
  EXPECT_NE(err.str().find("infeasible"), std::string::npos);
}

TEST(CmdOptimize, RejectsUnknownContentType) {
  OptimizeOptions options;
  options.content_type = "o9";
  std::ostringstream out, err;
  EXPECT_EQ(cmd_optimize(options, out, err), kExitInput);
}

TEST(CmdCompare, EvaluatesVendorLadderWithModels) {
  TempDir dir;
  // First produce our ladder JSON, then compare it against a vendor setup.
  OptimizeOptions optimize;
  optimize.content_type = "o2";
  optimize.json_path = dir.path("ladder.json");
  std::ostringstream opt_out, opt_err;
  ASSERT_EQ(cmd_optimize(optimize, opt_out, opt_err), kExitOk);

  CompareOptions options;
  options.ladder_path = dir.path("ladder.json");
  options.reference = "apple";
  options.content_type = "o2";
  options.rd_ladder_path = dir.path("ladder_rd.csv");
  options.rd_reference_path = dir.path("reference_rd.csv");
  std::ostringstream out, err;
  EXPECT_EQ(cmd_compare(options, out, err), kExitOk);
  EXPECT_NE(out.str().find("reference_total:"), std::string::npos);
  EXPECT_NE(out.str().find("ladder_total:"), std::string::npos);
  EXPECT_NE(out.str().find("delta_distortion:"), std::string::npos);

  std::ifstream rd(options.rd_ladder_path);
  std::string header;
  std::getline(rd, header);
  EXPECT_EQ(header, "rate_mbps,quality_db");
}

TEST(CmdCompare, RejectsUnknownReference) {
  TempDir dir;
  CompareOptions options;
  options.ladder_path = dir.file("ladder.json", "{}");
  options.reference = "nonesuch";
  options.content_type = "o1";
  std::ostringstream out, err;
  EXPECT_EQ(cmd_compare(options, out, err), kExitInput);
}

TEST(CmdScore, PrintsTileTableAndSummary) {
  TempDir dir;
  ScoreOptions options;
  options.reference_path = dir.file("ref.y4m", y4m_constant(8, 4, 2, 100));
  options.test_path = dir.file("test.y4m", y4m_constant(8, 4, 2, 110));
  options.rows = 2;
  options.cols = 2;
  std::ostringstream out, err;
  EXPECT_EQ(cmd_score(options, out, err), kExitOk);
  const std::string text = out.str();
  EXPECT_NE(text.find("tile_row,tile_col,ws_mse"), std::string::npos);
  EXPECT_NE(text.find("0,0,100.000"), std::string::npos);
  EXPECT_NE(text.find("full,,100.000"), std::string::npos);
  EXPECT_NE(text.find("ws_psnr_db,,28.131"), std::string::npos);
}

TEST(CmdScore, IdenticalStreamsReportInfinitePsnr) {
  TempDir dir;
  ScoreOptions options;
  options.reference_path = dir.file("ref.y4m", y4m_constant(8, 4, 1, 37));
  options.test_path = dir.file("test.y4m", y4m_constant(8, 4, 1, 37));
  options.rows = 1;
  options.cols = 1;
  std::ostringstream out, err;
  EXPECT_EQ(cmd_score(options, out, err), kExitOk);
  EXPECT_NE(out.str().find("ws_psnr_db,,inf"), std::string::npos);
}

TEST(CmdScore, MismatchedStreamsGiveInputError) {
  TempDir dir;
  ScoreOptions options;
  options.reference_path = dir.file("ref.y4m", y4m_constant(8, 4, 2, 100));
  options.test_path = dir.file("test.y4m", y4m_constant(4, 4, 2, 100));
  options.rows = 1;
  options.cols = 1;
  std::ostringstream out, err;
  EXPECT_EQ(cmd_score(options, out, err), kExitInput);
}

TEST(CmdBdrate, PrintsSingleNumber) {
  TempDir dir;
  const std::string curve = "rate_mbps,quality_db\n1,30\n2,35\n4,40\n8,45\n";
  BdrateOptions options;
  options.reference_path = dir.file("ref.csv", curve);
  options.test_path = dir.file("test.csv", curve);
  std::ostringstream out, err;
  EXPECT_EQ(cmd_bdrate(options, out, err), kExitOk);
  EXPECT_EQ(out.str(), "0.000\n");
}

TEST(CmdBdrate, NonOverlappingCurvesGiveInputError) {
  TempDir dir;
  BdrateOptions options;
  options.reference_path =
      dir.file("ref.csv", "rate_mbps,quality_db\n1,10\n2,12\n4,14\n8,16\n");
  options.test_path =
      dir.file("test.csv", "rate_mbps,quality_db\n1,30\n2,35\n4,40\n8,45\n");
  std::ostringstream out, err;
  EXPECT_EQ(cmd_bdrate(options, out, err), kExitInput);
}

}  // namespace
}  // namespace ladder360::tools
