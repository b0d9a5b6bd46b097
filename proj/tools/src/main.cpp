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

#include <iostream>

#include <CLI11.hpp>

#include "commands.hpp"

int main(int argc, char** argv) {
  using namespace ladder360::tools;

  CLI::App app{
      "Encoding ladder estimation for tiled 360-degree video: content "
      "features, distortion/data-size models, cost-aware ladder "
      "optimization, spherical quality metrics and BD-rate."};
  app.require_subcommand(1);

  ExtractOptions extract;
  CLI::App* cmd_extract =
      app.add_subcommand("extract-features",
                         "Spatial/temporal complexity from frame statistics");
  cmd_extract->add_option("--stats", extract.stats_path,
                          "Frame statistics file (one '<I|P>,<bytes>' per "
                          "line)")
      ->required();
  cmd_extract->add_option("--normalizer", extract.normalizer_bytes,
                          "Intra-size normalizer in bytes")
      ->required();

  ClassifyOptions classify;
  CLI::App* cmd_cls =
      app.add_subcommand("classify", "Assign a content type from features");
  cmd_cls->add_option("--config", classify.config_path,
                      "Config file (defaults to the built-in setup)");
  cmd_cls->add_option("--features", classify.features,
                      "Explicit 'f_spa,f_tmp' pair");
  cmd_cls->add_option("--stats", classify.stats_path,
                      "Frame statistics file to extract features from");
  cmd_cls->add_option("--normalizer", classify.normalizer_bytes,
                      "Intra-size normalizer in bytes (with --stats)");

  FitOptions fit;
  CLI::App* cmd_f = app.add_subcommand(
      "fit", "Fit the two-term power series to rate samples");
  cmd_f->add_option("--samples", fit.samples_path,
                    "CSV with header 'z,value'")
      ->required();
  cmd_f->add_option("--kind", fit.kind, "distortion or data_size")
      ->required();

  OptimizeOptions optimize;
  CLI::App* cmd_opt = app.add_subcommand(
      "optimize", "Estimate the cost-optimal encoding ladder");
  cmd_opt->add_option("--config", optimize.config_path,
                      "Config file (defaults to the built-in setup)");
  cmd_opt->add_option("--content-type", optimize.content_type,
                      "Content type, e.g. o1");
  cmd_opt->add_option("--features", optimize.features,
                      "Classify from an explicit 'f_spa,f_tmp' pair");
  double gamma_value = 0.0;
  CLI::Option* gamma_opt = cmd_opt->add_option(
      "--gamma", gamma_value, "Cost/distortion trade-off in [0, 1]");
  cmd_opt->add_option("--json", optimize.json_path,
                      "Write the machine-readable ladder to this path");

  CompareOptions compare;
  CLI::App* cmd_cmp = app.add_subcommand(
      "compare", "Model-based comparison against a vendor ladder");
  cmd_cmp->add_option("--ladder", compare.ladder_path, "Ladder JSON file")
      ->required();
  cmd_cmp->add_option("--reference", compare.reference,
                      "apple, axinom or netflix")
      ->required();
  cmd_cmp->add_option("--models", compare.models_path,
                      "Config file providing the models (defaults to the "
                      "built-in setup)");
  cmd_cmp->add_option("--content-type", compare.content_type,
                      "Content type, e.g. o1")
      ->required();
  cmd_cmp->add_option("--rd-ladder", compare.rd_ladder_path,
                      "Write the ladder RD curve CSV here");
  cmd_cmp->add_option("--rd-reference", compare.rd_reference_path,
                      "Write the reference RD curve CSV here");

  ScoreOptions score;
  CLI::App* cmd_s = app.add_subcommand(
      "score", "Per-tile and full-frame WS-MSE between two Y4M streams");
  cmd_s->add_option("--reference", score.reference_path, "Reference Y4M")
      ->required();
  cmd_s->add_option("--test", score.test_path, "Test Y4M")->required();
  cmd_s->add_option("--rows", score.rows, "Tile rows")->required();
  cmd_s->add_option("--cols", score.cols, "Tile columns")->required();

  BdrateOptions bdrate;
  CLI::App* cmd_bd = app.add_subcommand(
      "bdrate", "Average bitrate difference between two RD curves");
  cmd_bd->add_option("--reference", bdrate.reference_path,
                     "Reference curve CSV ('rate_mbps,quality_db')")
      ->required();
  cmd_bd->add_option("--test", bdrate.test_path, "Test curve CSV")
      ->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& error) {
    const int code = app.exit(error);
    return code == 0 ? kExitOk : kExitInput;
  }

  if (gamma_opt->count() > 0) optimize.gamma = gamma_value;

  if (cmd_extract->parsed()) {
    return cmd_extract_features(extract, std::cout, std::cerr);
  }
  if (cmd_cls->parsed()) return cmd_classify(classify, std::cout, std::cerr);
  if (cmd_f->parsed()) return cmd_fit(fit, std::cout, std::cerr);
  if (cmd_opt->parsed()) return cmd_optimize(optimize, std::cout, std::cerr);
  if (cmd_cmp->parsed()) return cmd_compare(compare, std::cout, std::cerr);
  if (cmd_s->parsed()) return cmd_score(score, std::cout, std::cerr);
  if (cmd_bd->parsed()) return cmd_bdrate(bdrate, std::cout, std::cerr);
  return kExitInput;
}
