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

#ifndef LADDER360_TOOLS_COMMANDS_HPP_
#define LADDER360_TOOLS_COMMANDS_HPP_

#include <iosfwd>
#include <optional>
#include <string>

namespace ladder360::tools {

// Exit codes shared by every subcommand.
inline constexpr int kExitOk = 0;
inline constexpr int kExitInternal = 1;
inline constexpr int kExitInput = 2;
inline constexpr int kExitInfeasible = 3;

struct ExtractOptions {
  std::string stats_path;
  double normalizer_bytes = 0.0;
};

struct ClassifyOptions {
  std::string config_path;  // empty = built-in defaults
  std::string features;     // "f_spa,f_tmp"; alternative to stats
  std::string stats_path;
  double normalizer_bytes = 0.0;
};

struct FitOptions {
  std::string samples_path;
  std::string kind;  // "distortion" | "data_size"
};

struct OptimizeOptions {
  std::string config_path;   // empty = built-in defaults
  std::string content_type;  // "o1".."oN"; alternative to features
  std::string features;      // "f_spa,f_tmp"
  std::optional<double> gamma;
  std::string json_path;  // optional machine-readable output
};

struct CompareOptions {
  std::string ladder_path;
  std::string reference;    // apple | axinom | netflix
  std::string models_path;  // config file; empty = built-in defaults
  std::string content_type;
  std::string rd_ladder_path;     // optional RD-curve CSV outputs
  std::string rd_reference_path;
};

struct ScoreOptions {
  std::string reference_path;
  std::string test_path;
  int rows = 1;
  int cols = 1;
};

struct BdrateOptions {
  std::string reference_path;
  std::string test_path;
};

// Each command prints its result to `out`, errors to `err`, and returns an
// exit code: 0 success, 2 input/config error, 3 infeasible.
int cmd_extract_features(const ExtractOptions& options, std::ostream& out,
                         std::ostream& err);
int cmd_classify(const ClassifyOptions& options, std::ostream& out,
                 std::ostream& err);
int cmd_fit(const FitOptions& options, std::ostream& out, std::ostream& err);
int cmd_optimize(const OptimizeOptions& options, std::ostream& out,
                 std::ostream& err);
int cmd_compare(const CompareOptions& options, std::ostream& out,
                std::ostream& err);
int cmd_score(const ScoreOptions& options, std::ostream& out,
              std::ostream& err);
int cmd_bdrate(const BdrateOptions& options, std::ostream& out,
               std::ostream& err);

}  // namespace ladder360::tools

#endif  // LADDER360_TOOLS_COMMANDS_HPP_
