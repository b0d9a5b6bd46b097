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

#include "commands.hpp"

#include <charconv>
#include <chrono>
#include <cstdio>
#include <fstream>
#include <ostream>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "ladder360/bdrate.hpp"
#include "ladder360/config.hpp"
#include "ladder360/domain.hpp"
#include "ladder360/features.hpp"
#include "ladder360/rdmodel.hpp"
#include "ladder360/report.hpp"
#include "ladder360/solver.hpp"
#include "ladder360/sphere_metrics.hpp"

namespace ladder360::tools {
namespace {

std::string fixed(double value, int decimals) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.*f", decimals, value);
  return std::string(buf);
}

std::string shortest(double value) {
  char buf[64];
  const auto [ptr, ec] =
      std::to_chars(buf, buf + sizeof(buf), value, std::chars_format::general);
  return ec == std::errc{} ? std::string(buf, ptr) : std::string("0");
}

std::ifstream open_text(const std::string& path) {
  std::ifstream file(path);
  if (!file.is_open()) throw ConfigError("cannot open file: " + path);
  return file;
}

std::ifstream open_binary(const std::string& path) {
  std::ifstream file(path, std::ios::binary);
  if (!file.is_open()) throw ConfigError("cannot open file: " + path);
  return file;
}

void write_file(const std::string& path, const std::string& content) {
  std::ofstream file(path, std::ios::binary);
  if (!file.is_open()) throw ConfigError("cannot open file for writing: " + path);
  file << content;
  if (!file.good()) throw ConfigError("failed to write file: " + path);
}

// Maps every domain failure onto the documented exit codes.
template <typename Fn>
int guarded(Fn&& fn, std::ostream& err) {
  try {
    return std::forward<Fn>(fn)();
  } catch (const InfeasibleError& error) {
    err << "error: infeasible: " << error.what() << "\n";
    return kExitInfeasible;
  } catch (const ConfigError& error) {
    err << "error: " << error.what() << "\n";
    return kExitInput;
  } catch (const ParseError& error) {
    err << "error: " << error.what() << "\n";
    return kExitInput;
  } catch (const FitError& error) {
    err << "error: " << error.what() << "\n";
    return kExitInput;
  } catch (const std::invalid_argument& error) {
    err << "error: " << error.what() << "\n";
    return kExitInput;
  } catch (const std::exception& error) {
    err << "error: " << error.what() << "\n";
    return kExitInternal;
  }
}

Config load_config_or_default(const std::string& path) {
  if (path.empty()) return default_config();
  std::ifstream file = open_text(path);
  return parse_config(file);
}

// "0.88,0.11" -> EncodingFeatures
EncodingFeatures parse_feature_pair(const std::string& text) {
  const auto comma = text.find(',');
  if (comma == std::string::npos) {
    throw ConfigError("features must be given as 'f_spa,f_tmp'");
  }
  const std::string spa = text.substr(0, comma);
  const std::string tmp = text.substr(comma + 1);
  EncodingFeatures features;
  auto parse_one = [](const std::string& part, const char* what) {
    double value = 0.0;
    const auto [ptr, ec] =
        std::from_chars(part.data(), part.data() + part.size(), value);
    if (ec != std::errc{} || ptr != part.data() + part.size()) {
      throw ConfigError(std::string("invalid ") + what + " value '" + part +
                        "'");
    }
    return value;
  };
  features.f_spa = parse_one(spa, "f_spa");
  features.f_tmp = parse_one(tmp, "f_tmp");
  return features;
}

// "o2" (or bare "2") -> 2, bounded by the configured centroid count.
int parse_content_type(const std::string& text, std::size_t available) {
  std::string digits = text;
  if (!digits.empty() && digits.front() == 'o') digits = digits.substr(1);
  int value = 0;
  const auto [ptr, ec] =
      std::from_chars(digits.data(), digits.data() + digits.size(), value);
  if (ec != std::errc{} || ptr != digits.data() + digits.size() || value < 1 ||
      value > static_cast<int>(available)) {
    throw ConfigError("unknown content type '" + text + "' (known: o1..o" +
                      std::to_string(available) + ")");
  }
  return value;
}

int resolution_index(const std::vector<Resolution>& resolutions,
                     const Resolution& wanted) {
  for (std::size_t g = 0; g < resolutions.size(); ++g) {
    if (resolutions[g] == wanted) return static_cast<int>(g) + 1;
  }
  throw ConfigError("resolution " + std::to_string(wanted.width) + "x" +
                    std::to_string(wanted.height) +
                    " is not in the configured resolution list");
}

struct RungEval {
  double z_mbps = 0.0;
  double distortion = 0.0;
};

std::string rd_curve_csv(const std::vector<RungEval>& rungs) {
  std::ostringstream csv;
  csv << "rate_mbps,quality_db\n";
  for (const RungEval& rung : rungs) {
    csv << fixed(rung.z_mbps, 2) << "," << fixed(ws_psnr(rung.distortion), 3)
        << "\n";
  }
  return csv.str();
}

}  // namespace

int cmd_extract_features(const ExtractOptions& options, std::ostream& out,
                         std::ostream& err) {
  return guarded(
      [&]() {
        std::ifstream file = open_text(options.stats_path);
        const std::vector<FrameRecord> records = parse_frame_stats(file);
        const EncodingFeatures features =
            extract_features(records, options.normalizer_bytes);
        out << "f_spa=" << fixed(features.f_spa, 3)
            << " f_tmp=" << fixed(features.f_tmp, 3) << "\n";
        return kExitOk;
      },
      err);
}

int cmd_classify(const ClassifyOptions& options, std::ostream& out,
                 std::ostream& err) {
  return guarded(
      [&]() {
        const Config config = load_config_or_default(options.config_path);
        EncodingFeatures features;
        if (!options.features.empty()) {
          features = parse_feature_pair(options.features);
        } else if (!options.stats_path.empty()) {
          std::ifstream file = open_text(options.stats_path);
          features = extract_features(parse_frame_stats(file),
                                      options.normalizer_bytes);
        } else {
          throw ConfigError("either --features or --stats is required");
        }
        out << "o" << classify(features, config.centroids) << "\n";
        return kExitOk;
      },
      err);
}

int cmd_fit(const FitOptions& options, std::ostream& out, std::ostream& err) {
  return guarded(
      [&]() {
        ModelKind kind;
        if (options.kind == "distortion") {
          kind = ModelKind::kDistortion;
        } else if (options.kind == "data_size") {
          kind = ModelKind::kDataSize;
        } else {
          throw ConfigError("unknown model kind '" + options.kind +
                            "' (known: distortion, data_size)");
        }
        std::ifstream file = open_text(options.samples_path);
        const std::vector<RDSample> samples = load_rd_samples(file);
        const FitResult result = fit_power_series(samples, kind);
        out << "k=" << shortest(result.params.k)
            << " omega=" << shortest(result.params.omega)
            << " phi=" << shortest(result.params.phi)
            << " sse=" << shortest(result.sse) << "\n";
        return kExitOk;
      },
      err);
}

int cmd_optimize(const OptimizeOptions& options, std::ostream& out,
                 std::ostream& err) {
  return guarded(
      [&]() {
        Config config = load_config_or_default(options.config_path);
        if (options.gamma.has_value()) config.solver.gamma = *options.gamma;
        validate_full_config(config);

        int content_type = 0;
        if (!options.content_type.empty()) {
          content_type = parse_content_type(options.content_type,
                                            config.centroids.size());
        } else if (!options.features.empty()) {
          content_type = classify(parse_feature_pair(options.features),
                                  config.centroids);
        } else {
          throw ConfigError("either --content-type or --features is required");
        }

        const auto start = std::chrono::steady_clock::now();
        const std::vector<CandidateRep> candidates = generate_candidates(
            config.solver, config.grid, config.resolutions, config.models,
            content_type, config.thresholds);
        const Ladder ladder = solve(candidates, config.solver);
        const auto stop = std::chrono::steady_clock::now();

        RunReport report;
        report.content_type = content_type;
        report.candidate_count = candidates.size();
        report.ladder = ladder;
        report.solver = config.solver;
        report.wall_ms =
            std::chrono::duration<double, std::milli>(stop - start).count();
        out << format_report(report);
        if (!options.json_path.empty()) {
          write_file(options.json_path, ladder_to_json(ladder, config.solver));
        }
        return kExitOk;
      },
      err);
}

int cmd_compare(const CompareOptions& options, std::ostream& out,
                std::ostream& err) {
  return guarded(
      [&]() {
        const Config config = load_config_or_default(options.models_path);
        const int content_type =
            parse_content_type(options.content_type, config.centroids.size());
        const VendorLadder& reference = vendor_ladder(options.reference);

        std::ifstream ladder_file = open_text(options.ladder_path);
        const ParsedLadder ladder = parse_ladder_json(ladder_file);
        if (ladder.entries.empty()) {
          throw ConfigError("ladder JSON contains no representations");
        }

        auto evaluate = [&](const Resolution& resolution, double z) {
          const int g = resolution_index(config.resolutions, resolution);
          const PowerFitParams& params =
              config.models.at(content_type, g, ModelKind::kDistortion);
          return rep_distortion(params, z, config.solver.n_tiles).total;
        };

        std::vector<RungEval> reference_rungs;
        out << "rung source z_mbps distortion\n";
        double reference_total = 0.0;
        for (std::size_t i = 0; i < reference.rungs.size(); ++i) {
          const VendorRung& rung = reference.rungs[i];
          const double d = evaluate(rung.resolution, rung.z_mbps);
          reference_total += d;
          reference_rungs.push_back(RungEval{rung.z_mbps, d});
          out << i + 1 << " " << reference.name << " " << fixed(rung.z_mbps, 2)
              << " " << fixed(d, 3) << "\n";
        }
        std::vector<RungEval> ladder_rungs;
        double ladder_total = 0.0;
        for (std::size_t i = 0; i < ladder.entries.size(); ++i) {
          const ParsedLadder::Entry& entry = ladder.entries[i];
          const double d = evaluate(entry.resolution, entry.z_mbps);
          ladder_total += d;
          ladder_rungs.push_back(RungEval{entry.z_mbps, d});
          out << i + 1 << " ladder " << fixed(entry.z_mbps, 2) << " "
              << fixed(d, 3) << "\n";
        }
        out << "reference_total: " << fixed(reference_total, 3) << "\n";
        out << "ladder_total: " << fixed(ladder_total, 3) << "\n";
        out << "delta_distortion: " << fixed(ladder_total - reference_total, 3)
            << "\n";

        if (!options.rd_reference_path.empty()) {
          write_file(options.rd_reference_path, rd_curve_csv(reference_rungs));
        }
        if (!options.rd_ladder_path.empty()) {
          write_file(options.rd_ladder_path, rd_curve_csv(ladder_rungs));
        }
        return kExitOk;
      },
      err);
}

int cmd_score(const ScoreOptions& options, std::ostream& out,
              std::ostream& err) {
  return guarded(
      [&]() {
        std::ifstream reference = open_binary(options.reference_path);
        std::ifstream test = open_binary(options.test_path);
        const SequenceResult result =
            sequence_ws_mse(reference, test, options.rows, options.cols);
        out << "tile_row,tile_col,ws_mse\n";
        for (int r = 0; r < result.rows; ++r) {
          for (int c = 0; c < result.cols; ++c) {
            out << r << "," << c << ","
                << fixed(result.tile_mean_mse[static_cast<std::size_t>(r) *
                                                  result.cols +
                                              c],
                         3)
                << "\n";
          }
        }
        out << "full,," << fixed(result.frame_mean_mse, 3) << "\n";
        out << "ws_psnr_db,," << fixed(ws_psnr(result.frame_mean_mse), 3)
            << "\n";
        return kExitOk;
      },
      err);
}

int cmd_bdrate(const BdrateOptions& options, std::ostream& out,
               std::ostream& err) {
  return guarded(
      [&]() {
        std::ifstream reference_file = open_text(options.reference_path);
        const RDCurve reference = load_rd_curve(reference_file);
        std::ifstream test_file = open_text(options.test_path);
        const RDCurve test = load_rd_curve(test_file);
        out << fixed(bd_rate(reference, test), 3) << "\n";
        return kExitOk;
      },
      err);
}

}  // namespace ladder360::tools
