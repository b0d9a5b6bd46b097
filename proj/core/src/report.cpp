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

#include "ladder360/report.hpp"

#include <charconv>
#include <cstdio>
#include <istream>
#include <sstream>
#include <string>

#include <json.hpp>

namespace ladder360 {
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

}  // namespace

const std::vector<VendorLadder>& vendor_ladders() {
  static const std::vector<VendorLadder> ladders = {
      VendorLadder{"apple",
                   {VendorRung{{3072, 1536}, 11.0},
                    VendorRung{{4096, 2048}, 20.0},
                    VendorRung{{8192, 4096}, 30.0},
                    VendorRung{{8192, 4096}, 45.0}}},
      VendorLadder{"axinom",
                   {VendorRung{{3072, 1536}, 12.0},
                    VendorRung{{4096, 2048}, 21.0},
                    VendorRung{{8192, 4096}, 30.0},
                    VendorRung{{8192, 4096}, 45.0}}},
      VendorLadder{"netflix",
                   {VendorRung{{3072, 1536}, 17.5},
                    VendorRung{{4096, 2048}, 23.5},
                    VendorRung{{4096, 2048}, 30.0},
                    VendorRung{{8192, 4096}, 43.0}}},
  };
  return ladders;
}

const VendorLadder& vendor_ladder(const std::string& name) {
  for (const VendorLadder& ladder : vendor_ladders()) {
    if (ladder.name == name) return ladder;
  }
  throw ConfigError("unknown reference ladder '" + name +
                    "' (known: apple, axinom, netflix)");
}

std::string format_report(const RunReport& report) {
  std::ostringstream out;
  const SolverConfig& s = report.solver;
  out << "config: gamma=" << shortest(s.gamma) << " m_total=" << s.m_total
      << " tau=" << shortest(s.tau) << " s_max=" << shortest(s.s_max)
      << " c_max=" << shortest(s.c_max) << " mu_e=" << shortest(s.mu_e)
      << " mu_s=" << shortest(s.mu_s) << " n_tiles=" << s.n_tiles << "\n";
  out << "content_type: o" << report.content_type << "\n";
  out << "candidates: " << report.candidate_count << "\n";
  out << "index profile resolution z_mbps distortion cost\n";
  int index = 1;
  for (const LadderEntry& entry : report.ladder.entries) {
    const std::string profile =
        entry.profile_index >= 0 &&
                entry.profile_index < static_cast<int>(s.profiles.size())
            ? s.profiles[entry.profile_index].name
            : "?";
    out << index++ << " " << profile << " " << entry.rep.resolution.width
        << "x" << entry.rep.resolution.height << " "
        << fixed(entry.rep.z_mbps, 2) << " " << fixed(entry.rep.distortion, 3)
        << " " << fixed(entry.rep.cost, 3) << "\n";
  }
  out << "objective: " << fixed(report.ladder.objective, 3) << "\n";
  out << "total_distortion: " << fixed(report.ladder.total_distortion, 3)
      << "\n";
  out << "total_cost: " << fixed(report.ladder.total_cost, 3) << "\n";
  out << "total_storage: " << fixed(report.ladder.total_storage, 3) << "\n";
  out << "wall_ms: " << fixed(report.wall_ms, 3) << "\n";
  return out.str();
}

std::string ladder_to_json(const Ladder& ladder, const SolverConfig& solver) {
  std::ostringstream out;
  out << "{\n  \"representations\": [";
  for (std::size_t i = 0; i < ladder.entries.size(); ++i) {
    const LadderEntry& entry = ladder.entries[i];
    const std::string profile =
        entry.profile_index >= 0 &&
                entry.profile_index <
                    static_cast<int>(solver.profiles.size())
            ? solver.profiles[entry.profile_index].name
            : "?";
    out << (i == 0 ? "\n" : ",\n");
    out << "    {\"profile\": \"" << profile
        << "\", \"width\": " << entry.rep.resolution.width
        << ", \"height\": " << entry.rep.resolution.height
        << ", \"z_mbps\": " << fixed(entry.rep.z_mbps, 2)
        << ", \"distortion\": " << fixed(entry.rep.distortion, 3)
        << ", \"cost\": " << fixed(entry.rep.cost, 3)
        << ", \"data_size\": " << fixed(entry.rep.data_size, 3) << "}";
  }
  out << "\n  ],\n";
  out << "  \"objective\": " << fixed(ladder.objective, 3) << ",\n";
  out << "  \"gamma\": " << shortest(solver.gamma) << "\n";
  out << "}\n";
  return out.str();
}

ParsedLadder parse_ladder_json(std::istream& input) {
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(input);
  } catch (const nlohmann::json::exception& error) {
    throw ParseError(std::string("invalid ladder JSON: ") + error.what());
  }
  try {
    ParsedLadder ladder;
    ladder.objective = doc.at("objective").get<double>();
    ladder.gamma = doc.at("gamma").get<double>();
    for (const nlohmann::json& rep : doc.at("representations")) {
      ParsedLadder::Entry entry;
      entry.profile = rep.at("profile").get<std::string>();
      entry.resolution.width = rep.at("width").get<int>();
      entry.resolution.height = rep.at("height").get<int>();
      entry.z_mbps = rep.at("z_mbps").get<double>();
      entry.distortion = rep.at("distortion").get<double>();
      entry.cost = rep.at("cost").get<double>();
      entry.data_size = rep.at("data_size").get<double>();
      ladder.entries.push_back(entry);
    }
    return ladder;
  } catch (const nlohmann::json::exception& error) {
    throw ParseError(std::string("invalid ladder JSON: ") + error.what());
  }
}

}  // namespace ladder360
