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

#ifndef LADDER360_REPORT_HPP_
#define LADDER360_REPORT_HPP_

#include <cstddef>
#include <iosfwd>
#include <string>
#include <vector>

#include "ladder360/domain.hpp"
#include "ladder360/solver.hpp"

namespace ladder360 {

struct VendorRung {
  Resolution resolution;
  double z_mbps = 0.0;

  friend bool operator==(const VendorRung&, const VendorRung&) = default;
};

// A fixed one-size-fits-all ladder recommended by a service provider.
struct VendorLadder {
  std::string name;
  std::vector<VendorRung> rungs;  // ascending bitrate

  friend bool operator==(const VendorLadder&, const VendorLadder&) = default;
};

// Built-in reference ladders: "apple", "axinom", "netflix".
const std::vector<VendorLadder>& vendor_ladders();

// Throws ConfigError on an unknown name.
const VendorLadder& vendor_ladder(const std::string& name);

struct RunReport {
  int content_type = 0;
  std::size_t candidate_count = 0;
  Ladder ladder;
  SolverConfig solver;
  double wall_ms = 0.0;
};

// Human-readable run summary: config echo, per-rung table (index, profile,
// resolution, z, distortion, cost) and totals. Bitrates carry two decimals,
// distortion and cost three.
std::string format_report(const RunReport& report);

// Machine-readable ladder:
// {"representations": [{"profile", "width", "height", "z_mbps",
// "distortion", "cost", "data_size"}...], "objective": ..., "gamma": ...}
// Deterministic field order and fixed decimals; no timestamps.
std::string ladder_to_json(const Ladder& ladder, const SolverConfig& solver);

// Ladder JSON as read back from disk.
struct ParsedLadder {
  struct Entry {
    std::string profile;
    Resolution resolution;
    double z_mbps = 0.0;
    double distortion = 0.0;
    double cost = 0.0;
    double data_size = 0.0;

    friend bool operator==(const Entry&, const Entry&) = default;
  };
  std::vector<Entry> entries;
  double objective = 0.0;
  double gamma = 0.0;

  friend bool operator==(const ParsedLadder&, const ParsedLadder&) = default;
};

// Throws ParseError on malformed JSON or missing fields.
ParsedLadder parse_ladder_json(std::istream& input);

}  // namespace ladder360

#endif  // LADDER360_REPORT_HPP_
