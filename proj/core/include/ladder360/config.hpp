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

#ifndef LADDER360_CONFIG_HPP_
#define LADDER360_CONFIG_HPP_

#include <iosfwd>
#include <string>
#include <vector>

#include "ladder360/cost.hpp"
#include "ladder360/domain.hpp"
#include "ladder360/features.hpp"
#include "ladder360/solver.hpp"

namespace ladder360 {

// Complete run configuration. Key names and section layout of the text form:
//
//   [solver]       gamma, m_total, tau, s_max, c_max, mu_e, mu_s, n_tiles
//   [profiles]     <name>.b_min_mbps, <name>.b_max_mbps, <name>.lambda
//   [resolutions]  g<K>.width, g<K>.height           (K = 1..G, ascending)
//   [centroids]    o<K>.f_spa, o<K>.f_tmp            (K = 1..T)
//   [models]       o<K>.g<J>.<distortion|data_size>.<k|omega|phi>
//   [grids]        <profile>.anchor_mbps, <profile>.ratio   (optional)
//   [cost]         up_to_720p, up_to_1080p, up_to_4k, up_to_8k (optional)
//
// '#' starts a comment line; order of profiles follows first appearance.
// When [grids] is absent every profile uses anchor max(0.01, smallest
// b_min_mbps) and ratio 1.2.
struct Config {
  SolverConfig solver;
  std::vector<Resolution> resolutions;
  std::vector<Centroid> centroids;  // ascending content type, 1..T
  ModelTable models;
  CandidateGrid grid;  // parallel to solver.profiles
  CostThresholds thresholds;

  friend bool operator==(const Config&, const Config&) = default;
};

// Built-in configuration: the published four-profile, three-resolution,
// three-content-type setup with its fitted model table.
Config default_config();

// Cross-field validation of an assembled Config; throws ConfigError on the
// first violation. parse_config and default_config outputs always pass.
void validate_full_config(const Config& config);

// Reads the text form. Throws ParseError on malformed lines or numbers and
// ConfigError on unknown sections/keys, duplicates, missing required keys or
// contract violations.
Config parse_config(std::istream& input);

// Deterministic text form; parse_config(serialize_config(c)) == c. Bitrates
// (b_min_mbps, b_max_mbps, anchor_mbps) carry exactly two decimals; all other
// numbers use the shortest round-trip form.
std::string serialize_config(const Config& config);

}  // namespace ladder360

#endif  // LADDER360_CONFIG_HPP_
