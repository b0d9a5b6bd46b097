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

#ifndef LADDER360_DOMAIN_HPP_
#define LADDER360_DOMAIN_HPP_

#include <cstdint>
#include <map>
#include <stdexcept>
#include <string>
#include <tuple>
#include <vector>

namespace ladder360 {

// Absolute tolerance for all domain comparisons (band membership, spacing,
// budgets, bitrate deduplication). Bitrates in interchange files are exact
// decimals with two fractional digits; internal arithmetic is binary floating
// point, so every boundary test allows this slack.
inline constexpr double kTolerance = 1e-9;

// Configuration or input that violates a documented contract.
class ConfigError : public std::runtime_error {
 public:
  explicit ConfigError(const std::string& what) : std::runtime_error(what) {}
};

// Malformed external data (frame statistics, Y4M, CSV, ladder JSON).
class ParseError : public std::runtime_error {
 public:
  explicit ParseError(const std::string& what) : std::runtime_error(what) {}
};

struct Resolution {
  int width = 0;
  int height = 0;

  std::int64_t pixels() const {
    return static_cast<std::int64_t>(width) * height;
  }
  friend bool operator==(const Resolution&, const Resolution&) = default;
};

// Ascending pixel count, ties broken by width.
bool resolution_less(const Resolution& a, const Resolution& b);

enum class ModelKind { kDistortion, kDataSize };

// Two-term power series y(z) = k * z^omega + phi fitted per content type,
// resolution and model kind. For distortion omega < 0 (monotone decreasing),
// for data size omega ~ 1 (monotone increasing).
struct PowerFitParams {
  double k = 0.0;
  double omega = 0.0;
  double phi = 0.0;

  friend bool operator==(const PowerFitParams&, const PowerFitParams&) = default;
};

struct BandwidthProfile {
  std::string name;        // "p1", "p2", ...
  double b_min_mbps = 0.0;
  double b_max_mbps = 0.0;
  double lambda = 0.0;     // popularity weight, >= 0

  friend bool operator==(const BandwidthProfile&, const BandwidthProfile&) = default;
};

struct SolverConfig {
  double gamma = 0.1;   // cost/distortion trade-off in [0, 1]
  int m_total = 12;     // ladder size M
  double tau = 1.2;     // minimum bitrate ratio between any two selected reps
  double s_max = 8000;  // storage budget
  double c_max = 8000;  // computational budget
  double mu_e = 0.017;  // per-tile encoding cost unit
  double mu_s = 0.023;  // per-unit storage cost
  int n_tiles = 10;     // equal-area tiles per frame
  std::vector<BandwidthProfile> profiles;

  friend bool operator==(const SolverConfig&, const SolverConfig&) = default;
};

// Throws ConfigError on the first violated constraint: gamma outside [0, 1],
// m_total <= 0, tau < 1, negative budgets, mu_e/mu_s <= 0, n_tiles <= 0, empty
// or duplicate profile names, b_min/b_max not a two-decimal value, b_min < 0,
// b_min >= b_max, lambda < 0, all-zero lambdas.
void validate_config(const SolverConfig& config);

// Per-profile representation quota floor(M * lambda_p / sum(lambda)).
std::vector<int> profile_quotas(const SolverConfig& config);

// True when |value| is representable with at most two fractional decimal
// digits, the interchange precision for bitrates.
bool is_two_decimal(double value);

// Fitted model parameters addressed by (content type, resolution index, kind),
// both indices 1-based.
class ModelTable {
 public:
  void set(int content_type, int res_index, ModelKind kind, const PowerFitParams& params);
  bool contains(int content_type, int res_index, ModelKind kind) const;
  // Throws ConfigError when the entry is missing.
  const PowerFitParams& at(int content_type, int res_index, ModelKind kind) const;

  // Throws ConfigError unless every (type, resolution) pair in
  // [1, content_types] x [1, resolutions] carries both model kinds.
  void require_complete(int content_types, int resolutions) const;

  bool empty() const { return entries_.empty(); }
  friend bool operator==(const ModelTable&, const ModelTable&) = default;

 private:
  using Key = std::tuple<int, int, int>;
  std::map<Key, PowerFitParams> entries_;
};

}  // namespace ladder360

#endif  // LADDER360_DOMAIN_HPP_
