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

#include "ladder360/domain.hpp"

#include <cmath>
#include <set>

namespace ladder360 {

bool resolution_less(const Resolution& a, const Resolution& b) {
  if (a.pixels() != b.pixels()) return a.pixels() < b.pixels();
  return a.width < b.width;
}

bool is_two_decimal(double value) {
  const double cents = value * 100.0;
  return std::abs(cents - std::round(cents)) <= 1e-6;
}

void validate_config(const SolverConfig& config) {
  if (!(config.gamma >= 0.0 && config.gamma <= 1.0)) {
    throw ConfigError("gamma must lie in [0, 1]");
  }
  if (config.m_total <= 0) throw ConfigError("m_total must be positive");
  if (!(config.tau >= 1.0)) throw ConfigError("tau must be >= 1");
  if (config.s_max < 0.0) throw ConfigError("s_max must be >= 0");
  if (config.c_max < 0.0) throw ConfigError("c_max must be >= 0");
  if (!(config.mu_e > 0.0)) throw ConfigError("mu_e must be positive");
  if (!(config.mu_s > 0.0)) throw ConfigError("mu_s must be positive");
  if (config.n_tiles <= 0) throw ConfigError("n_tiles must be positive");
  if (config.profiles.empty()) throw ConfigError("at least one bandwidth profile is required");

  std::set<std::string> names;
  double lambda_sum = 0.0;
  for (const BandwidthProfile& p : config.profiles) {
    if (p.name.empty()) throw ConfigError("profile name must not be empty");
    if (!names.insert(p.name).second) {
      throw ConfigError("duplicate profile name: " + p.name);
    }
    if (p.b_min_mbps < 0.0) {
      throw ConfigError("profile " + p.name + ": b_min_mbps must be >= 0");
    }
    if (!(p.b_min_mbps < p.b_max_mbps)) {
      throw ConfigError("profile " + p.name + ": b_min_mbps must be < b_max_mbps");
    }
    if (!is_two_decimal(p.b_min_mbps) || !is_two_decimal(p.b_max_mbps)) {
      throw ConfigError("profile " + p.name +
                        ": bitrates must have at most two fractional digits");
    }
    if (p.lambda < 0.0) {
      throw ConfigError("profile " + p.name + ": lambda must be >= 0");
    }
    lambda_sum += p.lambda;
  }
  if (!(lambda_sum > 0.0)) throw ConfigError("profile lambdas must not all be zero");
}

std::vector<int> profile_quotas(const SolverConfig& config) {
  double lambda_sum = 0.0;
  for (const BandwidthProfile& p : config.profiles) lambda_sum += p.lambda;
  std::vector<int> quotas;
  quotas.reserve(config.profiles.size());
  for (const BandwidthProfile& p : config.profiles) {
    quotas.push_back(static_cast<int>(
        std::floor(config.m_total * p.lambda / lambda_sum + kTolerance)));
  }
  return quotas;
}

void ModelTable::set(int content_type, int res_index, ModelKind kind,
                     const PowerFitParams& params) {
  entries_[Key{content_type, res_index, static_cast<int>(kind)}] = params;
}

bool ModelTable::contains(int content_type, int res_index, ModelKind kind) const {
  return entries_.count(Key{content_type, res_index, static_cast<int>(kind)}) != 0;
}

const PowerFitParams& ModelTable::at(int content_type, int res_index,
                                     ModelKind kind) const {
  auto it = entries_.find(Key{content_type, res_index, static_cast<int>(kind)});
  if (it == entries_.end()) {
    throw ConfigError("no model for content type o" + std::to_string(content_type) +
                      ", resolution g" + std::to_string(res_index) + ", kind " +
                      (kind == ModelKind::kDistortion ? "distortion" : "data_size"));
  }
  return it->second;
}

void ModelTable::require_complete(int content_types, int resolutions) const {
  for (int o = 1; o <= content_types; ++o) {
    for (int g = 1; g <= resolutions; ++g) {
      for (ModelKind kind : {ModelKind::kDistortion, ModelKind::kDataSize}) {
        if (!contains(o, g, kind)) {
          at(o, g, kind);  // throws with a descriptive message
        }
      }
    }
  }
}

}  // namespace ladder360
