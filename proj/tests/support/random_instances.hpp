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

#ifndef LADDER360_TESTS_SUPPORT_RANDOM_INSTANCES_HPP_
#define LADDER360_TESTS_SUPPORT_RANDOM_INSTANCES_HPP_

#include <algorithm>
#include <cmath>
#include <random>
#include <string>
#include <vector>

#include <ladder360/solver.hpp>

namespace ladder360::testing {

struct RandomInstance {
  std::vector<CandidateRep> candidates;
  SolverConfig config;
};

// Small solver instances for checking the branch-and-bound implementation
// against exhaustive enumeration: up to 3 profiles with quotas up to 2, up to
// 12 candidates, random gamma, spacing and budgets. Bands overlap about half
// the time so candidates shared between profiles get exercised, and budgets
// are occasionally tight enough to bind or to rule out every assignment;
// infeasible draws are kept because both implementations must agree on the
// failure too.
inline RandomInstance make_random_instance(std::mt19937& rng) {
  std::uniform_int_distribution<int> profile_count_dist(1, 3);
  std::uniform_int_distribution<int> quota_dist(1, 2);
  std::uniform_int_distribution<int> candidate_count_dist(4, 12);
  std::uniform_int_distribution<int> res_dist(1, 3);
  std::uniform_real_distribution<double> unit_dist(0.0, 1.0);

  static const std::vector<Resolution> kResolutions = {
      {1024, 512}, {2048, 1024}, {4096, 2048}};

  RandomInstance instance;
  SolverConfig& config = instance.config;
  config.gamma = unit_dist(rng);
  config.tau = 1.0 + 0.4 * unit_dist(rng);
  config.mu_e = 0.017;
  config.mu_s = 0.023;
  config.n_tiles = 4;

  // Integer lambdas make floor(m_total * lambda_p / sum(lambda)) reproduce
  // the drawn quotas exactly.
  const int profile_count = profile_count_dist(rng);
  int total_quota = 0;
  double band_low = 0.5 + unit_dist(rng);
  for (int p = 0; p < profile_count; ++p) {
    BandwidthProfile profile;
    profile.name = "p" + std::to_string(p + 1);
    const double low = std::round(band_low * 100.0) / 100.0;
    const double high =
        std::round((band_low + 2.0 + 6.0 * unit_dist(rng)) * 100.0) / 100.0;
    profile.b_min_mbps = low;
    profile.b_max_mbps = high;
    profile.lambda = quota_dist(rng);
    total_quota += static_cast<int>(profile.lambda);
    config.profiles.push_back(profile);
    band_low = unit_dist(rng) < 0.5 ? low + (high - low) * unit_dist(rng)
                                    : high * (1.0 + 0.5 * unit_dist(rng));
  }
  config.m_total = total_quota;

  const double min_band = config.profiles.front().b_min_mbps;
  double max_band = 0.0;
  for (const BandwidthProfile& profile : config.profiles) {
    max_band = std::max(max_band, profile.b_max_mbps);
  }

  const int candidate_count = candidate_count_dist(rng);
  std::uniform_real_distribution<double> z_dist(min_band * 0.8, max_band * 1.1);
  for (int i = 0; i < candidate_count; ++i) {
    CandidateRep rep;
    rep.res_index = res_dist(rng);
    rep.resolution = kResolutions[static_cast<std::size_t>(rep.res_index - 1)];
    rep.z_mbps = std::max(0.01, std::round(z_dist(rng) * 100.0) / 100.0);
    rep.distortion = 10.0 + 500.0 * unit_dist(rng);
    rep.data_size = 5.0 + 100.0 * unit_dist(rng);
    rep.cost = 0.1 + 5.0 * unit_dist(rng);
    instance.candidates.push_back(rep);
  }
  std::sort(instance.candidates.begin(), instance.candidates.end(),
            [](const CandidateRep& a, const CandidateRep& b) {
              if (a.z_mbps != b.z_mbps) return a.z_mbps < b.z_mbps;
              return a.res_index < b.res_index;
            });

  double data_sum = 0.0;
  double cost_sum = 0.0;
  for (const CandidateRep& rep : instance.candidates) {
    data_sum += rep.data_size;
    cost_sum += rep.cost;
  }
  config.s_max = unit_dist(rng) < 0.3 ? data_sum * (0.2 + 0.3 * unit_dist(rng))
                                      : data_sum * 2.0;
  config.c_max = unit_dist(rng) < 0.3 ? cost_sum * (0.2 + 0.3 * unit_dist(rng))
                                      : cost_sum * 2.0;
  return instance;
}

}  // namespace ladder360::testing

#endif  // LADDER360_TESTS_SUPPORT_RANDOM_INSTANCES_HPP_
