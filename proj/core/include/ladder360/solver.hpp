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

#ifndef LADDER360_SOLVER_HPP_
#define LADDER360_SOLVER_HPP_

#include <stdexcept>
#include <string>
#include <vector>

#include "ladder360/cost.hpp"
#include "ladder360/domain.hpp"

namespace ladder360 {

// Geometric bitrate series anchor * ratio^k (k >= 0), clipped to the owning
// profile's band.
struct GridRule {
  double anchor_mbps = 1.0;
  double ratio = 1.2;

  friend bool operator==(const GridRule&, const GridRule&) = default;
};

// One rule per bandwidth profile, parallel to SolverConfig::profiles.
struct CandidateGrid {
  std::vector<GridRule> rules;

  friend bool operator==(const CandidateGrid&, const CandidateGrid&) = default;
};

// A representation the solver may place in the ladder: resolution plus total
// bitrate, with its modeled distortion, data size and resource cost.
struct CandidateRep {
  int res_index = 0;  // 1-based index into the configured resolution list
  Resolution resolution;
  double z_mbps = 0.0;
  double distortion = 0.0;  // d_i
  double data_size = 0.0;   // s_i
  double cost = 0.0;        // c_i

  friend bool operator==(const CandidateRep&, const CandidateRep&) = default;
};

struct LadderEntry {
  int profile_index = 0;    // 0-based index into SolverConfig::profiles
  int candidate_index = 0;  // 0-based index into the candidate list
  CandidateRep rep;

  friend bool operator==(const LadderEntry&, const LadderEntry&) = default;
};

// Optimal selection; entries sorted by (z, resolution index, profile index).
struct Ladder {
  std::vector<LadderEntry> entries;
  double objective = 0.0;
  double total_distortion = 0.0;
  double total_cost = 0.0;
  double total_storage = 0.0;
};

enum class InfeasibleCause { kQuota, kSpacing, kStorage, kCompute };

class InfeasibleError : public std::runtime_error {
 public:
  InfeasibleError(InfeasibleCause cause, const std::string& what)
      : std::runtime_error(what), cause_(cause) {}

  InfeasibleCause cause() const { return cause_; }

 private:
  InfeasibleCause cause_;
};

// Cross product of every profile's grid points with every resolution, with
// distortion/cost/data size evaluated from the fitted models of the given
// content type. Duplicate (resolution, z) pairs across profiles are merged
// (|dz| <= 1e-9). Result is sorted by (z, resolution index). Throws
// ConfigError on invalid config, rule count mismatch, non-positive anchor,
// ratio <= 1, unsorted/empty resolutions, or an empty candidate set.
std::vector<CandidateRep> generate_candidates(
    const SolverConfig& config, const CandidateGrid& grid,
    const std::vector<Resolution>& resolutions, const ModelTable& models,
    int content_type, const CostThresholds& thresholds = CostThresholds{});

// Exact minimizer of sum((gamma*c_i + (1-gamma)*d_i) * a_ip) subject to:
// in-band placement, per-profile quota floor(M*lambda_p/sum(lambda)), each
// candidate used at most once, sum(s_i) <= s_max, sum(c_i) <= c_max, and
// max(z)/min(z) >= tau for every selected pair. Depth-first branch-and-bound;
// deterministic tie-break: among equal objectives the selection whose sorted
// (z, resolution index, profile index) sequence is lexicographically
// smallest. Throws InfeasibleError naming the first unsatisfiable constraint
// and ConfigError on invalid input.
Ladder solve(const std::vector<CandidateRep>& candidates,
             const SolverConfig& config);

// Exhaustive reference implementation with identical contract and tie-break.
// Throws std::runtime_error when the assignment space exceeds 1e7
// combinations.
Ladder solve_bruteforce(const std::vector<CandidateRep>& candidates,
                        const SolverConfig& config);

struct Violation {
  std::string constraint;  // band | quota | uniqueness | storage | compute | spacing
  std::string detail;

  friend bool operator==(const Violation&, const Violation&) = default;
};

// Re-checks every solver constraint on a ladder; empty result means the
// ladder is feasible. Violations are data, not errors.
std::vector<Violation> validate_ladder(const Ladder& ladder,
                                       const SolverConfig& config);

}  // namespace ladder360

#endif  // LADDER360_SOLVER_HPP_
