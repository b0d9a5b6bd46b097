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

#include "ladder360/solver.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <cstddef>
#include <limits>
#include <numeric>
#include <optional>
#include <string>
#include <tuple>
#include <vector>

#include "ladder360/rdmodel.hpp"

namespace ladder360 {
namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();
// Leeway added to bound comparisons so equal-objective branches survive
// pruning and the lexicographic tie-break stays exact.
constexpr double kPruneMargin = 1e-9;
constexpr double kOracleLimit = 1e7;
constexpr std::size_t kSubsetLimit = 5'000'000;
constexpr std::size_t kGridPointLimit = 100'000;

std::string str(double value) {
  char buf[32];
  const auto [ptr, ec] =
      std::to_chars(buf, buf + sizeof(buf), value, std::chars_format::general);
  return ec == std::errc{} ? std::string(buf, ptr) : std::string("?");
}

double candidate_weight(const CandidateRep& c, double gamma) {
  return gamma * c.cost + (1.0 - gamma) * c.distortion;
}

bool in_band(double z, const BandwidthProfile& profile) {
  return z >= profile.b_min_mbps - kTolerance &&
         z <= profile.b_max_mbps + kTolerance;
}

bool pair_spaced(double za, double zb, double tau) {
  const double lo = std::min(za, zb);
  const double hi = std::max(za, zb);
  return hi / lo >= tau - kTolerance;
}

void validate_candidates(const std::vector<CandidateRep>& candidates) {
  for (std::size_t i = 0; i < candidates.size(); ++i) {
    const CandidateRep& c = candidates[i];
    if (!(c.z_mbps > 0.0) || !std::isfinite(c.z_mbps)) {
      throw ConfigError("candidate " + std::to_string(i) +
                        ": bitrate must be positive and finite");
    }
    if (c.res_index < 1) {
      throw ConfigError("candidate " + std::to_string(i) +
                        ": resolution index must be >= 1");
    }
    if (!std::isfinite(c.distortion) || c.distortion < 0.0 ||
        !std::isfinite(c.cost) || c.cost < 0.0 ||
        !std::isfinite(c.data_size) || c.data_size < 0.0) {
      throw ConfigError("candidate " + std::to_string(i) +
                        ": distortion, cost and data size must be finite and "
                        ">= 0");
    }
  }
}

// One (profile, candidate) pick with the canonical ordering used for both
// tie-breaking and deterministic objective summation.
struct Pick {
  double z = 0.0;
  int res_index = 0;
  int profile_index = 0;
  int candidate_index = 0;

  auto tied() const { return std::tie(z, res_index, profile_index, candidate_index); }
  bool operator<(const Pick& other) const { return tied() < other.tied(); }
  bool operator==(const Pick& other) const { return tied() == other.tied(); }
};

struct Outcome {
  std::vector<Pick> picks;  // sorted canonically
  double objective = 0.0;
};

// Canonical evaluation: sort picks, then sum weights in that fixed order so
// identical selections always produce bit-identical objectives.
Outcome finish_selection(std::vector<Pick> picks,
                         const std::vector<CandidateRep>& candidates,
                         double gamma) {
  std::sort(picks.begin(), picks.end());
  double objective = 0.0;
  for (const Pick& pick : picks) {
    objective += candidate_weight(candidates[pick.candidate_index], gamma);
  }
  return Outcome{std::move(picks), objective};
}

bool outcome_better(const Outcome& a, const Outcome& b) {
  if (a.objective != b.objective) return a.objective < b.objective;
  return std::lexicographical_compare(a.picks.begin(), a.picks.end(),
                                      b.picks.begin(), b.picks.end());
}

Ladder build_ladder(const Outcome& outcome,
                    const std::vector<CandidateRep>& candidates,
                    double gamma) {
  Ladder ladder;
  ladder.objective = outcome.objective;
  for (const Pick& pick : outcome.picks) {
    LadderEntry entry;
    entry.profile_index = pick.profile_index;
    entry.candidate_index = pick.candidate_index;
    entry.rep = candidates[pick.candidate_index];
    ladder.entries.push_back(entry);
    ladder.total_distortion += entry.rep.distortion;
    ladder.total_cost += entry.rep.cost;
    ladder.total_storage += entry.rep.data_size;
  }
  (void)gamma;
  return ladder;
}

// Candidate indices of one profile, ascending (z, res_index, index).
std::vector<std::vector<int>> eligible_per_profile(
    const std::vector<CandidateRep>& candidates, const SolverConfig& config) {
  std::vector<std::vector<int>> eligible(config.profiles.size());
  std::vector<int> order(candidates.size());
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(), [&](int a, int b) {
    return std::tie(candidates[a].z_mbps, candidates[a].res_index, a) <
           std::tie(candidates[b].z_mbps, candidates[b].res_index, b);
  });
  for (std::size_t p = 0; p < config.profiles.size(); ++p) {
    for (int idx : order) {
      if (in_band(candidates[idx].z_mbps, config.profiles[p])) {
        eligible[p].push_back(idx);
      }
    }
  }
  return eligible;
}

// Longest bitrate chain spaced by >= tau among the given candidates; greedy
// over sorted distinct bitrates (earliest-end activity selection is optimal
// because admissible successors of a smaller bitrate are a superset).
int max_spaced_chain(const std::vector<int>& eligible,
                     const std::vector<CandidateRep>& candidates, double tau) {
  std::vector<double> zs;
  zs.reserve(eligible.size());
  for (int idx : eligible) zs.push_back(candidates[idx].z_mbps);
  std::sort(zs.begin(), zs.end());
  int count = 0;
  double last = -kInf;
  for (double z : zs) {
    if (count == 0 || pair_spaced(last, z, tau)) {
      ++count;
      last = z;
    }
  }
  return count;
}

// Shared static feasibility screen; throws InfeasibleError naming the first
// profile whose quota provably cannot be met from its own band.
void static_feasibility_checks(const std::vector<CandidateRep>& candidates,
                               const SolverConfig& config,
                               const std::vector<std::vector<int>>& eligible,
                               const std::vector<int>& quotas) {
  for (std::size_t p = 0; p < config.profiles.size(); ++p) {
    if (quotas[p] == 0) continue;
    const BandwidthProfile& profile = config.profiles[p];
    if (static_cast<int>(eligible[p].size()) < quotas[p]) {
      throw InfeasibleError(
          InfeasibleCause::kQuota,
          "profile " + profile.name + " requires " + std::to_string(quotas[p]) +
              " representations but only " +
              std::to_string(eligible[p].size()) + " candidates lie in [" +
              str(profile.b_min_mbps) + ", " + str(profile.b_max_mbps) + "]");
    }
    const int chain = max_spaced_chain(eligible[p], candidates, config.tau);
    if (chain < quotas[p]) {
      throw InfeasibleError(
          InfeasibleCause::kSpacing,
          "profile " + profile.name + " requires " + std::to_string(quotas[p]) +
              " representations but at most " + std::to_string(chain) +
              " in-band bitrates can be spaced by tau=" + str(config.tau));
    }
  }
}

// A quota-sized, internally spaced pick set for one profile.
struct ProfileSubset {
  std::vector<int> cand;  // ascending (z, res_index)
  double weight = 0.0;
  double storage = 0.0;
  double cost = 0.0;
};

std::vector<ProfileSubset> feasible_subsets(
    const std::vector<int>& eligible,
    const std::vector<CandidateRep>& candidates, int quota, double gamma,
    double tau) {
  std::vector<ProfileSubset> subsets;
  if (quota == 0) {
    subsets.push_back(ProfileSubset{});
    return subsets;
  }
  std::vector<int> current;
  auto recurse = [&](auto&& self, std::size_t start) -> void {
    if (static_cast<int>(current.size()) == quota) {
      ProfileSubset subset;
      subset.cand = current;
      for (int idx : current) {
        subset.weight += candidate_weight(candidates[idx], gamma);
        subset.storage += candidates[idx].data_size;
        subset.cost += candidates[idx].cost;
      }
      subsets.push_back(std::move(subset));
      if (subsets.size() > kSubsetLimit) {
        throw std::runtime_error(
            "instance too large: a profile admits more than " +
            std::to_string(kSubsetLimit) + " quota-sized pick sets");
      }
      return;
    }
    const std::size_t needed = quota - current.size();
    for (std::size_t i = start; i + needed <= eligible.size(); ++i) {
      const int idx = eligible[i];
      bool spaced = true;
      for (int prev : current) {
        if (!pair_spaced(candidates[prev].z_mbps, candidates[idx].z_mbps,
                         tau)) {
          spaced = false;
          break;
        }
      }
      if (!spaced) continue;
      current.push_back(idx);
      self(self, i + 1);
      current.pop_back();
    }
  };
  recurse(recurse, 0);
  return subsets;
}

enum class Metric { kWeight, kStorage, kCost };

double subset_metric(const ProfileSubset& subset, Metric metric) {
  switch (metric) {
    case Metric::kWeight:
      return subset.weight;
    case Metric::kStorage:
      return subset.storage;
    case Metric::kCost:
      return subset.cost;
  }
  return 0.0;
}

// Depth-first branch-and-bound over per-profile subset choices. Minimizes
// the chosen metric subject to uniqueness, global pairwise spacing and the
// given budgets; returns the canonical-best outcome or nullopt.
std::optional<Outcome> branch_and_bound(
    const std::vector<CandidateRep>& candidates, const SolverConfig& config,
    const std::vector<std::size_t>& profile_order,
    const std::vector<std::vector<ProfileSubset>>& subsets_by_depth,
    Metric metric, double s_max, double c_max) {
  const std::size_t depth_count = profile_order.size();

  // Suffix lower bounds over the remaining depths for the metric and both
  // budget dimensions (minimum over that profile's subsets, spacing and
  // uniqueness ignored — a valid relaxation).
  std::vector<double> metric_suffix(depth_count + 1, 0.0);
  std::vector<double> storage_suffix(depth_count + 1, 0.0);
  std::vector<double> cost_suffix(depth_count + 1, 0.0);
  for (std::size_t d = depth_count; d-- > 0;) {
    double min_metric = kInf, min_storage = kInf, min_cost = kInf;
    for (const ProfileSubset& subset : subsets_by_depth[d]) {
      min_metric = std::min(min_metric, subset_metric(subset, metric));
      min_storage = std::min(min_storage, subset.storage);
      min_cost = std::min(min_cost, subset.cost);
    }
    if (subsets_by_depth[d].empty()) return std::nullopt;
    metric_suffix[d] = metric_suffix[d + 1] + min_metric;
    storage_suffix[d] = storage_suffix[d + 1] + min_storage;
    cost_suffix[d] = cost_suffix[d + 1] + min_cost;
  }

  std::optional<Outcome> best;
  std::vector<char> used(candidates.size(), 0);
  std::vector<double> chosen_z;
  std::vector<Pick> picks;

  auto canonical_metric = [&](const std::vector<Pick>& sorted_picks) {
    double total = 0.0;
    for (const Pick& pick : sorted_picks) {
      const CandidateRep& c = candidates[pick.candidate_index];
      switch (metric) {
        case Metric::kWeight:
          total += candidate_weight(c, config.gamma);
          break;
        case Metric::kStorage:
          total += c.data_size;
          break;
        case Metric::kCost:
          total += c.cost;
          break;
      }
    }
    return total;
  };

  auto dfs = [&](auto&& self, std::size_t depth, double metric_sum,
                 double storage_sum, double cost_sum) -> void {
    if (depth == depth_count) {
      std::vector<Pick> sorted_picks = picks;
      std::sort(sorted_picks.begin(), sorted_picks.end());
      Outcome outcome{std::move(sorted_picks), 0.0};
      outcome.objective = canonical_metric(outcome.picks);
      if (!best || outcome_better(outcome, *best)) best = std::move(outcome);
      return;
    }
    const std::size_t p = profile_order[depth];
    for (const ProfileSubset& subset : subsets_by_depth[depth]) {
      const double next_metric = metric_sum + subset_metric(subset, metric);
      if (best &&
          next_metric + metric_suffix[depth + 1] >
              best->objective + kPruneMargin) {
        // Subsets are sorted by this metric when it is the objective, so no
        // later subset at this depth can do better either.
        if (metric == Metric::kWeight) break;
        continue;
      }
      const double next_storage = storage_sum + subset.storage;
      const double next_cost = cost_sum + subset.cost;
      if (next_storage + storage_suffix[depth + 1] > s_max + kTolerance) {
        continue;
      }
      if (next_cost + cost_suffix[depth + 1] > c_max + kTolerance) continue;

      bool compatible = true;
      for (int idx : subset.cand) {
        if (used[idx]) {
          compatible = false;
          break;
        }
        for (double z : chosen_z) {
          if (!pair_spaced(z, candidates[idx].z_mbps, config.tau)) {
            compatible = false;
            break;
          }
        }
        if (!compatible) break;
      }
      if (!compatible) continue;

      for (int idx : subset.cand) {
        used[idx] = 1;
        chosen_z.push_back(candidates[idx].z_mbps);
        picks.push_back(Pick{candidates[idx].z_mbps,
                             candidates[idx].res_index, static_cast<int>(p),
                             idx});
      }
      self(self, depth + 1, next_metric, next_storage, next_cost);
      for (std::size_t n = subset.cand.size(); n-- > 0;) {
        used[subset.cand[n]] = 0;
        chosen_z.pop_back();
        picks.pop_back();
      }
    }
  };
  dfs(dfs, 0, 0.0, 0.0, 0.0);
  return best;
}

struct PreparedInstance {
  std::vector<int> quotas;
  std::vector<std::vector<int>> eligible;
  std::vector<std::size_t> profile_order;  // most-constrained first
  std::vector<std::vector<ProfileSubset>> subsets_by_depth;
};

PreparedInstance prepare_instance(const std::vector<CandidateRep>& candidates,
                                  const SolverConfig& config) {
  PreparedInstance inst;
  inst.quotas = profile_quotas(config);
  inst.eligible = eligible_per_profile(candidates, config);
  static_feasibility_checks(candidates, config, inst.eligible, inst.quotas);

  for (std::size_t p = 0; p < config.profiles.size(); ++p) {
    if (inst.quotas[p] > 0) inst.profile_order.push_back(p);
  }
  // Most-constrained profile first: fewer eligible picks means earlier,
  // cheaper conflict detection. The chosen optimum does not depend on this
  // order, only the search effort does.
  std::stable_sort(inst.profile_order.begin(), inst.profile_order.end(),
                   [&](std::size_t a, std::size_t b) {
                     return inst.eligible[a].size() < inst.eligible[b].size();
                   });

  for (std::size_t p : inst.profile_order) {
    std::vector<ProfileSubset> subsets = feasible_subsets(
        inst.eligible[p], candidates, inst.quotas[p], config.gamma,
        config.tau);
    if (subsets.empty()) {
      throw InfeasibleError(
          InfeasibleCause::kSpacing,
          "profile " + config.profiles[p].name + " admits no " +
              std::to_string(inst.quotas[p]) +
              "-sized pick set spaced by tau=" + str(config.tau));
    }
    // Ascending weight makes the first descent land on a near-optimal
    // incumbent; candidate-index order breaks exact weight ties.
    std::stable_sort(subsets.begin(), subsets.end(),
                     [](const ProfileSubset& a, const ProfileSubset& b) {
                       if (a.weight != b.weight) return a.weight < b.weight;
                       return a.cand < b.cand;
                     });
    inst.subsets_by_depth.push_back(std::move(subsets));
  }
  return inst;
}

// True when every profile can be assigned its quota of distinct in-band
// candidates with spacing and budgets ignored. This is a bipartite matching
// between quota units and candidates, solved by augmenting paths, so a
// negative answer proves the quota/uniqueness structure itself infeasible.
bool quotas_matchable(const std::vector<std::vector<int>>& eligible,
                      const std::vector<int>& quotas,
                      std::size_t candidate_count) {
  std::vector<std::size_t> unit_profile;
  for (std::size_t p = 0; p < quotas.size(); ++p) {
    unit_profile.insert(unit_profile.end(), static_cast<std::size_t>(quotas[p]),
                        p);
  }
  std::vector<int> owner(candidate_count, -1);
  std::vector<char> visited(candidate_count, 0);
  auto augment = [&](auto&& self, int unit) -> bool {
    for (int c : eligible[unit_profile[static_cast<std::size_t>(unit)]]) {
      if (visited[static_cast<std::size_t>(c)]) continue;
      visited[static_cast<std::size_t>(c)] = 1;
      const int current = owner[static_cast<std::size_t>(c)];
      if (current < 0 || self(self, current)) {
        owner[static_cast<std::size_t>(c)] = unit;
        return true;
      }
    }
    return false;
  };
  for (int unit = 0; unit < static_cast<int>(unit_profile.size()); ++unit) {
    std::fill(visited.begin(), visited.end(), 0);
    if (!augment(augment, unit)) return false;
  }
  return true;
}

// Explains why no assignment satisfied every constraint, using auxiliary
// exact searches with relaxed budgets; always throws.
[[noreturn]] void diagnose_infeasible(
    const std::vector<CandidateRep>& candidates, const SolverConfig& config,
    const PreparedInstance& inst) {
  std::optional<Outcome> spacing_only =
      branch_and_bound(candidates, config, inst.profile_order,
                       inst.subsets_by_depth, Metric::kStorage, kInf, kInf);
  if (!spacing_only) {
    if (!quotas_matchable(inst.eligible, inst.quotas, candidates.size())) {
      throw InfeasibleError(
          InfeasibleCause::kQuota,
          "profile quotas cannot be met jointly: each candidate can serve "
          "only one profile and the bands share too few distinct candidates");
    }
    throw InfeasibleError(
        InfeasibleCause::kSpacing,
        "no assignment meets every profile quota with all selected bitrates "
        "spaced by tau=" +
            str(config.tau));
  }
  if (spacing_only->objective > config.s_max + kTolerance) {
    throw InfeasibleError(
        InfeasibleCause::kStorage,
        "minimum achievable storage " + str(spacing_only->objective) +
            " exceeds s_max=" + str(config.s_max));
  }
  std::optional<Outcome> cheapest_compute = branch_and_bound(
      candidates, config, inst.profile_order, inst.subsets_by_depth,
      Metric::kCost, config.s_max, kInf);
  if (cheapest_compute && cheapest_compute->objective > config.c_max + kTolerance) {
    throw InfeasibleError(
        InfeasibleCause::kCompute,
        "minimum achievable cost " + str(cheapest_compute->objective) +
            " within the storage budget exceeds c_max=" + str(config.c_max));
  }
  throw InfeasibleError(InfeasibleCause::kCompute,
                        "storage and compute budgets cannot be satisfied "
                        "simultaneously");
}

}  // namespace

std::vector<CandidateRep> generate_candidates(
    const SolverConfig& config, const CandidateGrid& grid,
    const std::vector<Resolution>& resolutions, const ModelTable& models,
    int content_type, const CostThresholds& thresholds) {
  validate_config(config);
  if (resolutions.empty()) {
    throw ConfigError("at least one resolution is required");
  }
  for (std::size_t i = 1; i < resolutions.size(); ++i) {
    if (!resolution_less(resolutions[i - 1], resolutions[i])) {
      throw ConfigError(
          "resolutions must be listed in ascending pixel order without "
          "duplicates");
    }
  }
  if (grid.rules.size() != config.profiles.size()) {
    throw ConfigError("grid defines " + std::to_string(grid.rules.size()) +
                      " rules for " + std::to_string(config.profiles.size()) +
                      " profiles");
  }

  std::vector<CandidateRep> candidates;
  for (std::size_t p = 0; p < config.profiles.size(); ++p) {
    const GridRule& rule = grid.rules[p];
    const BandwidthProfile& profile = config.profiles[p];
    if (!(rule.anchor_mbps > 0.0)) {
      throw ConfigError("profile " + profile.name +
                        ": grid anchor must be positive");
    }
    if (!(rule.ratio > 1.0)) {
      throw ConfigError("profile " + profile.name +
                        ": grid ratio must be > 1");
    }
    std::size_t points = 0;
    for (double z = rule.anchor_mbps; z <= profile.b_max_mbps + kTolerance;
         z *= rule.ratio) {
      if (++points > kGridPointLimit) {
        throw ConfigError("profile " + profile.name +
                          ": grid generates too many points");
      }
      if (z < profile.b_min_mbps - kTolerance) continue;
      for (std::size_t g = 0; g < resolutions.size(); ++g) {
        const int res_index = static_cast<int>(g) + 1;
        const PowerFitParams& dist =
            models.at(content_type, res_index, ModelKind::kDistortion);
        const PowerFitParams& size =
            models.at(content_type, res_index, ModelKind::kDataSize);
        CandidateRep rep;
        rep.res_index = res_index;
        rep.resolution = resolutions[g];
        rep.z_mbps = z;
        rep.distortion = rep_distortion(dist, z, config.n_tiles).total;
        const RepCost rc = rep_cost(resolutions[g], z, size, config.n_tiles,
                                    config.mu_e, config.mu_s, thresholds);
        rep.cost = rc.cost;
        rep.data_size = rc.data_size;
        candidates.push_back(rep);
      }
    }
  }

  std::sort(candidates.begin(), candidates.end(),
            [](const CandidateRep& a, const CandidateRep& b) {
              return std::tie(a.z_mbps, a.res_index) <
                     std::tie(b.z_mbps, b.res_index);
            });
  // Profiles with overlapping bands or equal anchors regenerate the same
  // grid points; collapse (resolution, z) duplicates.
  const auto last = std::unique(
      candidates.begin(), candidates.end(),
      [](const CandidateRep& a, const CandidateRep& b) {
        return a.res_index == b.res_index &&
               std::abs(a.z_mbps - b.z_mbps) <= kTolerance;
      });
  candidates.erase(last, candidates.end());
  if (candidates.empty()) {
    throw ConfigError("candidate grid produced no points inside any profile "
                      "band");
  }
  return candidates;
}

Ladder solve(const std::vector<CandidateRep>& candidates,
             const SolverConfig& config) {
  validate_config(config);
  validate_candidates(candidates);
  const PreparedInstance inst = prepare_instance(candidates, config);

  std::optional<Outcome> best = branch_and_bound(
      candidates, config, inst.profile_order, inst.subsets_by_depth,
      Metric::kWeight, config.s_max, config.c_max);
  if (!best) diagnose_infeasible(candidates, config, inst);
  return build_ladder(*best, candidates, config.gamma);
}

Ladder solve_bruteforce(const std::vector<CandidateRep>& candidates,
                        const SolverConfig& config) {
  validate_config(config);
  validate_candidates(candidates);
  const std::vector<int> quotas = profile_quotas(config);
  const std::vector<std::vector<int>> eligible =
      eligible_per_profile(candidates, config);
  static_feasibility_checks(candidates, config, eligible, quotas);

  double combinations = 1.0;
  for (std::size_t p = 0; p < config.profiles.size(); ++p) {
    const int n = static_cast<int>(eligible[p].size());
    const int q = quotas[p];
    double choose = 1.0;
    for (int i = 0; i < q; ++i) choose = choose * (n - i) / (i + 1);
    combinations *= choose;
    if (combinations > kOracleLimit) {
      throw std::runtime_error("instance too large for oracle");
    }
  }

  std::optional<Outcome> best;
  bool any_unique_leaf = false;
  bool any_leaf = false;
  double min_leaf_storage = kInf;
  double min_cost_with_storage_ok = kInf;
  std::vector<Pick> picks;
  std::vector<int> combo;

  auto evaluate_assignment = [&]() {
    // Literal constraint checks over the complete assignment; uniqueness is
    // tracked separately from spacing so infeasibility names the right cause.
    for (std::size_t i = 0; i < picks.size(); ++i) {
      for (std::size_t j = i + 1; j < picks.size(); ++j) {
        if (picks[i].candidate_index == picks[j].candidate_index) return;
      }
    }
    any_unique_leaf = true;
    for (std::size_t i = 0; i < picks.size(); ++i) {
      for (std::size_t j = i + 1; j < picks.size(); ++j) {
        if (!pair_spaced(picks[i].z, picks[j].z, config.tau)) return;
      }
    }
    any_leaf = true;
    double storage = 0.0;
    double cost = 0.0;
    for (const Pick& pick : picks) {
      storage += candidates[pick.candidate_index].data_size;
      cost += candidates[pick.candidate_index].cost;
    }
    min_leaf_storage = std::min(min_leaf_storage, storage);
    if (storage > config.s_max + kTolerance) return;
    min_cost_with_storage_ok = std::min(min_cost_with_storage_ok, cost);
    if (cost > config.c_max + kTolerance) return;
    Outcome outcome = finish_selection(picks, candidates, config.gamma);
    if (!best || outcome_better(outcome, *best)) best = std::move(outcome);
  };

  auto per_profile = [&](auto&& self, std::size_t p) -> void {
    if (p == config.profiles.size()) {
      evaluate_assignment();
      return;
    }
    const int q = quotas[p];
    if (q == 0) {
      self(self, p + 1);
      return;
    }
    combo.assign(q, 0);
    std::iota(combo.begin(), combo.end(), 0);
    const int n = static_cast<int>(eligible[p].size());
    for (;;) {
      for (int slot = 0; slot < q; ++slot) {
        const int idx = eligible[p][combo[slot]];
        picks.push_back(Pick{candidates[idx].z_mbps,
                             candidates[idx].res_index, static_cast<int>(p),
                             idx});
      }
      std::vector<int> saved = combo;
      self(self, p + 1);
      combo = std::move(saved);
      for (int slot = 0; slot < q; ++slot) picks.pop_back();

      int pos = q - 1;
      while (pos >= 0 && combo[pos] == n - q + pos) --pos;
      if (pos < 0) break;
      ++combo[pos];
      for (int i = pos + 1; i < q; ++i) combo[i] = combo[i - 1] + 1;
    }
  };
  per_profile(per_profile, 0);

  if (best) return build_ladder(*best, candidates, config.gamma);

  if (!any_leaf) {
    if (!any_unique_leaf) {
      throw InfeasibleError(
          InfeasibleCause::kQuota,
          "profile quotas cannot be met jointly: each candidate can serve "
          "only one profile and the bands share too few distinct candidates");
    }
    throw InfeasibleError(
        InfeasibleCause::kSpacing,
        "no assignment meets every profile quota with all selected bitrates "
        "spaced by tau=" +
            str(config.tau));
  }
  if (min_leaf_storage > config.s_max + kTolerance) {
    throw InfeasibleError(
        InfeasibleCause::kStorage,
        "minimum achievable storage " + str(min_leaf_storage) +
            " exceeds s_max=" + str(config.s_max));
  }
  throw InfeasibleError(
      InfeasibleCause::kCompute,
      "minimum achievable cost " + str(min_cost_with_storage_ok) +
          " within the storage budget exceeds c_max=" + str(config.c_max));
}

std::vector<Violation> validate_ladder(const Ladder& ladder,
                                       const SolverConfig& config) {
  validate_config(config);
  std::vector<Violation> violations;
  const std::vector<int> quotas = profile_quotas(config);
  std::vector<int> counts(config.profiles.size(), 0);

  for (std::size_t i = 0; i < ladder.entries.size(); ++i) {
    const LadderEntry& entry = ladder.entries[i];
    if (entry.profile_index < 0 ||
        entry.profile_index >= static_cast<int>(config.profiles.size())) {
      violations.push_back(
          Violation{"band", "entry " + std::to_string(i) +
                                " references unknown profile index " +
                                std::to_string(entry.profile_index)});
      continue;
    }
    ++counts[entry.profile_index];
    const BandwidthProfile& profile = config.profiles[entry.profile_index];
    if (!in_band(entry.rep.z_mbps, profile)) {
      violations.push_back(Violation{
          "band", "entry " + std::to_string(i) + " at z=" +
                      str(entry.rep.z_mbps) + " lies outside [" +
                      str(profile.b_min_mbps) + ", " + str(profile.b_max_mbps) +
                      "] of profile " + profile.name});
    }
  }

  for (std::size_t p = 0; p < config.profiles.size(); ++p) {
    if (counts[p] != quotas[p]) {
      violations.push_back(Violation{
          "quota", "profile " + config.profiles[p].name + " holds " +
                       std::to_string(counts[p]) + " representations, quota "
                       "is " +
                       std::to_string(quotas[p])});
    }
  }

  for (std::size_t i = 0; i < ladder.entries.size(); ++i) {
    for (std::size_t j = i + 1; j < ladder.entries.size(); ++j) {
      const LadderEntry& a = ladder.entries[i];
      const LadderEntry& b = ladder.entries[j];
      if (a.candidate_index == b.candidate_index ||
          (a.rep.res_index == b.rep.res_index &&
           std::abs(a.rep.z_mbps - b.rep.z_mbps) <= kTolerance)) {
        violations.push_back(Violation{
            "uniqueness", "entries " + std::to_string(i) + " and " +
                              std::to_string(j) +
                              " select the same representation"});
      }
      if (!pair_spaced(a.rep.z_mbps, b.rep.z_mbps, config.tau)) {
        violations.push_back(Violation{
            "spacing", "entries " + std::to_string(i) + " and " +
                           std::to_string(j) + ": " + str(a.rep.z_mbps) +
                           " and " + str(b.rep.z_mbps) +
                           " are closer than tau=" + str(config.tau)});
      }
    }
  }

  double storage = 0.0;
  double cost = 0.0;
  for (const LadderEntry& entry : ladder.entries) {
    storage += entry.rep.data_size;
    cost += entry.rep.cost;
  }
  if (storage > config.s_max + kTolerance) {
    violations.push_back(Violation{
        "storage", "total data size " + str(storage) + " exceeds s_max=" +
                       str(config.s_max)});
  }
  if (cost > config.c_max + kTolerance) {
    violations.push_back(Violation{
        "compute", "total cost " + str(cost) + " exceeds c_max=" +
                       str(config.c_max)});
  }
  return violations;
}

}  // namespace ladder360
