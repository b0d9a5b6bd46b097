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

#include "ladder360/config.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <cstdio>
#include <istream>
#include <map>
#include <set>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

namespace ladder360 {
namespace {

const char* const kSections[] = {"solver",    "profiles", "resolutions",
                                 "centroids", "models",   "grids",
                                 "cost"};

std::string trim(std::string_view text) {
  const auto first = text.find_first_not_of(" \t");
  if (first == std::string_view::npos) return std::string();
  const auto last = text.find_last_not_of(" \t");
  return std::string(text.substr(first, last - first + 1));
}

double to_double(const std::string& text, const std::string& what) {
  double value = 0.0;
  const auto [ptr, ec] =
      std::from_chars(text.data(), text.data() + text.size(), value);
  if (ec != std::errc{} || ptr != text.data() + text.size() ||
      !std::isfinite(value)) {
    throw ParseError(what + ": invalid number '" + text + "'");
  }
  return value;
}

int to_int(const std::string& text, const std::string& what) {
  int value = 0;
  const auto [ptr, ec] =
      std::from_chars(text.data(), text.data() + text.size(), value);
  if (ec != std::errc{} || ptr != text.data() + text.size()) {
    throw ParseError(what + ": invalid integer '" + text + "'");
  }
  return value;
}

std::int64_t to_int64(const std::string& text, const std::string& what) {
  std::int64_t value = 0;
  const auto [ptr, ec] =
      std::from_chars(text.data(), text.data() + text.size(), value);
  if (ec != std::errc{} || ptr != text.data() + text.size()) {
    throw ParseError(what + ": invalid integer '" + text + "'");
  }
  return value;
}

std::string fmt_shortest(double value) {
  char buf[64];
  const auto [ptr, ec] =
      std::to_chars(buf, buf + sizeof(buf), value, std::chars_format::general);
  return ec == std::errc{} ? std::string(buf, ptr) : std::string("0");
}

std::string fmt_bitrate(double value) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.2f", value);
  return std::string(buf);
}

// "o3" with prefix 'o' -> 3; rejects anything else.
int indexed_suffix(const std::string& name, char prefix,
                   const std::string& what) {
  if (name.size() < 2 || name.front() != prefix) {
    throw ConfigError(what + ": expected a name of the form " +
                      std::string(1, prefix) + "<index>, got '" + name + "'");
  }
  int index = 0;
  const char* begin = name.data() + 1;
  const char* end = name.data() + name.size();
  const auto [ptr, ec] = std::from_chars(begin, end, index);
  if (ec != std::errc{} || ptr != end || index < 1) {
    throw ConfigError(what + ": expected a name of the form " +
                      std::string(1, prefix) + "<index>, got '" + name + "'");
  }
  return index;
}

std::vector<std::string> split_dots(const std::string& key) {
  std::vector<std::string> parts;
  std::string::size_type start = 0;
  for (;;) {
    const auto dot = key.find('.', start);
    if (dot == std::string::npos) {
      parts.push_back(key.substr(start));
      return parts;
    }
    parts.push_back(key.substr(start, dot - start));
    start = dot + 1;
  }
}

struct RawConfig {
  // section -> key -> value
  std::map<std::string, std::map<std::string, std::string>> sections;
  // section -> key -> 1-based source line, for error messages
  std::map<std::string, std::map<std::string, std::size_t>> lines;
  std::vector<std::string> profile_order;  // first appearance in [profiles]
};

// "line N: [section] key", or just "[section] key" for defaulted values that
// never appeared in the input.
std::string key_context(const RawConfig& raw, const std::string& section,
                        const std::string& key) {
  std::string context = "[" + section + "] " + key;
  const auto section_it = raw.lines.find(section);
  if (section_it != raw.lines.end()) {
    const auto key_it = section_it->second.find(key);
    if (key_it != section_it->second.end()) {
      context = "line " + std::to_string(key_it->second) + ": " + context;
    }
  }
  return context;
}

RawConfig read_raw(std::istream& input) {
  RawConfig raw;
  std::string line;
  std::string section;
  std::size_t line_number = 0;
  std::set<std::string> seen_profiles;
  while (std::getline(input, line)) {
    ++line_number;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    const std::string text = trim(line);
    if (text.empty() || text.front() == '#') continue;
    if (text.front() == '[') {
      if (text.back() != ']' || text.size() < 3) {
        throw ParseError("line " + std::to_string(line_number) +
                         ": malformed section header");
      }
      section = text.substr(1, text.size() - 2);
      if (std::find(std::begin(kSections), std::end(kSections), section) ==
          std::end(kSections)) {
        throw ConfigError("unknown section [" + section + "]");
      }
      continue;
    }
    const auto eq = text.find('=');
    if (eq == std::string::npos) {
      throw ParseError("line " + std::to_string(line_number) +
                       ": expected 'key = value'");
    }
    const std::string key = trim(std::string_view(text).substr(0, eq));
    const std::string value = trim(std::string_view(text).substr(eq + 1));
    if (key.empty() || value.empty()) {
      throw ParseError("line " + std::to_string(line_number) +
                       ": expected 'key = value'");
    }
    if (section.empty()) {
      throw ParseError("line " + std::to_string(line_number) +
                       ": key outside any section");
    }
    if (!raw.sections[section].emplace(key, value).second) {
      throw ConfigError("duplicate key '" + key + "' in [" + section + "]");
    }
    raw.lines[section][key] = line_number;
    if (section == "profiles") {
      const std::string name = key.substr(0, key.find('.'));
      if (seen_profiles.insert(name).second) {
        raw.profile_order.push_back(name);
      }
    }
  }
  return raw;
}

const std::string& require_key(
    const std::map<std::string, std::string>& section,
    const std::string& key, const std::string& section_name) {
  const auto it = section.find(key);
  if (it == section.end()) {
    throw ConfigError("missing key '" + key + "' in [" + section_name + "]");
  }
  return it->second;
}

SolverConfig assemble_solver(const RawConfig& raw) {
  SolverConfig solver;
  const auto solver_it = raw.sections.find("solver");
  if (solver_it == raw.sections.end()) {
    throw ConfigError("missing section [solver]");
  }
  const auto& kv = solver_it->second;
  for (const auto& [key, value] : kv) {
    const std::string ctx = key_context(raw, "solver", key);
    if (key == "gamma") {
      solver.gamma = to_double(value, ctx);
    } else if (key == "m_total") {
      solver.m_total = to_int(value, ctx);
    } else if (key == "tau") {
      solver.tau = to_double(value, ctx);
    } else if (key == "s_max") {
      solver.s_max = to_double(value, ctx);
    } else if (key == "c_max") {
      solver.c_max = to_double(value, ctx);
    } else if (key == "mu_e") {
      solver.mu_e = to_double(value, ctx);
    } else if (key == "mu_s") {
      solver.mu_s = to_double(value, ctx);
    } else if (key == "n_tiles") {
      solver.n_tiles = to_int(value, ctx);
    } else {
      throw ConfigError("unknown key '" + key + "' in [solver]");
    }
  }
  for (const char* key : {"gamma", "m_total", "tau", "s_max", "c_max", "mu_e",
                          "mu_s", "n_tiles"}) {
    require_key(kv, key, "solver");
  }

  const auto profiles_it = raw.sections.find("profiles");
  if (profiles_it == raw.sections.end()) {
    throw ConfigError("missing section [profiles]");
  }
  for (const auto& [key, value] : profiles_it->second) {
    const auto parts = split_dots(key);
    if (parts.size() != 2 || parts[0].empty() ||
        (parts[1] != "b_min_mbps" && parts[1] != "b_max_mbps" &&
         parts[1] != "lambda")) {
      throw ConfigError("unknown key '" + key + "' in [profiles]");
    }
  }
  for (const std::string& name : raw.profile_order) {
    BandwidthProfile profile;
    profile.name = name;
    profile.b_min_mbps =
        to_double(require_key(profiles_it->second, name + ".b_min_mbps",
                              "profiles"),
                  key_context(raw, "profiles", name + ".b_min_mbps"));
    profile.b_max_mbps =
        to_double(require_key(profiles_it->second, name + ".b_max_mbps",
                              "profiles"),
                  key_context(raw, "profiles", name + ".b_max_mbps"));
    profile.lambda = to_double(
        require_key(profiles_it->second, name + ".lambda", "profiles"),
        key_context(raw, "profiles", name + ".lambda"));
    solver.profiles.push_back(profile);
  }
  return solver;
}

std::vector<Resolution> assemble_resolutions(const RawConfig& raw) {
  const auto it = raw.sections.find("resolutions");
  if (it == raw.sections.end()) {
    throw ConfigError("missing section [resolutions]");
  }
  std::map<int, Resolution> by_index;
  for (const auto& [key, value] : it->second) {
    const auto parts = split_dots(key);
    if (parts.size() != 2 ||
        (parts[1] != "width" && parts[1] != "height")) {
      throw ConfigError("unknown key '" + key + "' in [resolutions]");
    }
    const int index = indexed_suffix(parts[0], 'g', "[resolutions]");
    const int dim = to_int(value, key_context(raw, "resolutions", key));
    if (parts[1] == "width") {
      by_index[index].width = dim;
    } else {
      by_index[index].height = dim;
    }
  }
  std::vector<Resolution> resolutions;
  int expected = 1;
  for (const auto& [index, res] : by_index) {
    if (index != expected) {
      throw ConfigError("[resolutions] names must be contiguous g1..gN; g" +
                        std::to_string(expected) + " is missing");
    }
    if (res.width == 0 || res.height == 0) {
      throw ConfigError("[resolutions] g" + std::to_string(index) +
                        " needs both width and height");
    }
    resolutions.push_back(res);
    ++expected;
  }
  return resolutions;
}

std::vector<Centroid> assemble_centroids(const RawConfig& raw) {
  const auto it = raw.sections.find("centroids");
  if (it == raw.sections.end()) {
    throw ConfigError("missing section [centroids]");
  }
  std::map<int, Centroid> by_index;
  for (const auto& [key, value] : it->second) {
    const auto parts = split_dots(key);
    if (parts.size() != 2 || (parts[1] != "f_spa" && parts[1] != "f_tmp")) {
      throw ConfigError("unknown key '" + key + "' in [centroids]");
    }
    const int index = indexed_suffix(parts[0], 'o', "[centroids]");
    Centroid& centroid = by_index[index];
    centroid.content_type = index;
    const double v = to_double(value, key_context(raw, "centroids", key));
    if (parts[1] == "f_spa") {
      centroid.f_spa = v;
    } else {
      centroid.f_tmp = v;
    }
  }
  std::vector<Centroid> centroids;
  int expected = 1;
  for (const auto& [index, centroid] : by_index) {
    if (index != expected) {
      throw ConfigError("[centroids] names must be contiguous o1..oN; o" +
                        std::to_string(expected) + " is missing");
    }
    const std::string prefix = "o" + std::to_string(index);
    if (it->second.find(prefix + ".f_spa") == it->second.end() ||
        it->second.find(prefix + ".f_tmp") == it->second.end()) {
      throw ConfigError("[centroids] " + prefix +
                        " needs both f_spa and f_tmp");
    }
    centroids.push_back(centroid);
    ++expected;
  }
  return centroids;
}

ModelTable assemble_models(const RawConfig& raw, int content_types,
                           int resolutions) {
  const auto it = raw.sections.find("models");
  if (it == raw.sections.end()) {
    throw ConfigError("missing section [models]");
  }
  std::map<std::tuple<int, int, int>, PowerFitParams> partial;
  std::map<std::tuple<int, int, int>, std::set<std::string>> seen;
  for (const auto& [key, value] : it->second) {
    const auto parts = split_dots(key);
    if (parts.size() != 4 ||
        (parts[2] != "distortion" && parts[2] != "data_size") ||
        (parts[3] != "k" && parts[3] != "omega" && parts[3] != "phi")) {
      throw ConfigError("unknown key '" + key + "' in [models]");
    }
    const int o = indexed_suffix(parts[0], 'o', "[models]");
    const int g = indexed_suffix(parts[1], 'g', "[models]");
    if (o > content_types) {
      throw ConfigError("[models] entry " + key +
                        " references unknown content type o" +
                        std::to_string(o));
    }
    if (g > resolutions) {
      throw ConfigError("[models] entry " + key +
                        " references unknown resolution g" + std::to_string(g));
    }
    const int kind = parts[2] == "distortion" ? 0 : 1;
    const auto slot = std::make_tuple(o, g, kind);
    const double v = to_double(value, key_context(raw, "models", key));
    if (parts[3] == "k") {
      partial[slot].k = v;
    } else if (parts[3] == "omega") {
      partial[slot].omega = v;
    } else {
      partial[slot].phi = v;
    }
    seen[slot].insert(parts[3]);
  }
  ModelTable models;
  for (const auto& [slot, params] : partial) {
    const auto& fields = seen[slot];
    if (fields.size() != 3) {
      throw ConfigError("[models] o" + std::to_string(std::get<0>(slot)) +
                        ".g" + std::to_string(std::get<1>(slot)) + "." +
                        (std::get<2>(slot) == 0 ? "distortion" : "data_size") +
                        " needs k, omega and phi");
    }
    models.set(std::get<0>(slot), std::get<1>(slot),
               std::get<2>(slot) == 0 ? ModelKind::kDistortion
                                      : ModelKind::kDataSize,
               params);
  }
  return models;
}

CandidateGrid assemble_grid(const RawConfig& raw, const SolverConfig& solver) {
  CandidateGrid grid;
  const auto it = raw.sections.find("grids");
  if (it == raw.sections.end() || it->second.empty()) {
    double anchor = solver.profiles.front().b_min_mbps;
    for (const BandwidthProfile& profile : solver.profiles) {
      anchor = std::min(anchor, profile.b_min_mbps);
    }
    anchor = std::max(anchor, 0.01);
    grid.rules.assign(solver.profiles.size(), GridRule{anchor, 1.2});
    return grid;
  }
  std::set<std::string> known;
  for (const BandwidthProfile& profile : solver.profiles) {
    known.insert(profile.name);
  }
  for (const auto& [key, value] : it->second) {
    const auto parts = split_dots(key);
    if (parts.size() != 2 ||
        (parts[1] != "anchor_mbps" && parts[1] != "ratio")) {
      throw ConfigError("unknown key '" + key + "' in [grids]");
    }
    if (known.find(parts[0]) == known.end()) {
      throw ConfigError("[grids] entry " + key +
                        " references unknown profile '" + parts[0] + "'");
    }
  }
  for (const BandwidthProfile& profile : solver.profiles) {
    GridRule rule;
    rule.anchor_mbps = to_double(
        require_key(it->second, profile.name + ".anchor_mbps", "grids"),
        key_context(raw, "grids", profile.name + ".anchor_mbps"));
    rule.ratio =
        to_double(require_key(it->second, profile.name + ".ratio", "grids"),
                  key_context(raw, "grids", profile.name + ".ratio"));
    grid.rules.push_back(rule);
  }
  return grid;
}

CostThresholds assemble_thresholds(const RawConfig& raw) {
  CostThresholds thresholds;
  const auto it = raw.sections.find("cost");
  if (it == raw.sections.end() || it->second.empty()) return thresholds;
  for (const auto& [key, value] : it->second) {
    if (key != "up_to_720p" && key != "up_to_1080p" && key != "up_to_4k" &&
        key != "up_to_8k") {
      throw ConfigError("unknown key '" + key + "' in [cost]");
    }
  }
  thresholds.up_to_720p =
      to_int64(require_key(it->second, "up_to_720p", "cost"),
               key_context(raw, "cost", "up_to_720p"));
  thresholds.up_to_1080p =
      to_int64(require_key(it->second, "up_to_1080p", "cost"),
               key_context(raw, "cost", "up_to_1080p"));
  thresholds.up_to_4k = to_int64(require_key(it->second, "up_to_4k", "cost"),
                                 key_context(raw, "cost", "up_to_4k"));
  thresholds.up_to_8k = to_int64(require_key(it->second, "up_to_8k", "cost"),
                                 key_context(raw, "cost", "up_to_8k"));
  return thresholds;
}

}  // namespace

Config default_config() {
  Config config;
  config.solver.gamma = 0.1;
  config.solver.m_total = 12;
  config.solver.tau = 1.2;
  config.solver.s_max = 8000.0;
  config.solver.c_max = 8000.0;
  config.solver.mu_e = 0.017;
  config.solver.mu_s = 0.023;
  config.solver.n_tiles = 10;
  config.solver.profiles = {
      BandwidthProfile{"p1", 1.00, 4.00, 0.25},
      BandwidthProfile{"p2", 3.00, 20.00, 0.25},
      BandwidthProfile{"p3", 15.00, 30.00, 0.25},
      BandwidthProfile{"p4", 25.00, 40.00, 0.25},
  };
  config.resolutions = {
      Resolution{3072, 1536},
      Resolution{4096, 2048},
      Resolution{8192, 4096},
  };
  config.centroids = {
      Centroid{1, 0.977, 0.065},
      Centroid{2, 0.843, 0.090},
      Centroid{3, 0.789, 0.212},
  };

  struct Row {
    int o, g;
    PowerFitParams distortion, data_size;
  };
  const Row rows[] = {
      {1, 1, {1809.0, -0.6959, 5.649}, {0.7613, 0.9901, 52.54}},
      {1, 2, {4002.0, -0.7558, 2.723}, {0.8005, 0.9859, 52.25}},
      {1, 3, {1829.0, -0.5587, -3.266}, {0.8264, 0.9846, 214.9}},
      {2, 1, {220.1, -0.3583, 6.447}, {0.6467, 1.003, 29.36}},
      {2, 2, {191.9, -0.2763, -5.728}, {0.6078, 1.009, 71.15}},
      {2, 3, {480.6, -0.3643, -5.728}, {0.5654, 1.015, 269.0}},
      {3, 1, {820.4, -0.4702, 6.2}, {0.6631, 1.001, 10.69}},
      {3, 2, {643.0, -0.3825, -2.625}, {0.6691, 1.0, 17.46}},
      {3, 3, {616.9, -0.2837, -23.78}, {0.5943, 1.012, 203.8}},
  };
  for (const Row& row : rows) {
    config.models.set(row.o, row.g, ModelKind::kDistortion, row.distortion);
    config.models.set(row.o, row.g, ModelKind::kDataSize, row.data_size);
  }

  config.grid.rules.assign(config.solver.profiles.size(),
                           GridRule{1.00, 1.2});
  return config;
}

void validate_full_config(const Config& config) {
  validate_config(config.solver);

  if (config.resolutions.empty()) {
    throw ConfigError("at least one resolution is required");
  }
  for (std::size_t i = 0; i < config.resolutions.size(); ++i) {
    const Resolution& res = config.resolutions[i];
    if (res.width <= 0 || res.height <= 0) {
      throw ConfigError("resolution g" + std::to_string(i + 1) +
                        " must have positive dimensions");
    }
    if (i > 0 && !resolution_less(config.resolutions[i - 1], res)) {
      throw ConfigError(
          "resolutions must be listed in ascending pixel order without "
          "duplicates");
    }
  }

  if (config.centroids.empty()) {
    throw ConfigError("at least one centroid is required");
  }
  for (std::size_t i = 0; i < config.centroids.size(); ++i) {
    const Centroid& centroid = config.centroids[i];
    if (centroid.content_type != static_cast<int>(i) + 1) {
      throw ConfigError("centroid content types must be contiguous from o1");
    }
    if (!(centroid.f_spa >= 0.0 && centroid.f_spa <= 1.0)) {
      throw ConfigError("centroid o" + std::to_string(centroid.content_type) +
                        ": f_spa must lie in [0, 1]");
    }
    if (!(centroid.f_tmp >= 0.0) || !std::isfinite(centroid.f_tmp)) {
      throw ConfigError("centroid o" + std::to_string(centroid.content_type) +
                        ": f_tmp must be >= 0");
    }
  }

  config.models.require_complete(static_cast<int>(config.centroids.size()),
                                 static_cast<int>(config.resolutions.size()));

  if (config.grid.rules.size() != config.solver.profiles.size()) {
    throw ConfigError("grid defines " +
                      std::to_string(config.grid.rules.size()) +
                      " rules for " +
                      std::to_string(config.solver.profiles.size()) +
                      " profiles");
  }
  for (std::size_t p = 0; p < config.grid.rules.size(); ++p) {
    const GridRule& rule = config.grid.rules[p];
    const std::string& name = config.solver.profiles[p].name;
    if (!(rule.anchor_mbps > 0.0) || !std::isfinite(rule.anchor_mbps)) {
      throw ConfigError("profile " + name + ": grid anchor must be positive");
    }
    if (!is_two_decimal(rule.anchor_mbps)) {
      throw ConfigError("profile " + name +
                        ": grid anchor must have at most two fractional "
                        "digits");
    }
    if (!(rule.ratio > 1.0) || !std::isfinite(rule.ratio)) {
      throw ConfigError("profile " + name + ": grid ratio must be > 1");
    }
  }

  const CostThresholds& t = config.thresholds;
  if (!(t.up_to_720p > 0 && t.up_to_720p < t.up_to_1080p &&
        t.up_to_1080p < t.up_to_4k && t.up_to_4k < t.up_to_8k)) {
    throw ConfigError(
        "cost thresholds must be positive and strictly increasing");
  }
}

Config parse_config(std::istream& input) {
  const RawConfig raw = read_raw(input);
  Config config;
  config.solver = assemble_solver(raw);
  config.resolutions = assemble_resolutions(raw);
  config.centroids = assemble_centroids(raw);
  config.models =
      assemble_models(raw, static_cast<int>(config.centroids.size()),
                      static_cast<int>(config.resolutions.size()));
  config.grid = assemble_grid(raw, config.solver);
  config.thresholds = assemble_thresholds(raw);
  validate_full_config(config);
  return config;
}

std::string serialize_config(const Config& config) {
  std::ostringstream out;
  const SolverConfig& s = config.solver;
  out << "[solver]\n";
  out << "gamma = " << fmt_shortest(s.gamma) << "\n";
  out << "m_total = " << s.m_total << "\n";
  out << "tau = " << fmt_shortest(s.tau) << "\n";
  out << "s_max = " << fmt_shortest(s.s_max) << "\n";
  out << "c_max = " << fmt_shortest(s.c_max) << "\n";
  out << "mu_e = " << fmt_shortest(s.mu_e) << "\n";
  out << "mu_s = " << fmt_shortest(s.mu_s) << "\n";
  out << "n_tiles = " << s.n_tiles << "\n";

  out << "\n[profiles]\n";
  for (const BandwidthProfile& profile : s.profiles) {
    out << profile.name << ".b_min_mbps = " << fmt_bitrate(profile.b_min_mbps)
        << "\n";
    out << profile.name << ".b_max_mbps = " << fmt_bitrate(profile.b_max_mbps)
        << "\n";
    out << profile.name << ".lambda = " << fmt_shortest(profile.lambda)
        << "\n";
  }

  out << "\n[resolutions]\n";
  for (std::size_t i = 0; i < config.resolutions.size(); ++i) {
    out << "g" << i + 1 << ".width = " << config.resolutions[i].width << "\n";
    out << "g" << i + 1 << ".height = " << config.resolutions[i].height
        << "\n";
  }

  out << "\n[centroids]\n";
  for (const Centroid& centroid : config.centroids) {
    out << "o" << centroid.content_type
        << ".f_spa = " << fmt_shortest(centroid.f_spa) << "\n";
    out << "o" << centroid.content_type
        << ".f_tmp = " << fmt_shortest(centroid.f_tmp) << "\n";
  }

  out << "\n[models]\n";
  for (std::size_t o = 1; o <= config.centroids.size(); ++o) {
    for (std::size_t g = 1; g <= config.resolutions.size(); ++g) {
      for (ModelKind kind : {ModelKind::kDistortion, ModelKind::kDataSize}) {
        const PowerFitParams& params = config.models.at(
            static_cast<int>(o), static_cast<int>(g), kind);
        const std::string prefix =
            "o" + std::to_string(o) + ".g" + std::to_string(g) + "." +
            (kind == ModelKind::kDistortion ? "distortion" : "data_size");
        out << prefix << ".k = " << fmt_shortest(params.k) << "\n";
        out << prefix << ".omega = " << fmt_shortest(params.omega) << "\n";
        out << prefix << ".phi = " << fmt_shortest(params.phi) << "\n";
      }
    }
  }

  out << "\n[grids]\n";
  for (std::size_t p = 0; p < s.profiles.size(); ++p) {
    const GridRule& rule = config.grid.rules[p];
    out << s.profiles[p].name
        << ".anchor_mbps = " << fmt_bitrate(rule.anchor_mbps) << "\n";
    out << s.profiles[p].name << ".ratio = " << fmt_shortest(rule.ratio)
        << "\n";
  }

  out << "\n[cost]\n";
  out << "up_to_720p = " << config.thresholds.up_to_720p << "\n";
  out << "up_to_1080p = " << config.thresholds.up_to_1080p << "\n";
  out << "up_to_4k = " << config.thresholds.up_to_4k << "\n";
  out << "up_to_8k = " << config.thresholds.up_to_8k << "\n";
  return out.str();
}

}  // namespace ladder360
