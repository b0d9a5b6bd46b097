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

#include "ladder360/rdmodel.hpp"

#include <algorithm>
#include <array>
#include <charconv>
#include <cmath>
#include <istream>
#include <limits>
#include <set>
#include <string>

namespace ladder360 {

namespace {

constexpr int kMaxIterations = 500;
constexpr double kRelImprovementStop = 1e-10;

double sse_for(std::span<const RDSample> samples, const PowerFitParams& p) {
  double sse = 0.0;
  for (const RDSample& s : samples) {
    const double r = p.k * std::pow(s.z, p.omega) + p.phi - s.value;
    sse += r * r;
  }
  return sse;
}

// Solves the 3x3 system a * x = b by Gaussian elimination with partial
// pivoting. Returns false when the matrix is (numerically) singular.
bool solve3(std::array<std::array<double, 3>, 3> a, std::array<double, 3> b,
            std::array<double, 3>& x) {
  for (int col = 0; col < 3; ++col) {
    int pivot = col;
    for (int row = col + 1; row < 3; ++row) {
      if (std::abs(a[row][col]) > std::abs(a[pivot][col])) pivot = row;
    }
    if (std::abs(a[pivot][col]) < 1e-300) return false;
    std::swap(a[col], a[pivot]);
    std::swap(b[col], b[pivot]);
    for (int row = col + 1; row < 3; ++row) {
      const double f = a[row][col] / a[col][col];
      for (int k = col; k < 3; ++k) a[row][k] -= f * a[col][k];
      b[row] -= f * b[col];
    }
  }
  for (int row = 2; row >= 0; --row) {
    double sum = b[row];
    for (int k = row + 1; k < 3; ++k) sum -= a[row][k] * x[k];
    x[row] = sum / a[row][row];
  }
  return std::isfinite(x[0]) && std::isfinite(x[1]) && std::isfinite(x[2]);
}

// Ordinary least squares of log(value - phi0) on log z; falls back to a flat
// slope when fewer than two shifted values stay positive.
void init_power_terms(std::span<const RDSample> samples, double phi0, double& k0,
                      double& omega0) {
  double sx = 0.0, sy = 0.0, sxx = 0.0, sxy = 0.0;
  int n = 0;
  for (const RDSample& s : samples) {
    const double shifted = s.value - phi0;
    if (!(shifted > 0.0)) continue;
    const double x = std::log(s.z);
    const double y = std::log(shifted);
    sx += x;
    sy += y;
    sxx += x * x;
    sxy += x * y;
    ++n;
  }
  if (n < 2) {
    k0 = 1.0;
    omega0 = 0.0;
    return;
  }
  const double denom = n * sxx - sx * sx;
  if (std::abs(denom) < 1e-300) {
    k0 = 1.0;
    omega0 = 0.0;
    return;
  }
  omega0 = (n * sxy - sx * sy) / denom;
  k0 = std::exp((sy - omega0 * sx) / n);
}

// One full Gauss-Newton run with Levenberg damping from the given start.
FitResult run_gauss_newton(std::span<const RDSample> samples, PowerFitParams p) {
  FitResult result;
  double sse = sse_for(samples, p);
  if (!std::isfinite(sse)) throw FitError("fit diverged");

  double damping = 1e-3;
  int iterations = 0;
  while (iterations < kMaxIterations) {
    ++iterations;

    std::array<std::array<double, 3>, 3> jtj{};
    std::array<double, 3> jtr{};
    for (const RDSample& s : samples) {
      const double zw = std::pow(s.z, p.omega);
      const double r = p.k * zw + p.phi - s.value;
      const std::array<double, 3> row = {zw, p.k * zw * std::log(s.z), 1.0};
      for (int i = 0; i < 3; ++i) {
        for (int j = 0; j < 3; ++j) jtj[i][j] += row[i] * row[j];
        jtr[i] += row[i] * r;
      }
    }

    auto damped = jtj;
    for (int i = 0; i < 3; ++i) {
      const double d = jtj[i][i] > 0.0 ? jtj[i][i] : 1.0;
      damped[i][i] += damping * d;
    }

    std::array<double, 3> step{};
    bool ok = solve3(damped, {-jtr[0], -jtr[1], -jtr[2]}, step);

    PowerFitParams trial = p;
    double trial_sse = std::numeric_limits<double>::infinity();
    if (ok) {
      trial.k = p.k + step[0];
      trial.omega = p.omega + step[1];
      trial.phi = p.phi + step[2];
      trial_sse = sse_for(samples, trial);
    }

    if (ok && std::isfinite(trial_sse) && trial_sse < sse) {
      const double improvement = (sse - trial_sse) / std::max(sse, 1e-300);
      p = trial;
      sse = trial_sse;
      damping = std::max(damping * 0.1, 1e-12);
      if (improvement < kRelImprovementStop) break;
    } else {
      damping *= 10.0;
      if (damping > 1e12) break;
    }
  }

  if (!std::isfinite(sse) || !std::isfinite(p.k) || !std::isfinite(p.omega) ||
      !std::isfinite(p.phi)) {
    throw FitError("fit diverged");
  }
  result.params = p;
  result.sse = sse;
  result.iterations = iterations;
  return result;
}

}  // namespace

double eval_model(const PowerFitParams& params, double z) {
  if (!(z > 0.0)) throw std::invalid_argument("model bitrate z must be positive");
  return params.k * std::pow(z, params.omega) + params.phi;
}

RepDistortion rep_distortion(const PowerFitParams& params, double z, int n_tiles) {
  if (n_tiles <= 0) throw std::invalid_argument("n_tiles must be positive");
  RepDistortion result;
  result.total = std::max(eval_model(params, z), 0.0);
  result.per_tile.assign(static_cast<std::size_t>(n_tiles),
                         result.total / n_tiles);
  return result;
}

FitResult fit_power_series(std::span<const RDSample> samples, ModelKind kind) {
  if (samples.size() < 4) throw FitError("insufficient samples: need at least 4");
  std::set<double> distinct;
  double min_value = std::numeric_limits<double>::infinity();
  for (const RDSample& s : samples) {
    if (!(s.z > 0.0)) throw FitError("sample bitrates must be positive");
    if (!std::isfinite(s.value)) throw FitError("sample values must be finite");
    distinct.insert(s.z);
    min_value = std::min(min_value, s.value);
  }
  if (distinct.size() < 3) {
    throw FitError("insufficient samples: need at least 3 distinct bitrates");
  }

  const double phi0 = kind == ModelKind::kDistortion ? min_value - 1e-6 : 0.0;
  PowerFitParams start;
  start.phi = phi0;
  init_power_terms(samples, phi0, start.k, start.omega);

  FitResult best = run_gauss_newton(samples, start);

  // The documented initialization can start far from the optimum when the
  // series offset is negative (the shift compresses the largest-z samples to
  // ~1e-6 and skews the log-log slope). Restart from a small deterministic set
  // of alternative offsets and keep the lowest-SSE fit.
  double scale = 0.0;
  for (const RDSample& s : samples) scale += s.value * s.value;
  if (best.sse > 1e-12 * std::max(scale, 1.0)) {
    double max_value = -std::numeric_limits<double>::infinity();
    for (const RDSample& s : samples) max_value = std::max(max_value, s.value);
    const double span = max_value - min_value;
    const std::array<double, 3> alternatives = {
        0.0, min_value - 0.5 * span - 1e-6, min_value - 2.0 * span - 1e-6};
    for (double alt_phi : alternatives) {
      if (alt_phi == phi0) continue;
      PowerFitParams alt;
      alt.phi = alt_phi;
      init_power_terms(samples, alt_phi, alt.k, alt.omega);
      FitResult candidate = run_gauss_newton(samples, alt);
      if (candidate.sse < best.sse) best = candidate;
    }
  }
  return best;
}

std::vector<RDSample> load_rd_samples(std::istream& input) {
  std::vector<RDSample> samples;
  std::string line;
  std::size_t line_no = 0;
  bool header_seen = false;
  while (std::getline(input, line)) {
    ++line_no;
    auto begin = line.find_first_not_of(" \t\r");
    if (begin == std::string::npos) continue;
    auto end = line.find_last_not_of(" \t\r");
    const std::string text = line.substr(begin, end - begin + 1);
    if (text.empty() || text.front() == '#') continue;

    if (!header_seen) {
      if (text != "z,value") {
        throw ParseError("rd samples line " + std::to_string(line_no) +
                         ": expected header \"z,value\"");
      }
      header_seen = true;
      continue;
    }

    const auto comma = text.find(',');
    if (comma == std::string::npos) {
      throw ParseError("rd samples line " + std::to_string(line_no) +
                       ": expected \"<z>,<value>\"");
    }
    RDSample sample;
    const std::string zs = text.substr(0, comma);
    const std::string vs = text.substr(comma + 1);
    auto parse = [&](const std::string& field, double& out) {
      const char* first = field.data();
      const char* last = field.data() + field.size();
      while (first != last && (*first == ' ' || *first == '\t')) ++first;
      const auto [ptr, ec] = std::from_chars(first, last, out);
      if (ec != std::errc{} || ptr != last) {
        throw ParseError("rd samples line " + std::to_string(line_no) +
                         ": malformed number \"" + field + "\"");
      }
    };
    parse(zs, sample.z);
    parse(vs, sample.value);
    samples.push_back(sample);
  }
  if (!header_seen) throw ParseError("rd samples: missing header \"z,value\"");
  return samples;
}

}  // namespace ladder360
