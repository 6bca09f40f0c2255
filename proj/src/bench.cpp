// Copyright 2026 The ntruexp Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     https://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "ntruexp/bench.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <stdexcept>

#include "ntruexp/expansion.hpp"
#include "ntruexp/ntru.hpp"

namespace ntruexp {
namespace {

using Clock = std::chrono::steady_clock;

double ms_since(Clock::time_point start) {
  return std::chrono::duration<double, std::milli>(Clock::now() - start)
      .count();
}

}  // namespace

TimingStats compute_stats(const std::vector<double>& samples_ms) {
  if (samples_ms.empty()) throw std::invalid_argument("no timing samples");
  TimingStats s;
  s.trials = static_cast<int>(samples_ms.size());
  double sum = 0;
  for (double v : samples_ms) sum += v;
  s.mean_ms = sum / s.trials;

  std::vector<double> sorted = samples_ms;
  std::sort(sorted.begin(), sorted.end());
  const size_t mid = sorted.size() / 2;
  s.median_ms = sorted.size() % 2 ? sorted[mid]
                                  : (sorted[mid - 1] + sorted[mid]) / 2.0;

  if (s.trials > 1) {
    double acc = 0;
    for (double v : samples_ms) acc += (v - s.mean_ms) * (v - s.mean_ms);
    s.stddev_ms = std::sqrt(acc / (s.trials - 1));
  }
  return s;
}

BenchReport bench_preset(const NtruParams& params, int trials, Rng& rng) {
  if (trials < 10) throw std::invalid_argument("bench needs >= 10 trials");

  BenchReport report;
  report.preset = params.name;
  report.security_level = params.security_level;

  // keygen trials first; a warm-up round on each side is discarded
  (void)keygen(params, rng);
  std::vector<double> keygen_ms;
  keygen_ms.reserve(static_cast<size_t>(trials));
  RingElement h;
  for (int t = 0; t < trials; ++t) {
    const auto start = Clock::now();
    auto [sk, pk] = keygen(params, rng);
    keygen_ms.push_back(ms_since(start));
    h = std::move(pk.h);
  }

  // expansion trials against the last generated key; expander sampling is
  // inside the timed region
  (void)expand_key(ExpandedPublicKey{h, 0},
                   sample_expander(params, ExpanderRole::kDirect, rng),
                   params);
  std::vector<double> expansion_ms;
  expansion_ms.reserve(static_cast<size_t>(trials));
  for (int t = 0; t < trials; ++t) {
    const auto start = Clock::now();
    const auto secret = sample_expander(params, ExpanderRole::kDirect, rng);
    const auto expanded = expand_key(ExpandedPublicKey{h, 0}, secret, params);
    expansion_ms.push_back(ms_since(start));
    if (expanded.key.size() != h.size()) throw std::logic_error("bad expand");
  }

  report.keygen = compute_stats(keygen_ms);
  report.expansion = compute_stats(expansion_ms);
  report.speedup_ratio = report.keygen.mean_ms / report.expansion.mean_ms;
  return report;
}

std::string emit_table(const std::vector<BenchReport>& reports,
                       TableFormat format) {
  if (reports.empty()) throw std::invalid_argument("no bench reports");
  std::string out;
  char line[256];
  if (format == TableFormat::kCsv) {
    out += "preset,security_level,keygen_ms,expansion_ms,speedup\n";
    for (const auto& r : reports) {
      std::snprintf(line, sizeof(line), "%s,%d,%.6f,%.6f,%.3f\n",
                    r.preset.c_str(), r.security_level, r.keygen.mean_ms,
                    r.expansion.mean_ms, r.speedup_ratio);
      out += line;
    }
  } else {
    std::snprintf(line, sizeof(line), "%-10s %-14s %14s %14s %10s\n", "preset",
                  "security_level", "keygen_ms", "expansion_ms", "speedup");
    out += line;
    for (const auto& r : reports) {
      std::snprintf(line, sizeof(line), "%-10s %-14d %14.6f %14.6f %10.3f\n",
                    r.preset.c_str(), r.security_level, r.keygen.mean_ms,
                    r.expansion.mean_ms, r.speedup_ratio);
      out += line;
    }
  }
  return out;
}

}  // namespace ntruexp
