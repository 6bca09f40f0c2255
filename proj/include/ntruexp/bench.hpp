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
//
// Timing harness for the keygen-vs-expansion speedup. Runs strictly
// single-threaded and never interleaves keygen and expansion trials.

#ifndef NTRUEXP_BENCH_HPP
#define NTRUEXP_BENCH_HPP

#include <string>
#include <vector>

#include "ntruexp/params.hpp"
#include "ntruexp/rng.hpp"

namespace ntruexp {

struct TimingStats {
  double mean_ms = 0;
  double median_ms = 0;
  double stddev_ms = 0;
  int trials = 0;
};

// Sample statistics over a fixed timing trace (milliseconds).
TimingStats compute_stats(const std::vector<double>& samples_ms);

struct BenchReport {
  std::string preset;
  int security_level = 0;
  TimingStats keygen;
  TimingStats expansion;
  double speedup_ratio = 0;  // keygen mean / expansion mean
};

// Times keygen and expansion (expander sampling charged to the expansion
// side) with a monotonic clock; one warm-up round per side is excluded.
BenchReport bench_preset(const NtruParams& params, int trials, Rng& rng);

enum class TableFormat { kCsv, kText };

// Columns: preset, security_level, keygen_ms, expansion_ms, speedup.
std::string emit_table(const std::vector<BenchReport>& reports,
                       TableFormat format);

}  // namespace ntruexp

#endif  // NTRUEXP_BENCH_HPP
