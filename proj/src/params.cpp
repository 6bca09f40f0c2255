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

#include "ntruexp/params.hpp"

#include <numeric>

namespace ntruexp {

bool NtruParams::valid() const {
  if (n < 3 || p < 2 || q < 2) return false;
  if (std::gcd(p, q) != 1) return false;
  if (weight_fg < 1 || weight_fg > n) return false;
  if (weight_b < 1 || weight_b > n) return false;
  if (weight_expander < 1 || 2 * weight_expander > n) return false;
  return true;
}

namespace {

NtruParams make(int32_t n, int32_t q, int32_t weight_expander, uint8_t id,
                const char* name, int level) {
  NtruParams pr;
  pr.n = n;
  pr.p = 3;
  pr.q = q;
  pr.weight_fg = n / 3;
  pr.weight_b = n / 3;
  pr.weight_expander = weight_expander;
  pr.params_id = id;
  pr.name = name;
  pr.security_level = level;
  return pr;
}

}  // namespace

const NtruParams& preset_toy17() {
  static const NtruParams pr = make(17, 1024, 1, 0, "toy17", 0);
  return pr;
}

const NtruParams& preset_ntru509() {
  static const NtruParams pr = make(509, 2048, 2, 1, "ntru509", 1);
  return pr;
}

const NtruParams& preset_ntru677() {
  static const NtruParams pr = make(677, 2048, 2, 2, "ntru677", 3);
  return pr;
}

const NtruParams& preset_ntru821() {
  static const NtruParams pr = make(821, 4096, 2, 3, "ntru821", 5);
  return pr;
}

const std::vector<NtruParams>& production_presets() {
  static const std::vector<NtruParams> all = {
      preset_ntru509(), preset_ntru677(), preset_ntru821()};
  return all;
}

std::optional<NtruParams> preset_by_name(std::string_view name) {
  for (const auto* pr : {&preset_toy17(), &preset_ntru509(), &preset_ntru677(),
                         &preset_ntru821()}) {
    if (pr->name == name) return *pr;
  }
  return std::nullopt;
}

std::optional<NtruParams> preset_by_id(uint8_t params_id) {
  for (const auto* pr : {&preset_toy17(), &preset_ntru509(), &preset_ntru677(),
                         &preset_ntru821()}) {
    if (pr->params_id == params_id) return *pr;
  }
  return std::nullopt;
}

}  // namespace ntruexp
