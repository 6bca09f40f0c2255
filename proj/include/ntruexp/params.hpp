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

#ifndef NTRUEXP_PARAMS_HPP
#define NTRUEXP_PARAMS_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace ntruexp {

// Ring and sampling parameters. p and q must be coprime; q is a power of
// two in the shipped presets (a prime q is also accepted, for toy tests).
struct NtruParams {
  int32_t n = 0;  // polynomial degree bound, ring is Z[x]/(x^n - 1)
  int32_t p = 3;  // small modulus
  int32_t q = 0;  // large modulus
  int32_t weight_fg = 0;        // +1 count for f and g (f carries one fewer -1)
  int32_t weight_b = 0;         // per-sign count for the encryption blind b
  int32_t weight_expander = 2;  // per-sign count for expander secrets
  uint8_t params_id = 0;
  std::string name;
  int security_level = 0;

  bool valid() const;
};

// Shipped presets. toy17 is deliberately small and insecure; it exists for
// fast tests and oracle comparisons only.
const NtruParams& preset_toy17();
const NtruParams& preset_ntru509();
const NtruParams& preset_ntru677();
const NtruParams& preset_ntru821();

// The three production presets, in security-level order 1/3/5.
const std::vector<NtruParams>& production_presets();

std::optional<NtruParams> preset_by_name(std::string_view name);
std::optional<NtruParams> preset_by_id(uint8_t params_id);

}  // namespace ntruexp

#endif  // NTRUEXP_PARAMS_HPP
