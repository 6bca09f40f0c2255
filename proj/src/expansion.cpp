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

#include "ntruexp/expansion.hpp"

#include <stdexcept>

namespace ntruexp {

ExpandedPublicKey as_expanded(const PublicKey& pk) {
  return ExpandedPublicKey{pk.h, 0};
}

ExpandedPublicKey expand_key(const ExpandedPublicKey& pk,
                             const ExpanderSecret& secret,
                             const NtruParams& params) {
  if (pk.depth >= 2) {
    throw std::invalid_argument("expansion depth is capped at 2");
  }
  return ExpandedPublicKey{ring_mul(pk.key, secret.e, params.q), pk.depth + 1};
}

ExpandedPublicKey expand_key(const PublicKey& pk, const ExpanderSecret& secret) {
  return expand_key(as_expanded(pk), secret, pk.params);
}

ExpanderSecret sample_expander(const NtruParams& params, ExpanderRole role,
                               Rng& rng, bool strict_invertible) {
  const size_t n = static_cast<size_t>(params.n);
  for (int attempt = 0; attempt < kResampleCap; ++attempt) {
    // Balanced weights give e(1) = 0, which is never invertible; strict
    // mode therefore adds one extra +1, exactly like keygen's f.
    const int32_t plus =
        params.weight_expander + (strict_invertible ? 1 : 0);
    RingElement e = sample_ternary(n, plus, params.weight_expander, rng);
    if (e.is_zero()) continue;
    if (strict_invertible && !invert_mod_q(e, params.q)) continue;
    return ExpanderSecret{std::move(e), role};
  }
  throw ResampleExhausted();
}

bool verify_expansion(const RingElement& pk, const ExpanderSecret& secret,
                      const ExpandedPublicKey& expanded,
                      const NtruParams& params) {
  return ring_mul(pk, secret.e, params.q).coeffs == expanded.key.coeffs;
}

}  // namespace ntruexp
