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
// Public-key expansion: multiply a public key by a fresh sparse ternary
// element to obtain an unlinkable key that still decrypts under the
// original private key. Applied once (direct flow) or twice
// (cocoon-then-butterfly).

#ifndef NTRUEXP_EXPANSION_HPP
#define NTRUEXP_EXPANSION_HPP

#include "ntruexp/ntru.hpp"
#include "ntruexp/params.hpp"
#include "ntruexp/ring.hpp"
#include "ntruexp/rng.hpp"

namespace ntruexp {

enum class ExpanderRole { kDirect, kRaCocoon, kCaButterfly };

struct ExpanderSecret {
  RingElement e;  // sparse ternary, weight_expander per sign
  ExpanderRole role = ExpanderRole::kDirect;
};

struct ExpandedPublicKey {
  RingElement key;  // mod q
  int depth = 0;    // 0 = original public key, max 2

  friend bool operator==(const ExpandedPublicKey&,
                         const ExpandedPublicKey&) = default;
};

ExpandedPublicKey as_expanded(const PublicKey& pk);

// One expansion level; rejects depth > 2 (the scheme defines at most
// cocoon + butterfly).
ExpandedPublicKey expand_key(const ExpandedPublicKey& pk,
                             const ExpanderSecret& secret,
                             const NtruParams& params);
ExpandedPublicKey expand_key(const PublicKey& pk, const ExpanderSecret& secret);

// Sparse ternary secret, weight_expander per sign. With strict_invertible
// the secret carries one extra +1 (a balanced secret has e(1) = 0 and is
// never a unit) and is resampled until it is invertible mod q; never
// needed for decryption, kept for forward compatibility.
ExpanderSecret sample_expander(const NtruParams& params, ExpanderRole role,
                               Rng& rng, bool strict_invertible = false);

// Audit check: the holder of the secret can prove the pk -> expanded link.
bool verify_expansion(const RingElement& pk, const ExpanderSecret& secret,
                      const ExpandedPublicKey& expanded,
                      const NtruParams& params);

}  // namespace ntruexp

#endif  // NTRUEXP_EXPANSION_HPP
