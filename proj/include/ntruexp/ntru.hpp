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
// NTRU key-pair generation, randomized encryption and three-step
// decryption. Decryption failures are silent at this layer; the byte
// framing in encoding.hpp makes them detectable.

#ifndef NTRUEXP_NTRU_HPP
#define NTRUEXP_NTRU_HPP

#include <stdexcept>
#include <utility>

#include "ntruexp/params.hpp"
#include "ntruexp/ring.hpp"
#include "ntruexp/rng.hpp"

namespace ntruexp {

struct PrivateKey {
  RingElement f;    // ternary, unreduced
  RingElement f_p;  // f^{-1} mod p
};

struct PublicKey {
  RingElement h;  // F_q * g mod q
  NtruParams params;
};

struct CiphertextBlock {
  RingElement c;  // mod q

  friend bool operator==(const CiphertextBlock&,
                         const CiphertextBlock&) = default;
};

// f failed to invert too many times in a row.
class ResampleExhausted : public std::runtime_error {
 public:
  ResampleExhausted() : std::runtime_error("keygen: resample attempts exhausted") {}
};

inline constexpr int kResampleCap = 100;

// Samples f (one more +1 than -1, so f(1) != 0 and f stays invertible)
// and g, computes F_p and F_q, returns {f, F_p} and h = F_q * g mod q.
// F_q and g are discarded.
std::pair<PrivateKey, PublicKey> keygen(const NtruParams& params, Rng& rng);

// C = p*h*b + M mod q with a fresh ternary blind b per call. The key may
// be an original or an expanded public key; message coefficients must be
// in {-1, 0, 1}.
CiphertextBlock encrypt(const RingElement& key, const RingElement& message,
                        const NtruParams& params, Rng& rng);
CiphertextBlock encrypt(const PublicKey& pk, const RingElement& message,
                        Rng& rng);

#ifdef NTRUEXP_ENABLE_TEST_HOOKS
// Test hook: encrypt with a caller-chosen blind polynomial.
inline CiphertextBlock encrypt_with_blind(const RingElement& key,
                                          const RingElement& message,
                                          const RingElement& blind,
                                          const NtruParams& params) {
  return CiphertextBlock{
      ring_scale_add(params.p, ring_mul(key, blind, params.q), message,
                     params.q)};
}
#endif

// a = center_lift(C * f mod q); tau = a mod p; M' = tau * F_p mod p.
RingElement decrypt(const PrivateKey& sk, const CiphertextBlock& ct,
                    const NtruParams& params);

enum class KeyDepth { kPlain, kExpanded, kButterfly };

// Monte Carlo fraction of single-block roundtrips that fail to recover
// the message at the given expansion depth. Trials run in parallel with
// forked rng streams.
double estimate_failure_rate(const NtruParams& params, KeyDepth depth,
                             int trials, Rng& rng);

}  // namespace ntruexp

#endif  // NTRUEXP_NTRU_HPP
