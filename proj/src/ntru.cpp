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

#include "ntruexp/ntru.hpp"

#include <vector>

namespace ntruexp {
namespace {

void check_ternary(const RingElement& m) {
  for (int32_t v : m.coeffs) {
    if (v < -1 || v > 1) {
      throw std::invalid_argument("message coefficients must be in {-1,0,1}");
    }
  }
}

CiphertextBlock encrypt_core(const RingElement& key,
                             const RingElement& message,
                             const RingElement& blind,
                             const NtruParams& params) {
  const RingElement hb = ring_mul(key, blind, params.q);
  return CiphertextBlock{ring_scale_add(params.p, hb, message, params.q)};
}

}  // namespace

std::pair<PrivateKey, PublicKey> keygen(const NtruParams& params, Rng& rng) {
  if (!params.valid()) throw std::invalid_argument("invalid NTRU parameters");
  const size_t n = static_cast<size_t>(params.n);
  for (int attempt = 0; attempt < kResampleCap; ++attempt) {
    RingElement f = sample_ternary(n, params.weight_fg, params.weight_fg - 1, rng);
    auto f_p = invert_mod_prime(f, params.p);
    if (!f_p) continue;
    auto f_q = invert_mod_q(f, params.q);
    if (!f_q) continue;
    RingElement g = sample_ternary(n, params.weight_fg, params.weight_fg, rng);
    RingElement h = ring_mul(*f_q, g, params.q);
    return {PrivateKey{std::move(f), std::move(*f_p)},
            PublicKey{std::move(h), params}};
  }
  throw ResampleExhausted();
}

CiphertextBlock encrypt(const RingElement& key, const RingElement& message,
                        const NtruParams& params, Rng& rng) {
  check_ternary(message);
  const RingElement b = sample_ternary(static_cast<size_t>(params.n),
                                       params.weight_b, params.weight_b, rng);
  return encrypt_core(key, message, b, params);
}

CiphertextBlock encrypt(const PublicKey& pk, const RingElement& message,
                        Rng& rng) {
  return encrypt(pk.h, message, pk.params, rng);
}

RingElement decrypt(const PrivateKey& sk, const CiphertextBlock& ct,
                    const NtruParams& params) {
  const RingElement a = center_lift(ring_mul(ct.c, sk.f, params.q), params.q);
  const RingElement tau = reduce(a, params.p);
  return ring_mul(tau, sk.f_p, params.p);
}

double estimate_failure_rate(const NtruParams& params, KeyDepth depth,
                             int trials, Rng& rng) {
  if (trials < 1) throw std::invalid_argument("trials must be >= 1");
  auto [sk, pk] = keygen(params, rng);

  RingElement target = pk.h;
  const int levels = depth == KeyDepth::kPlain      ? 0
                     : depth == KeyDepth::kExpanded ? 1
                                                    : 2;
  const size_t n = static_cast<size_t>(params.n);
  for (int i = 0; i < levels; ++i) {
    const RingElement e =
        sample_ternary(n, params.weight_expander, params.weight_expander, rng);
    target = ring_mul(target, e, params.q);
  }

  std::vector<uint64_t> seeds(static_cast<size_t>(trials));
  for (auto& s : seeds) s = rng.next_u64();

  int failures = 0;
#pragma omp parallel for schedule(static) reduction(+ : failures)
  for (int t = 0; t < trials; ++t) {
    Rng trial_rng(seeds[static_cast<size_t>(t)]);
    const RingElement msg = sample_uniform_ternary(n, trial_rng);
    const CiphertextBlock ct = encrypt(target, msg, params, trial_rng);
    const RingElement recovered = decrypt(sk, ct, params);
    failures += (recovered.coeffs != reduce(msg, params.p).coeffs);
  }
  return static_cast<double>(failures) / trials;
}

}  // namespace ntruexp
