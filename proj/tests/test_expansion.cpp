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

#include <set>

#include <doctest.h>

#include "ntruexp/expansion.hpp"
#include "oracle.hpp"
#include "test_util.hpp"

using namespace ntruexp;

TEST_CASE("identity expander leaves the key unchanged") {
  const auto params = preset_toy17();
  Rng rng(20);
  const auto [sk, pk] = keygen(params, rng);
  const ExpanderSecret one{ring_one(17, 0), ExpanderRole::kDirect};
  const auto expanded = expand_key(pk, one);
  CHECK(expanded.key.coeffs == pk.h.coeffs);
  CHECK(expanded.depth == 1);
}

TEST_CASE("monomial expander rotates the key") {
  const auto params = preset_toy17();
  Rng rng(21);
  const auto [sk, pk] = keygen(params, rng);
  const ExpanderSecret x{ring_monomial(17, 1, 0), ExpanderRole::kDirect};
  const auto expanded = expand_key(pk, x);
  for (size_t i = 0; i < 17; ++i) {
    CHECK(expanded.key.coeffs[(i + 1) % 17] == pk.h.coeffs[i]);
  }
}

TEST_CASE("expansion matches the convolution oracle at N=7 q=41") {
  const auto params = testutil::toy7_q41();
  Rng rng(22);
  const auto [sk, pk] = keygen(params, rng);
  const auto secret = sample_expander(params, ExpanderRole::kDirect, rng);
  const auto expanded = expand_key(pk, secret);
  CHECK(expanded.key.coeffs == oracle::mul(pk.h, secret.e, params.q).coeffs);
}

TEST_CASE("depth is capped at two") {
  const auto params = preset_toy17();
  Rng rng(23);
  const auto [sk, pk] = keygen(params, rng);
  const auto d = sample_expander(params, ExpanderRole::kRaCocoon, rng);
  const auto r = sample_expander(params, ExpanderRole::kCaButterfly, rng);
  const auto cocoon = expand_key(pk, d);
  const auto butterfly = expand_key(cocoon, r, params);
  CHECK(butterfly.depth == 2);
  CHECK_THROWS_AS(expand_key(butterfly, d, params), std::invalid_argument);
}

TEST_CASE("two-step expansion composes to a single product expander") {
  for (const auto& params : production_presets()) {
    Rng rng(24);
    auto h = RingElement(static_cast<size_t>(params.n), 0);
    for (int t = 0; t < 100; ++t) {
      for (auto& c : h.coeffs) {
        c = centered_mod(rng.below(static_cast<uint32_t>(params.q)), params.q);
      }
      const auto d = sample_expander(params, ExpanderRole::kRaCocoon, rng);
      const auto r = sample_expander(params, ExpanderRole::kCaButterfly, rng);
      const auto two_step =
          expand_key(expand_key(ExpandedPublicKey{h, 0}, d, params), r, params);
      const ExpanderSecret combined{ring_mul(d.e, r.e, params.q),
                                    ExpanderRole::kCaButterfly};
      const auto one_step = ring_mul(h, combined.e, params.q);
      CHECK(two_step.key.coeffs == one_step.coeffs);
    }
  }
}

TEST_CASE("expanded keys decrypt under the original private key") {
  const auto params = preset_toy17();
  Rng rng(25);
  const auto [sk, pk] = keygen(params, rng);
  for (int depth = 1; depth <= 2; ++depth) {
    ExpandedPublicKey key = as_expanded(pk);
    for (int i = 0; i < depth; ++i) {
      key = expand_key(key, sample_expander(params, ExpanderRole::kDirect, rng),
                       params);
    }
    for (int t = 0; t < 50; ++t) {
      const auto msg = sample_uniform_ternary(17, rng);
      const auto ct = encrypt(key.key, msg, params, rng);
      CHECK(decrypt(sk, ct, params).coeffs == reduce(msg, params.p).coeffs);
    }
  }
}

TEST_CASE("sample_expander weight and uniqueness") {
  const auto params = preset_ntru509();
  Rng rng(26);
  std::set<std::vector<int32_t>> seen;
  for (int t = 0; t < 10000; ++t) {
    const auto s = sample_expander(params, ExpanderRole::kDirect, rng);
    int plus = 0, minus = 0;
    for (int32_t c : s.e.coeffs) {
      plus += (c == 1);
      minus += (c == -1);
    }
    CHECK(plus == params.weight_expander);
    CHECK(minus == params.weight_expander);
    seen.insert(s.e.coeffs);
  }
  CHECK(seen.size() == 10000);  // no collisions over 10^4 draws
}

TEST_CASE("single-weight expander has exactly one +1 and one -1") {
  auto params = preset_toy17();
  params.weight_expander = 1;
  Rng rng(27);
  const auto s = sample_expander(params, ExpanderRole::kDirect, rng);
  int plus = 0, minus = 0;
  for (int32_t c : s.e.coeffs) {
    plus += (c == 1);
    minus += (c == -1);
  }
  CHECK(plus == 1);
  CHECK(minus == 1);
}

TEST_CASE("expanded key differs from the original") {
  const auto params = preset_toy17();
  Rng rng(28);
  const auto [sk, pk] = keygen(params, rng);
  for (int t = 0; t < 1000; ++t) {
    const auto s = sample_expander(params, ExpanderRole::kDirect, rng);
    CHECK(expand_key(pk, s).key.coeffs != pk.h.coeffs);
  }
}

TEST_CASE("expand_key is deterministic") {
  const auto params = preset_toy17();
  Rng rng(29);
  const auto [sk, pk] = keygen(params, rng);
  const auto s = sample_expander(params, ExpanderRole::kDirect, rng);
  CHECK(expand_key(pk, s) == expand_key(pk, s));
}

TEST_CASE("verify_expansion accepts honest triples and rejects others") {
  const auto params = preset_toy17();
  Rng rng(30);
  const auto [sk, pk] = keygen(params, rng);
  const auto s = sample_expander(params, ExpanderRole::kDirect, rng);
  auto expanded = expand_key(pk, s);
  CHECK(verify_expansion(pk.h, s, expanded, params));

  auto perturbed = expanded;
  perturbed.key.coeffs[3] =
      centered_mod(perturbed.key.coeffs[3] + 1, params.q);
  CHECK_FALSE(verify_expansion(pk.h, s, perturbed, params));

  for (int t = 0; t < 100; ++t) {
    const auto other = sample_expander(params, ExpanderRole::kDirect, rng);
    if (other.e.coeffs == s.e.coeffs) continue;
    CHECK_FALSE(verify_expansion(pk.h, other, expanded, params));
  }
}

TEST_CASE("strict mode returns an invertible expander") {
  const auto params = preset_toy17();
  Rng rng(31);
  const auto s =
      sample_expander(params, ExpanderRole::kDirect, rng, /*strict=*/true);
  CHECK(invert_mod_q(s.e, params.q).has_value());
}
