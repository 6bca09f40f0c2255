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

#include <doctest.h>

#include "ntruexp/certificate.hpp"
#include "ntruexp/encoding.hpp"

using namespace ntruexp;

namespace {

PseudonymCertificate make_cert(const NtruParams& params, Rng& rng,
                               const ExpandedPublicKey& key) {
  PseudonymCertificate cert;
  rng.fill_bytes(cert.pseudonym_id);
  cert.public_key = key;
  cert.permissions = {0x01, 0x42, 0x99};
  cert.validity_start = 1700000000;
  cert.validity_end = 1700604800;
  cert.params_id = params.params_id;
  return cert;
}

}  // namespace

TEST_CASE("certificate wire format roundtrips and is bit-exact up front") {
  const auto params = preset_toy17();
  Rng rng(50);
  const auto [sk, pk] = keygen(params, rng);
  const auto key =
      expand_key(pk, sample_expander(params, ExpanderRole::kDirect, rng));
  const auto cert = make_cert(params, rng, key);

  const auto bytes = serialize_certificate(cert, params);
  CHECK(bytes[0] == 'N');
  CHECK(bytes[1] == 'T');
  CHECK(bytes[2] == 'R');
  CHECK(bytes[3] == 'C');
  CHECK(bytes[4] == kCertVersion);
  CHECK(bytes[5] == params.params_id);
  // header(40) + permissions(3) + depth(1) + 17 u16 coefficients
  CHECK(bytes.size() == 40 + 3 + 1 + 2 * 17);

  const auto back = parse_certificate(bytes);
  REQUIRE(back.has_value());
  CHECK(*back == cert);
}

TEST_CASE("parse rejects corruption") {
  const auto params = preset_toy17();
  Rng rng(51);
  const auto [sk, pk] = keygen(params, rng);
  const auto cert = make_cert(params, rng, as_expanded(pk));
  auto bytes = serialize_certificate(cert, params);

  auto bad = bytes;
  bad[0] = 'X';
  CHECK_FALSE(parse_certificate(bad).has_value());

  bad = bytes;
  bad[5] = 77;  // unknown preset
  CHECK_FALSE(parse_certificate(bad).has_value());

  bad = bytes;
  bad.pop_back();
  CHECK_FALSE(parse_certificate(bad).has_value());

  // residue >= q
  bad = bytes;
  bad[bad.size() - 1] = 0xFF;
  bad[bad.size() - 2] = 0xFF;
  CHECK_FALSE(parse_certificate(bad).has_value());
}

TEST_CASE("empty validity window is rejected both ways") {
  const auto params = preset_toy17();
  Rng rng(52);
  const auto [sk, pk] = keygen(params, rng);
  auto cert = make_cert(params, rng, as_expanded(pk));
  cert.validity_end = cert.validity_start;
  CHECK_THROWS_AS(serialize_certificate(cert, params), std::invalid_argument);
}

TEST_CASE("block count follows the framing arithmetic") {
  const auto params = preset_ntru509();
  Rng rng(53);
  const auto [sk, pk] = keygen(params, rng);
  auto cert = make_cert(params, rng, as_expanded(pk));
  cert.permissions.assign(137, 0xAB);
  const auto bytes = serialize_certificate(cert, params);
  const auto blocks = encrypt_certificate(cert, as_expanded(pk), params, rng);
  CHECK(blocks.size() == block_count_for(bytes.size(), 509));
}

TEST_CASE("same certificate encrypts differently each time") {
  const auto params = preset_toy17();
  Rng rng(54);
  const auto [sk, pk] = keygen(params, rng);
  const auto cert = make_cert(params, rng, as_expanded(pk));
  const auto a = encrypt_certificate(cert, as_expanded(pk), params, rng);
  const auto b = encrypt_certificate(cert, as_expanded(pk), params, rng);
  CHECK(a != b);
}

TEST_CASE("certificate roundtrips through encryption at both depths") {
  const auto params = preset_toy17();
  Rng rng(55);
  const auto [sk, pk] = keygen(params, rng);
  for (int depth = 1; depth <= 2; ++depth) {
    ExpandedPublicKey key = as_expanded(pk);
    for (int i = 0; i < depth; ++i) {
      key = expand_key(
          key, sample_expander(params, ExpanderRole::kDirect, rng), params);
    }
    const auto cert = make_cert(params, rng, key);
    const auto blocks = encrypt_certificate(cert, key, params, rng);
    const auto back = decrypt_certificate(blocks, sk, params);
    REQUIRE(back.has_value());
    CHECK(*back == cert);
  }
}

TEST_CASE("wrong private key fails the integrity check") {
  const auto params = preset_toy17();
  Rng rng(56);
  const auto [sk, pk] = keygen(params, rng);
  const auto cert = make_cert(params, rng, as_expanded(pk));
  int leaked = 0;
  for (int t = 0; t < 100; ++t) {
    const auto blocks = encrypt_certificate(cert, as_expanded(pk), params, rng);
    const auto [wrong_sk, wrong_pk] = keygen(params, rng);
    if (decrypt_certificate(blocks, wrong_sk, params).has_value()) ++leaked;
  }
  CHECK(leaked == 0);
}
