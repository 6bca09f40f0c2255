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

#include "ntruexp/certificate.hpp"

#include <algorithm>
#include <cstring>
#include <stdexcept>

#include "ntruexp/encoding.hpp"

namespace ntruexp {
namespace {

constexpr char kMagic[4] = {'N', 'T', 'R', 'C'};

void put_u16_le(std::vector<uint8_t>& out, uint16_t v) {
  out.push_back(static_cast<uint8_t>(v));
  out.push_back(static_cast<uint8_t>(v >> 8));
}

void put_u64_le(std::vector<uint8_t>& out, uint64_t v) {
  for (int i = 0; i < 8; ++i) out.push_back(static_cast<uint8_t>(v >> (8 * i)));
}

uint16_t get_u16_le(const uint8_t* p) {
  return static_cast<uint16_t>(p[0] | p[1] << 8);
}

uint64_t get_u64_le(const uint8_t* p) {
  uint64_t v = 0;
  for (int i = 7; i >= 0; --i) v = v << 8 | p[i];
  return v;
}

}  // namespace

void append_ring_u16(std::vector<uint8_t>& out, const RingElement& e,
                     int32_t modulus) {
  for (int32_t c : e.coeffs) {
    const int32_t r = ((c % modulus) + modulus) % modulus;
    put_u16_le(out, static_cast<uint16_t>(r));
  }
}

std::optional<RingElement> read_ring_u16(std::span<const uint8_t> bytes,
                                         size_t n, int32_t modulus) {
  if (bytes.size() < 2 * n) return std::nullopt;
  RingElement e(n, modulus);
  for (size_t i = 0; i < n; ++i) {
    const uint16_t r = get_u16_le(bytes.data() + 2 * i);
    if (r >= modulus) return std::nullopt;
    e.coeffs[i] = centered_mod(r, modulus);
  }
  return e;
}

std::vector<uint8_t> serialize_certificate(const PseudonymCertificate& cert,
                                           const NtruParams& params) {
  if (cert.validity_start >= cert.validity_end) {
    throw std::invalid_argument("certificate validity window is empty");
  }
  if (cert.public_key.key.size() != static_cast<size_t>(params.n)) {
    throw std::invalid_argument("certificate key length mismatch");
  }
  if (cert.permissions.size() > 0xFFFF) {
    throw std::invalid_argument("permissions too long");
  }
  std::vector<uint8_t> out;
  out.insert(out.end(), kMagic, kMagic + 4);
  out.push_back(cert.version);
  out.push_back(cert.params_id);
  out.insert(out.end(), cert.pseudonym_id.begin(), cert.pseudonym_id.end());
  put_u64_le(out, cert.validity_start);
  put_u64_le(out, cert.validity_end);
  put_u16_le(out, static_cast<uint16_t>(cert.permissions.size()));
  out.insert(out.end(), cert.permissions.begin(), cert.permissions.end());
  out.push_back(static_cast<uint8_t>(cert.public_key.depth));
  append_ring_u16(out, cert.public_key.key, params.q);
  return out;
}

std::optional<PseudonymCertificate> parse_certificate(
    std::span<const uint8_t> bytes) {
  // fixed header through permissions_len
  constexpr size_t kHeader = 4 + 1 + 1 + 16 + 8 + 8 + 2;
  if (bytes.size() < kHeader) return std::nullopt;
  if (std::memcmp(bytes.data(), kMagic, 4) != 0) return std::nullopt;

  PseudonymCertificate cert;
  cert.version = bytes[4];
  cert.params_id = bytes[5];
  const auto params = preset_by_id(cert.params_id);
  if (!params) return std::nullopt;
  std::copy_n(bytes.data() + 6, 16, cert.pseudonym_id.begin());
  cert.validity_start = get_u64_le(bytes.data() + 22);
  cert.validity_end = get_u64_le(bytes.data() + 30);
  if (cert.validity_start >= cert.validity_end) return std::nullopt;
  const uint16_t perm_len = get_u16_le(bytes.data() + 38);

  const size_t n = static_cast<size_t>(params->n);
  const size_t expect = kHeader + perm_len + 1 + 2 * n;
  if (bytes.size() != expect) return std::nullopt;
  cert.permissions.assign(bytes.begin() + kHeader,
                          bytes.begin() + kHeader + perm_len);
  const uint8_t depth = bytes[kHeader + perm_len];
  if (depth > 2) return std::nullopt;
  cert.public_key.depth = depth;
  auto key = read_ring_u16(bytes.subspan(kHeader + perm_len + 1), n, params->q);
  if (!key) return std::nullopt;
  cert.public_key.key = std::move(*key);
  return cert;
}

std::vector<CiphertextBlock> encrypt_certificate(
    const PseudonymCertificate& cert, const ExpandedPublicKey& target_key,
    const NtruParams& params, Rng& rng) {
  const auto bytes = serialize_certificate(cert, params);
  const EncodedMessage enc = encode_bytes(bytes, params);
  std::vector<CiphertextBlock> out;
  out.reserve(enc.blocks.size());
  for (const auto& block : enc.blocks) {
    out.push_back(encrypt(target_key.key, block, params, rng));
  }
  return out;
}

std::optional<PseudonymCertificate> decrypt_certificate(
    std::span<const CiphertextBlock> blocks, const PrivateKey& sk,
    const NtruParams& params) {
  EncodedMessage enc;
  enc.blocks.reserve(blocks.size());
  for (const auto& ct : blocks) {
    enc.blocks.push_back(decrypt(sk, ct, params));
  }
  const auto bytes = decode_bytes(enc, params);
  if (!bytes) return std::nullopt;
  return parse_certificate(*bytes);
}

}  // namespace ntruexp
