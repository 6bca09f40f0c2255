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
// Pseudonym certificates whose public-key field carries an expanded key,
// with a bit-exact wire format and multi-block encryption under the
// expanded key.

#ifndef NTRUEXP_CERTIFICATE_HPP
#define NTRUEXP_CERTIFICATE_HPP

#include <array>
#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "ntruexp/expansion.hpp"
#include "ntruexp/ntru.hpp"
#include "ntruexp/params.hpp"
#include "ntruexp/rng.hpp"

namespace ntruexp {

inline constexpr uint8_t kCertVersion = 1;

struct PseudonymCertificate {
  uint8_t version = kCertVersion;
  std::array<uint8_t, 16> pseudonym_id{};
  ExpandedPublicKey public_key;
  std::vector<uint8_t> permissions;
  uint64_t validity_start = 0;  // seconds since epoch
  uint64_t validity_end = 0;
  uint8_t params_id = 0;

  friend bool operator==(const PseudonymCertificate&,
                         const PseudonymCertificate&) = default;
};

// Wire format: "NTRC" | version u8 | params_id u8 | pseudonym_id 16B |
// validity_start u64 LE | validity_end u64 LE | permissions_len u16 LE |
// permissions | pubkey_depth u8 | n x u16 LE coefficients as non-negative
// residues mod q.
std::vector<uint8_t> serialize_certificate(const PseudonymCertificate& cert,
                                           const NtruParams& params);

// Full validation: magic, known params_id, exact length, residues < q,
// validity_start < validity_end, depth <= 2.
std::optional<PseudonymCertificate> parse_certificate(
    std::span<const uint8_t> bytes);

// serialize -> encode_bytes -> per-block encrypt with a fresh blind each.
std::vector<CiphertextBlock> encrypt_certificate(
    const PseudonymCertificate& cert, const ExpandedPublicKey& target_key,
    const NtruParams& params, Rng& rng);

// per-block decrypt -> decode -> parse; nullopt on any integrity failure.
std::optional<PseudonymCertificate> decrypt_certificate(
    std::span<const CiphertextBlock> blocks, const PrivateKey& sk,
    const NtruParams& params);

// Shared helpers for fixed-width ring serialization (also used by the key
// file format and protocol payloads).
void append_ring_u16(std::vector<uint8_t>& out, const RingElement& e,
                     int32_t modulus);
std::optional<RingElement> read_ring_u16(std::span<const uint8_t> bytes,
                                         size_t n, int32_t modulus);

}  // namespace ntruexp

#endif  // NTRUEXP_CERTIFICATE_HPP
