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
// Key and ciphertext file formats. Key files: "NTRK" | version u8 |
// params_id u8 | key_kind u8 | payload | CRC-32 of all preceding bytes,
// LE. Private payload: f as n x u16 residues mod q then F_p as n x u16
// residues mod p. Public payload: n x u16 residues mod q. Expanded
// payload: depth u8 then n x u16 residues mod q. CRC or magic mismatch is
// rejected before any cryptographic processing.

#ifndef NTRUEXP_KEYFILE_HPP
#define NTRUEXP_KEYFILE_HPP

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "ntruexp/expansion.hpp"
#include "ntruexp/ntru.hpp"
#include "ntruexp/params.hpp"

namespace ntruexp {

enum class KeyKind : uint8_t {
  kPrivate = 0,
  kPublic = 1,
  kExpanded = 2,
  kExpanderSecret = 3,  // written only via an explicit keep-secret path
};

inline constexpr uint8_t kKeyFileVersion = 1;

std::vector<uint8_t> serialize_private_key(const PrivateKey& sk,
                                           const NtruParams& params);
std::vector<uint8_t> serialize_public_key(const PublicKey& pk);
std::vector<uint8_t> serialize_expanded_key(const ExpandedPublicKey& key,
                                            const NtruParams& params);
std::vector<uint8_t> serialize_expander_secret(const ExpanderSecret& secret,
                                               const NtruParams& params);

struct KeyFileContents {
  KeyKind kind;
  NtruParams params;
  std::optional<PrivateKey> private_key;
  std::optional<PublicKey> public_key;          // kind kPublic
  std::optional<ExpandedPublicKey> expanded;    // kind kExpanded
  std::optional<ExpanderSecret> expander;       // kind kExpanderSecret
};

// Validates magic, version, params_id and CRC; nullopt on any mismatch.
std::optional<KeyFileContents> parse_key_file(std::span<const uint8_t> bytes);

// Ciphertext files: "NTRE" | version u8 | params_id u8 | block_count u32
// LE | blocks as n x u16 residues mod q each | CRC-32 trailer.
std::vector<uint8_t> serialize_ciphertext(
    std::span<const CiphertextBlock> blocks, const NtruParams& params);
std::optional<std::pair<NtruParams, std::vector<CiphertextBlock>>>
parse_ciphertext(std::span<const uint8_t> bytes);

// Whole-file helpers; throw std::runtime_error on I/O failure.
std::vector<uint8_t> read_file(const std::string& path);
void write_file(const std::string& path, std::span<const uint8_t> bytes);

}  // namespace ntruexp

#endif  // NTRUEXP_KEYFILE_HPP
