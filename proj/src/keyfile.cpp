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

#include "ntruexp/keyfile.hpp"

#include <cstring>
#include <fstream>
#include <stdexcept>

#include "ntruexp/certificate.hpp"
#include "ntruexp/encoding.hpp"

namespace ntruexp {
namespace {

constexpr char kKeyMagic[4] = {'N', 'T', 'R', 'K'};
constexpr char kCtMagic[4] = {'N', 'T', 'R', 'E'};

void put_u32_le(std::vector<uint8_t>& out, uint32_t v) {
  for (int i = 0; i < 4; ++i) out.push_back(static_cast<uint8_t>(v >> (8 * i)));
}

uint32_t get_u32_le(const uint8_t* p) {
  return static_cast<uint32_t>(p[0]) | static_cast<uint32_t>(p[1]) << 8 |
         static_cast<uint32_t>(p[2]) << 16 | static_cast<uint32_t>(p[3]) << 24;
}

std::vector<uint8_t> key_header(uint8_t params_id, KeyKind kind) {
  std::vector<uint8_t> out(kKeyMagic, kKeyMagic + 4);
  out.push_back(kKeyFileVersion);
  out.push_back(params_id);
  out.push_back(static_cast<uint8_t>(kind));
  return out;
}

void append_crc(std::vector<uint8_t>& out) {
  put_u32_le(out, crc32(out));
}

}  // namespace

std::vector<uint8_t> serialize_private_key(const PrivateKey& sk,
                                           const NtruParams& params) {
  auto out = key_header(params.params_id, KeyKind::kPrivate);
  append_ring_u16(out, sk.f, params.q);
  append_ring_u16(out, sk.f_p, params.p);
  append_crc(out);
  return out;
}

std::vector<uint8_t> serialize_public_key(const PublicKey& pk) {
  auto out = key_header(pk.params.params_id, KeyKind::kPublic);
  append_ring_u16(out, pk.h, pk.params.q);
  append_crc(out);
  return out;
}

std::vector<uint8_t> serialize_expanded_key(const ExpandedPublicKey& key,
                                            const NtruParams& params) {
  auto out = key_header(params.params_id, KeyKind::kExpanded);
  out.push_back(static_cast<uint8_t>(key.depth));
  append_ring_u16(out, key.key, params.q);
  append_crc(out);
  return out;
}

std::vector<uint8_t> serialize_expander_secret(const ExpanderSecret& secret,
                                               const NtruParams& params) {
  auto out = key_header(params.params_id, KeyKind::kExpanderSecret);
  append_ring_u16(out, secret.e, params.q);
  append_crc(out);
  return out;
}

std::optional<KeyFileContents> parse_key_file(std::span<const uint8_t> bytes) {
  if (bytes.size() < 7 + 4) return std::nullopt;
  if (std::memcmp(bytes.data(), kKeyMagic, 4) != 0) return std::nullopt;
  if (bytes[4] != kKeyFileVersion) return std::nullopt;
  const uint32_t stored_crc = get_u32_le(bytes.data() + bytes.size() - 4);
  if (crc32(bytes.first(bytes.size() - 4)) != stored_crc) return std::nullopt;

  const auto params = preset_by_id(bytes[5]);
  if (!params) return std::nullopt;
  const size_t n = static_cast<size_t>(params->n);
  const uint8_t kind_byte = bytes[6];
  auto payload = bytes.subspan(7, bytes.size() - 7 - 4);

  KeyFileContents out;
  out.params = *params;
  switch (kind_byte) {
    case 0: {
      if (payload.size() != 4 * n) return std::nullopt;
      auto f = read_ring_u16(payload.first(2 * n), n, params->q);
      auto f_p = read_ring_u16(payload.subspan(2 * n), n, params->p);
      if (!f || !f_p) return std::nullopt;
      f->modulus = 0;  // f is a small unreduced element
      out.kind = KeyKind::kPrivate;
      out.private_key = PrivateKey{std::move(*f), std::move(*f_p)};
      return out;
    }
    case 1: {
      if (payload.size() != 2 * n) return std::nullopt;
      auto h = read_ring_u16(payload, n, params->q);
      if (!h) return std::nullopt;
      out.kind = KeyKind::kPublic;
      out.public_key = PublicKey{std::move(*h), *params};
      return out;
    }
    case 2: {
      if (payload.size() != 1 + 2 * n) return std::nullopt;
      const uint8_t depth = payload[0];
      if (depth < 1 || depth > 2) return std::nullopt;
      auto key = read_ring_u16(payload.subspan(1), n, params->q);
      if (!key) return std::nullopt;
      out.kind = KeyKind::kExpanded;
      out.expanded = ExpandedPublicKey{std::move(*key), depth};
      return out;
    }
    case 3: {
      if (payload.size() != 2 * n) return std::nullopt;
      auto e = read_ring_u16(payload, n, params->q);
      if (!e) return std::nullopt;
      e->modulus = 0;
      out.kind = KeyKind::kExpanderSecret;
      out.expander = ExpanderSecret{std::move(*e), ExpanderRole::kDirect};
      return out;
    }
    default:
      return std::nullopt;
  }
}

std::vector<uint8_t> serialize_ciphertext(
    std::span<const CiphertextBlock> blocks, const NtruParams& params) {
  std::vector<uint8_t> out(kCtMagic, kCtMagic + 4);
  out.push_back(kKeyFileVersion);
  out.push_back(params.params_id);
  put_u32_le(out, static_cast<uint32_t>(blocks.size()));
  for (const auto& blk : blocks) {
    append_ring_u16(out, blk.c, params.q);
  }
  append_crc(out);
  return out;
}

std::optional<std::pair<NtruParams, std::vector<CiphertextBlock>>>
parse_ciphertext(std::span<const uint8_t> bytes) {
  if (bytes.size() < 10 + 4) return std::nullopt;
  if (std::memcmp(bytes.data(), kCtMagic, 4) != 0) return std::nullopt;
  if (bytes[4] != kKeyFileVersion) return std::nullopt;
  const uint32_t stored_crc = get_u32_le(bytes.data() + bytes.size() - 4);
  if (crc32(bytes.first(bytes.size() - 4)) != stored_crc) return std::nullopt;

  const auto params = preset_by_id(bytes[5]);
  if (!params) return std::nullopt;
  const size_t n = static_cast<size_t>(params->n);
  const uint32_t count = get_u32_le(bytes.data() + 6);
  if (bytes.size() != 10 + static_cast<size_t>(count) * 2 * n + 4) {
    return std::nullopt;
  }
  std::vector<CiphertextBlock> blocks;
  blocks.reserve(count);
  for (uint32_t i = 0; i < count; ++i) {
    auto c = read_ring_u16(bytes.subspan(10 + i * 2 * n), n, params->q);
    if (!c) return std::nullopt;
    blocks.push_back(CiphertextBlock{std::move(*c)});
  }
  return std::make_pair(*params, std::move(blocks));
}

std::vector<uint8_t> read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open file: " + path);
  std::vector<uint8_t> bytes((std::istreambuf_iterator<char>(in)),
                             std::istreambuf_iterator<char>());
  if (in.bad()) throw std::runtime_error("read failed: " + path);
  return bytes;
}

void write_file(const std::string& path, std::span<const uint8_t> bytes) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw std::runtime_error("cannot create file: " + path);
  out.write(reinterpret_cast<const char*>(bytes.data()),
            static_cast<std::streamsize>(bytes.size()));
  if (!out) throw std::runtime_error("write failed: " + path);
}

}  // namespace ntruexp
