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

#include "ntruexp/encoding.hpp"

#include <array>
#include <limits>
#include <stdexcept>

namespace ntruexp {
namespace {

std::array<uint32_t, 256> make_crc_table() {
  std::array<uint32_t, 256> table{};
  for (uint32_t i = 0; i < 256; ++i) {
    uint32_t c = i;
    for (int k = 0; k < 8; ++k) {
      c = (c & 1) ? 0xEDB88320u ^ (c >> 1) : c >> 1;
    }
    table[i] = c;
  }
  return table;
}

void put_u32_le(std::vector<uint8_t>& out, uint32_t v) {
  for (int i = 0; i < 4; ++i) out.push_back(static_cast<uint8_t>(v >> (8 * i)));
}

uint32_t get_u32_le(const uint8_t* p) {
  return static_cast<uint32_t>(p[0]) | static_cast<uint32_t>(p[1]) << 8 |
         static_cast<uint32_t>(p[2]) << 16 | static_cast<uint32_t>(p[3]) << 24;
}

// trit value of a coefficient, or -1 when out of range
int trit_of(int32_t c) {
  switch (c) {
    case 0: return 0;
    case 1: return 1;
    case -1: return 2;
    default: return -1;
  }
}

}  // namespace

uint32_t crc32(std::span<const uint8_t> data) {
  static const auto table = make_crc_table();
  uint32_t c = 0xFFFFFFFFu;
  for (uint8_t b : data) {
    c = table[(c ^ b) & 0xFF] ^ (c >> 8);
  }
  return c ^ 0xFFFFFFFFu;
}

size_t block_count_for(size_t data_len, size_t n) {
  const size_t trits = (data_len + kFrameOverhead) * kTritsPerByte;
  return (trits + n - 1) / n;
}

EncodedMessage encode_bytes(std::span<const uint8_t> data,
                            const NtruParams& params) {
  if (data.size() >= std::numeric_limits<uint32_t>::max()) {
    throw std::invalid_argument("message too large to frame");
  }
  std::vector<uint8_t> frame;
  frame.reserve(data.size() + kFrameOverhead);
  put_u32_le(frame, static_cast<uint32_t>(data.size()));
  frame.insert(frame.end(), data.begin(), data.end());
  const uint32_t sum = crc32(data);
  put_u32_le(frame, sum);

  const size_t n = static_cast<size_t>(params.n);
  EncodedMessage out;
  out.total_byte_length = static_cast<uint32_t>(data.size());
  out.checksum = sum;
  out.blocks.assign(block_count_for(data.size(), n), RingElement(n, params.p));

  size_t pos = 0;  // global trit index
  for (uint8_t byte : frame) {
    int32_t v = byte;
    // big-endian trit order: most significant digit first
    for (int t = kTritsPerByte - 1; t >= 0; --t) {
      static constexpr int32_t pow3[6] = {1, 3, 9, 27, 81, 243};
      const int32_t digit = v / pow3[t];
      v -= digit * pow3[t];
      const int32_t coeff = digit == 2 ? -1 : digit;
      out.blocks[pos / n].coeffs[pos % n] = coeff;
      ++pos;
    }
  }
  return out;
}

std::optional<std::vector<uint8_t>> decode_bytes(const EncodedMessage& msg,
                                                 const NtruParams& params) {
  const size_t n = static_cast<size_t>(params.n);
  for (const auto& blk : msg.blocks) {
    if (blk.size() != n) return std::nullopt;
  }
  const size_t total_trits = msg.blocks.size() * n;
  if (total_trits < kFrameOverhead * kTritsPerByte) return std::nullopt;

  auto read_byte = [&](size_t byte_index) -> int {
    int32_t v = 0;
    for (int t = 0; t < kTritsPerByte; ++t) {
      const size_t pos = byte_index * kTritsPerByte + t;
      const int trit = trit_of(msg.blocks[pos / n].coeffs[pos % n]);
      if (trit < 0) return -1;
      v = v * 3 + trit;
    }
    return v > 255 ? -1 : v;
  };

  uint8_t len_bytes[4];
  for (size_t i = 0; i < 4; ++i) {
    const int b = read_byte(i);
    if (b < 0) return std::nullopt;
    len_bytes[i] = static_cast<uint8_t>(b);
  }
  const uint32_t data_len = get_u32_le(len_bytes);
  const size_t frame_bytes = static_cast<size_t>(data_len) + kFrameOverhead;
  if (frame_bytes * kTritsPerByte > total_trits) return std::nullopt;
  if (msg.blocks.size() != block_count_for(data_len, n)) return std::nullopt;

  std::vector<uint8_t> data(data_len);
  for (size_t i = 0; i < data_len; ++i) {
    const int b = read_byte(4 + i);
    if (b < 0) return std::nullopt;
    data[i] = static_cast<uint8_t>(b);
  }
  uint8_t crc_bytes[4];
  for (size_t i = 0; i < 4; ++i) {
    const int b = read_byte(4 + data_len + i);
    if (b < 0) return std::nullopt;
    crc_bytes[i] = static_cast<uint8_t>(b);
  }
  if (get_u32_le(crc_bytes) != crc32(data)) return std::nullopt;

  // padding trits past the frame must all be zero
  for (size_t pos = frame_bytes * kTritsPerByte; pos < total_trits; ++pos) {
    if (msg.blocks[pos / n].coeffs[pos % n] != 0) return std::nullopt;
  }
  return data;
}

}  // namespace ntruexp
