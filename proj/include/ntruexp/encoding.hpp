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
// Byte-level message framing into mod-p ring elements. Frame layout:
// length u32 LE | data | CRC-32 of data, LE. Each frame byte maps to 6
// base-3 trits (big-endian trit order), each trit to a coefficient via
// {0,1,2} -> {0,1,-1}; trits pack into ceil(total/n) blocks, the last one
// zero-padded. The CRC is what turns an NTRU decryption failure into a
// detectable IntegrityFailure.

#ifndef NTRUEXP_ENCODING_HPP
#define NTRUEXP_ENCODING_HPP

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "ntruexp/params.hpp"
#include "ntruexp/ring.hpp"

namespace ntruexp {

// Standard CRC-32 (polynomial 0x04C11DB7 reflected, init all-ones,
// final xor).
uint32_t crc32(std::span<const uint8_t> data);

struct EncodedMessage {
  std::vector<RingElement> blocks;  // mod p, coefficients in {-1,0,1}
  uint32_t total_byte_length = 0;   // raw data bytes, excluding the frame
  uint32_t checksum = 0;
};

inline constexpr int kTritsPerByte = 6;
inline constexpr size_t kFrameOverhead = 8;  // length prefix + CRC

// Blocks needed to carry data_len raw bytes at degree n.
size_t block_count_for(size_t data_len, size_t n);

EncodedMessage encode_bytes(std::span<const uint8_t> data,
                            const NtruParams& params);

// Inverse mapping, driven entirely by the in-band frame. nullopt on any
// integrity violation: out-of-range coefficient, invalid trit group,
// truncated or oversized block list, nonzero padding, CRC mismatch.
std::optional<std::vector<uint8_t>> decode_bytes(const EncodedMessage& msg,
                                                 const NtruParams& params);

}  // namespace ntruexp

#endif  // NTRUEXP_ENCODING_HPP
