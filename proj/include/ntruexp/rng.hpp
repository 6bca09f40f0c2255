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

#ifndef NTRUEXP_RNG_HPP
#define NTRUEXP_RNG_HPP

#include <cstdint>
#include <random>
#include <span>

namespace ntruexp {

// Deterministic random stream. All sampling goes through below() rather
// than std::uniform_int_distribution, whose output is implementation
// defined; the same seed must produce the same byte stream on every
// platform and compiler.
class Rng {
 public:
  explicit Rng(uint64_t seed) : gen_(seed) {}

  uint64_t next_u64() { return gen_(); }

  // Uniform value in [0, bound), bound > 0, by rejection sampling.
  uint32_t below(uint32_t bound) {
    const uint64_t span = static_cast<uint64_t>(bound);
    const uint64_t limit = UINT64_MAX - UINT64_MAX % span;
    uint64_t v;
    do {
      v = gen_();
    } while (v >= limit);
    return static_cast<uint32_t>(v % span);
  }

  void fill_bytes(std::span<uint8_t> out) {
    size_t i = 0;
    while (i < out.size()) {
      uint64_t v = gen_();
      for (int b = 0; b < 8 && i < out.size(); ++b, ++i) {
        out[i] = static_cast<uint8_t>(v >> (8 * b));
      }
    }
  }

  // Derives an independent substream; used to hand each thread or
  // protocol actor its own stream.
  Rng fork() { return Rng(gen_()); }

 private:
  std::mt19937_64 gen_;
};

}  // namespace ntruexp

#endif  // NTRUEXP_RNG_HPP
