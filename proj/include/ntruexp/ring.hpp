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
// Exact arithmetic in Z[x]/(x^n - 1) and its reductions mod p and mod q.
// All reduced coefficients use the centered representative range
// (-m/2, m/2], half-open on the left.

#ifndef NTRUEXP_RING_HPP
#define NTRUEXP_RING_HPP

#include <cstdint>
#include <optional>
#include <vector>

#include "ntruexp/rng.hpp"

namespace ntruexp {

// Element of Z[x]/(x^n - 1). modulus == 0 means the coefficients are
// unreduced integers; modulus == m means every coefficient lies in
// (-m/2, m/2].
struct RingElement {
  std::vector<int32_t> coeffs;
  int32_t modulus = 0;

  RingElement() = default;
  explicit RingElement(size_t n, int32_t mod = 0)
      : coeffs(n, 0), modulus(mod) {}

  size_t size() const { return coeffs.size(); }
  bool is_zero() const;

  friend bool operator==(const RingElement&, const RingElement&) = default;
};

RingElement ring_one(size_t n, int32_t modulus);
RingElement ring_monomial(size_t n, size_t degree, int32_t modulus);

// Centered representative of v mod m, in (-m/2, m/2].
int32_t centered_mod(int64_t v, int32_t m);

// Coefficient-wise centered reduction mod m.
RingElement reduce(const RingElement& a, int32_t m);

// Maps each coefficient to its centered representative and clears the
// modulus tag; the step between the mod-q and mod-p decryption stages.
RingElement center_lift(const RingElement& a, int32_t m);

// Cyclic convolution c[k] = sum_{i+j = k mod n} a[i] b[j], centered mod m.
// Skips zero coefficients of the sparser operand, so multiplying by a
// sparse expander costs O(weight * n).
RingElement ring_mul(const RingElement& a, const RingElement& b, int32_t m);

// OpenMP kernel over the output index; bitwise-identical results to
// ring_mul. Worth it only for dense operands at large n.
RingElement ring_mul_parallel(const RingElement& a, const RingElement& b,
                              int32_t m);

RingElement ring_add(const RingElement& a, const RingElement& b, int32_t m);
RingElement ring_sub(const RingElement& a, const RingElement& b, int32_t m);

// Scales by an integer and adds: centered(s*a + b) mod m.
RingElement ring_scale_add(int32_t s, const RingElement& a,
                           const RingElement& b, int32_t m);

// Inverse in Z_p[x]/(x^n - 1) for prime p, by the extended Euclidean
// algorithm against x^n - 1. nullopt when gcd(f, x^n - 1) is non-constant.
std::optional<RingElement> invert_mod_prime(const RingElement& f, int32_t p);

// Inverse in Z_q[x]/(x^n - 1) for q = 2^k: inverse mod 2 by extended
// Euclid, then Newton lifting F <- F*(2 - f*F) with the working modulus
// squared each round (capped at q).
std::optional<RingElement> invert_mod_prime_power(const RingElement& f,
                                                  int32_t q);

// Dispatch on q: power of two -> lifting, otherwise q is assumed prime.
std::optional<RingElement> invert_mod_q(const RingElement& f, int32_t q);

// Fixed-weight ternary element: exactly weight_plus coefficients +1,
// weight_minus coefficients -1, positions uniform without replacement.
RingElement sample_ternary(size_t n, int32_t weight_plus, int32_t weight_minus,
                           Rng& rng);

// Every coefficient uniform in {-1, 0, 1}; the message distribution.
RingElement sample_uniform_ternary(size_t n, Rng& rng);

}  // namespace ntruexp

#endif  // NTRUEXP_RING_HPP
