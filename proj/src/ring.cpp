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

#include "ntruexp/ring.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace ntruexp {
namespace {

void check_same_length(const RingElement& a, const RingElement& b) {
  if (a.size() != b.size() || a.size() == 0) {
    throw std::invalid_argument("ring elements must have equal nonzero length");
  }
}

size_t nonzero_count(const RingElement& a) {
  size_t c = 0;
  for (int32_t v : a.coeffs) c += (v != 0);
  return c;
}

// Convolution into 64-bit accumulators, iterating the sparser operand.
std::vector<int64_t> conv_acc(const RingElement& a, const RingElement& b) {
  const size_t n = a.size();
  const RingElement& s = nonzero_count(a) <= nonzero_count(b) ? a : b;
  const RingElement& d = (&s == &a) ? b : a;
  std::vector<int64_t> acc(n, 0);
  for (size_t i = 0; i < n; ++i) {
    const int64_t si = s.coeffs[i];
    if (si == 0) continue;
    size_t k = i;
    for (size_t j = 0; j < n; ++j) {
      acc[k] += si * d.coeffs[j];
      if (++k == n) k = 0;
    }
  }
  return acc;
}

bool is_power_of_two(int32_t q) { return q > 0 && (q & (q - 1)) == 0; }

// --- dense polynomial helpers over Z_m (non-negative residues), used only
// --- by the extended Euclidean inversion below.

int deg(const std::vector<int32_t>& a) {
  for (int i = static_cast<int>(a.size()) - 1; i >= 0; --i) {
    if (a[i] != 0) return i;
  }
  return -1;
}

int32_t inv_mod(int32_t a, int32_t m) {
  // extended gcd; m prime, a != 0 mod m
  int32_t t = 0, new_t = 1, r = m, new_r = a % m;
  while (new_r != 0) {
    int32_t quo = r / new_r;
    std::swap(t -= quo * new_t, new_t);
    std::swap(r -= quo * new_r, new_r);
  }
  if (r != 1) throw std::logic_error("inv_mod: not invertible");
  return ((t % m) + m) % m;
}

}  // namespace

bool RingElement::is_zero() const {
  return std::all_of(coeffs.begin(), coeffs.end(),
                     [](int32_t v) { return v == 0; });
}

RingElement ring_one(size_t n, int32_t modulus) {
  RingElement e(n, modulus);
  e.coeffs[0] = 1;
  return e;
}

RingElement ring_monomial(size_t n, size_t degree, int32_t modulus) {
  RingElement e(n, modulus);
  e.coeffs[degree % n] = 1;
  return e;
}

int32_t centered_mod(int64_t v, int32_t m) {
  if (m < 2) throw std::invalid_argument("modulus must be >= 2");
  int64_t r = v % m;
  if (r < 0) r += m;
  if (2 * r > m) r -= m;
  return static_cast<int32_t>(r);
}

RingElement reduce(const RingElement& a, int32_t m) {
  RingElement out(a.size(), m);
  for (size_t i = 0; i < a.size(); ++i) {
    out.coeffs[i] = centered_mod(a.coeffs[i], m);
  }
  return out;
}

RingElement center_lift(const RingElement& a, int32_t m) {
  RingElement out = reduce(a, m);
  out.modulus = 0;
  return out;
}

RingElement ring_mul(const RingElement& a, const RingElement& b, int32_t m) {
  check_same_length(a, b);
  const auto acc = conv_acc(a, b);
  RingElement out(a.size(), m);
  for (size_t k = 0; k < acc.size(); ++k) {
    out.coeffs[k] = centered_mod(acc[k], m);
  }
  return out;
}

RingElement ring_mul_parallel(const RingElement& a, const RingElement& b,
                              int32_t m) {
  check_same_length(a, b);
  const int n = static_cast<int>(a.size());
  RingElement out(a.size(), m);
#pragma omp parallel for schedule(static)
  for (int k = 0; k < n; ++k) {
    int64_t acc = 0;
    // c[k] = sum_i a[i] * b[(k - i) mod n]
    int j = k;
    for (int i = 0; i < n; ++i) {
      acc += static_cast<int64_t>(a.coeffs[i]) * b.coeffs[j];
      if (--j < 0) j = n - 1;
    }
    out.coeffs[k] = centered_mod(acc, m);
  }
  return out;
}

RingElement ring_add(const RingElement& a, const RingElement& b, int32_t m) {
  check_same_length(a, b);
  RingElement out(a.size(), m);
  for (size_t i = 0; i < a.size(); ++i) {
    out.coeffs[i] = centered_mod(
        static_cast<int64_t>(a.coeffs[i]) + b.coeffs[i], m);
  }
  return out;
}

RingElement ring_sub(const RingElement& a, const RingElement& b, int32_t m) {
  check_same_length(a, b);
  RingElement out(a.size(), m);
  for (size_t i = 0; i < a.size(); ++i) {
    out.coeffs[i] = centered_mod(
        static_cast<int64_t>(a.coeffs[i]) - b.coeffs[i], m);
  }
  return out;
}

RingElement ring_scale_add(int32_t s, const RingElement& a,
                           const RingElement& b, int32_t m) {
  check_same_length(a, b);
  RingElement out(a.size(), m);
  for (size_t i = 0; i < a.size(); ++i) {
    out.coeffs[i] = centered_mod(
        static_cast<int64_t>(s) * a.coeffs[i] + b.coeffs[i], m);
  }
  return out;
}

std::optional<RingElement> invert_mod_prime(const RingElement& f, int32_t p) {
  const size_t n = f.size();
  if (n == 0) throw std::invalid_argument("empty ring element");

  // r0 = x^n - 1, r1 = f; maintain s with s*f = r (mod x^n - 1).
  std::vector<int32_t> r0(n + 1, 0), r1(n + 1, 0);
  r0[0] = p - 1;
  r0[n] = 1;
  for (size_t i = 0; i < n; ++i) {
    r1[i] = ((f.coeffs[i] % p) + p) % p;
  }
  std::vector<int32_t> s0(2 * n + 1, 0), s1(2 * n + 1, 0);
  s1[0] = 1;

  int d0 = deg(r0), d1 = deg(r1);
  while (d1 >= 0) {
    if (d0 < d1) {
      std::swap(r0, r1);
      std::swap(s0, s1);
      std::swap(d0, d1);
      continue;
    }
    const int shift = d0 - d1;
    const int32_t c =
        static_cast<int32_t>(static_cast<int64_t>(r0[d0]) *
                             inv_mod(r1[d1], p) % p);
    for (int i = 0; i <= d1; ++i) {
      r0[i + shift] = static_cast<int32_t>(
          ((r0[i + shift] - static_cast<int64_t>(c) * r1[i]) % p + p) % p);
    }
    for (size_t i = 0; i + shift < s0.size(); ++i) {
      s0[i + shift] = static_cast<int32_t>(
          ((s0[i + shift] - static_cast<int64_t>(c) * s1[i]) % p + p) % p);
    }
    d0 = deg(r0);
  }
  // gcd is r0 now (r1 vanished after the last swap-free eliminations)
  if (deg(r0) != 0) return std::nullopt;

  const int32_t scale = inv_mod(r0[0], p);
  RingElement out(n, p);
  for (size_t i = 0; i < s0.size(); ++i) {
    if (s0[i] == 0) continue;
    const size_t k = i % n;  // x^n = 1
    out.coeffs[k] = static_cast<int32_t>(
        (out.coeffs[k] + static_cast<int64_t>(s0[i]) * scale) % p);
  }
  for (auto& v : out.coeffs) v = centered_mod(v, p);
  return out;
}

std::optional<RingElement> invert_mod_prime_power(const RingElement& f,
                                                  int32_t q) {
  if (!is_power_of_two(q) || q < 4) {
    throw std::invalid_argument("invert_mod_prime_power expects q = 2^k >= 4");
  }
  auto base = invert_mod_prime(f, 2);
  if (!base) return std::nullopt;

  RingElement inv = *base;
  // coefficients of the base inverse are in {0,1} already
  int64_t mod = 2;
  while (mod < q) {
    const int64_t next = std::min<int64_t>(mod * mod, q);
    const int32_t m = static_cast<int32_t>(next);
    RingElement t = ring_mul(f, inv, m);
    RingElement correction(f.size(), m);
    correction.coeffs[0] = 2;
    correction = ring_sub(correction, t, m);
    inv = ring_mul(inv, correction, m);
    mod = next;
  }
  inv = reduce(inv, q);
  if (ring_mul(f, inv, q) != ring_one(f.size(), q)) return std::nullopt;
  return inv;
}

std::optional<RingElement> invert_mod_q(const RingElement& f, int32_t q) {
  return is_power_of_two(q) ? invert_mod_prime_power(f, q)
                            : invert_mod_prime(f, q);
}

RingElement sample_ternary(size_t n, int32_t weight_plus, int32_t weight_minus,
                           Rng& rng) {
  if (weight_plus < 0 || weight_minus < 0 ||
      static_cast<size_t>(weight_plus) + static_cast<size_t>(weight_minus) >
          n) {
    throw std::invalid_argument("ternary weights exceed ring degree");
  }
  std::vector<uint32_t> idx(n);
  std::iota(idx.begin(), idx.end(), 0);
  RingElement out(n, 0);
  const size_t w = static_cast<size_t>(weight_plus) + weight_minus;
  for (size_t i = 0; i < w; ++i) {
    const size_t j = i + rng.below(static_cast<uint32_t>(n - i));
    std::swap(idx[i], idx[j]);
    out.coeffs[idx[i]] = (i < static_cast<size_t>(weight_plus)) ? 1 : -1;
  }
  return out;
}

RingElement sample_uniform_ternary(size_t n, Rng& rng) {
  RingElement out(n, 0);
  for (auto& c : out.coeffs) {
    c = static_cast<int32_t>(rng.below(3)) - 1;
  }
  return out;
}

}  // namespace ntruexp
