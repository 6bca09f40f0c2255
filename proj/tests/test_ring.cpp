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

#include <algorithm>
#include <set>

#include <doctest.h>

#include "ntruexp/ring.hpp"
#include "oracle.hpp"
#include "test_util.hpp"

using namespace ntruexp;
using testutil::ring;

TEST_CASE("multiplication by x rotates coefficients") {
  Rng rng(1);
  const auto b = sample_uniform_ternary(11, rng);
  const auto rotated = ring_mul(ring_monomial(11, 1, 0), b, 97);
  for (size_t i = 0; i < 11; ++i) {
    CHECK(rotated.coeffs[(i + 1) % 11] == b.coeffs[i]);
  }
}

TEST_CASE("multiplication by one is identity") {
  Rng rng(2);
  const auto b = sample_uniform_ternary(16, rng);
  CHECK(ring_mul(ring_one(16, 0), b, 41).coeffs == reduce(b, 41).coeffs);
}

TEST_CASE("fixed ternary product matches schoolbook oracle at N=7 q=41") {
  const auto a = ring({1, 0, -1, 1, 0, 0, -1});
  const auto b = ring({-1, 1, 0, 0, 1, -1, 0});
  CHECK(ring_mul(a, b, 41).coeffs == oracle::mul(a, b, 41).coeffs);
}

TEST_CASE("ring_mul agrees with the oracle on random pairs") {
  Rng rng(3);
  for (size_t n : {7u, 17u, 64u}) {
    for (int t = 0; t < 1000; ++t) {
      const auto a = sample_uniform_ternary(n, rng);
      auto b = RingElement(n, 0);
      for (auto& c : b.coeffs) c = static_cast<int32_t>(rng.below(101)) - 50;
      CHECK(ring_mul(a, b, 41).coeffs == oracle::mul(a, b, 41).coeffs);
    }
  }
}

TEST_CASE("parallel kernel is bitwise identical to the serial one") {
  Rng rng(4);
  for (int t = 0; t < 50; ++t) {
    auto a = RingElement(64, 0);
    auto b = RingElement(64, 0);
    for (auto& c : a.coeffs) c = static_cast<int32_t>(rng.below(2048)) - 1024;
    for (auto& c : b.coeffs) c = static_cast<int32_t>(rng.below(2048)) - 1024;
    CHECK(ring_mul(a, b, 2048) == ring_mul_parallel(a, b, 2048));
  }
}

TEST_CASE("ring_mul rejects length mismatch") {
  CHECK_THROWS_AS(ring_mul(RingElement(4, 0), RingElement(5, 0), 7),
                  std::invalid_argument);
  CHECK_THROWS_AS(ring_add(RingElement(4, 0), RingElement(5, 0), 7),
                  std::invalid_argument);
}

TEST_CASE("algebraic laws on random triples") {
  Rng rng(5);
  const int32_t q = 2048;
  for (int t = 0; t < 100; ++t) {
    const size_t n = 3 + rng.below(62);
    const auto a = sample_uniform_ternary(n, rng);
    const auto b = sample_uniform_ternary(n, rng);
    const auto c = sample_uniform_ternary(n, rng);
    CHECK(ring_mul(a, b, q) == ring_mul(b, a, q));
    CHECK(ring_mul(ring_mul(a, b, q), c, q) ==
          ring_mul(a, ring_mul(b, c, q), q));
    CHECK(ring_mul(a, ring_add(b, c, q), q) ==
          ring_add(ring_mul(a, b, q), ring_mul(a, c, q), q));
  }
}

TEST_CASE("ring_add basics") {
  const auto a = ring({1, 1, 0});
  CHECK(ring_add(a, RingElement(3, 0), 3).coeffs ==
        std::vector<int32_t>{1, 1, 0});
  auto neg = a;
  for (auto& c : neg.coeffs) c = -c;
  CHECK(ring_add(a, neg, 3).is_zero());
  // 2 = -1 centered
  CHECK(ring_add(a, a, 3).coeffs == std::vector<int32_t>{-1, -1, 0});
}

TEST_CASE("center_lift boundary convention") {
  CHECK(centered_mod(2047, 2048) == -1);
  CHECK(centered_mod(1024, 2048) == 1024);  // half-open on the right
  CHECK(centered_mod(1025, 2048) == -1023);
  CHECK(centered_mod(40, 41) == -1);

  auto a = ring({2047, 1024, 0}, 0);
  const auto lifted = center_lift(a, 2048);
  CHECK(lifted.coeffs == std::vector<int32_t>{-1, 1024, 0});
  CHECK(lifted.modulus == 0);
  CHECK(center_lift(RingElement(5, 0), 2048).is_zero());
}

TEST_CASE("center_lift then re-reduce is identity on reduced elements") {
  Rng rng(6);
  for (int t = 0; t < 100; ++t) {
    auto a = RingElement(17, 0);
    for (auto& c : a.coeffs) c = static_cast<int32_t>(rng.below(100000));
    const auto red = reduce(a, 2048);
    CHECK(reduce(center_lift(red, 2048), 2048) == red);
  }
}

TEST_CASE("invert_mod_prime trivial cases") {
  const size_t n = 7;
  CHECK(invert_mod_prime(ring_one(n, 0), 3)->coeffs ==
        ring_one(n, 3).coeffs);
  // x * x^{n-1} = x^n = 1
  CHECK(invert_mod_prime(ring_monomial(n, 1, 0), 3)->coeffs ==
        ring_monomial(n, n - 1, 3).coeffs);
}

TEST_CASE("invert_mod_prime at N=7 p=3 against multiply-back and search") {
  const auto f = ring({1, 1, -1, 0, 1, 0, -1});  // invertible mod 3
  const auto inv = invert_mod_prime(f, 3);
  REQUIRE(inv.has_value());
  CHECK(ring_mul(f, *inv, 3).coeffs == ring_one(7, 3).coeffs);
  // cross-check with the independent circulant-matrix oracle
  const auto oracle_inv = oracle::circulant_inverse(f, 3);
  REQUIRE(oracle_inv.has_value());
  CHECK(inv->coeffs == oracle_inv->coeffs);
  // exhaustive search over all ternary candidates finds the same inverse
  bool found = false;
  for (int code = 0; code < 2187; ++code) {
    RingElement cand(7, 3);
    int v = code;
    for (int i = 0; i < 7; ++i) {
      cand.coeffs[i] = v % 3 == 2 ? -1 : v % 3;
      v /= 3;
    }
    if (ring_mul(f, cand, 3).coeffs == ring_one(7, 3).coeffs) {
      CHECK(cand.coeffs == inv->coeffs);
      found = true;
    }
  }
  CHECK(found);
}

TEST_CASE("non-invertible f is reported") {
  // f(1) = 0, so x - 1 divides f and gcd with x^n - 1 is non-constant
  const auto f = ring({1, -1, 0, 0, 0, 0, 0});
  CHECK_FALSE(invert_mod_prime(f, 3).has_value());
  CHECK_FALSE(invert_mod_prime_power(f, 32).has_value());
}

TEST_CASE("invert_mod_prime_power trivial and lifted cases") {
  CHECK(invert_mod_prime_power(ring_one(7, 0), 2048)->coeffs ==
        ring_one(7, 2048).coeffs);
  CHECK(invert_mod_prime_power(ring_monomial(7, 1, 0), 2048)->coeffs ==
        ring_monomial(7, 6, 2048).coeffs);

  const auto f = ring({1, 1, -1, 0, 1, 0, -1});
  const auto inv = invert_mod_prime_power(f, 32);
  REQUIRE(inv.has_value());
  CHECK(ring_mul(f, *inv, 32).coeffs == ring_one(7, 32).coeffs);
  const auto oracle_inv = oracle::circulant_inverse(f, 32);
  REQUIRE(oracle_inv.has_value());
  CHECK(inv->coeffs == oracle_inv->coeffs);
}

TEST_CASE("inverses hold for random invertible samples") {
  Rng rng(7);
  int checked = 0;
  while (checked < 20) {
    const auto f = sample_ternary(17, 5, 4, rng);
    const auto fp = invert_mod_prime(f, 3);
    const auto fq = invert_mod_prime_power(f, 1024);
    if (!fp || !fq) continue;
    CHECK(ring_mul(f, *fp, 3).coeffs == ring_one(17, 3).coeffs);
    CHECK(ring_mul(f, *fq, 1024).coeffs == ring_one(17, 1024).coeffs);
    ++checked;
  }
}

TEST_CASE("invert_mod_q dispatches on the modulus") {
  const auto f = ring({1, 1, -1, 0, 1, 0, -1});
  const auto inv41 = invert_mod_q(f, 41);
  REQUIRE(inv41.has_value());
  CHECK(ring_mul(f, *inv41, 41).coeffs == ring_one(7, 41).coeffs);
}

TEST_CASE("sample_ternary weights and reproducibility") {
  Rng rng(8);
  CHECK(sample_ternary(9, 0, 0, rng).is_zero());
  const auto ones = sample_ternary(9, 9, 0, rng);
  CHECK(std::all_of(ones.coeffs.begin(), ones.coeffs.end(),
                    [](int32_t c) { return c == 1; }));
  CHECK_THROWS_AS(sample_ternary(9, 6, 4, rng), std::invalid_argument);

  Rng a(99), b(99);
  CHECK(sample_ternary(31, 5, 5, a).coeffs ==
        sample_ternary(31, 5, 5, b).coeffs);
}

TEST_CASE("sampled positions are roughly uniform") {
  Rng rng(9);
  const size_t n = 10;
  const int trials = 10000;
  std::vector<int> plus_count(n, 0), minus_count(n, 0);
  for (int t = 0; t < trials; ++t) {
    const auto e = sample_ternary(n, 2, 2, rng);
    int plus = 0, minus = 0;
    for (size_t i = 0; i < n; ++i) {
      if (e.coeffs[i] == 1) ++plus_count[i], ++plus;
      if (e.coeffs[i] == -1) ++minus_count[i], ++minus;
    }
    CHECK(plus == 2);
    CHECK(minus == 2);
  }
  // expected hits per position: trials * 2 / n = 2000; allow wide slack
  for (size_t i = 0; i < n; ++i) {
    CHECK(plus_count[i] > 1700);
    CHECK(plus_count[i] < 2300);
    CHECK(minus_count[i] > 1700);
    CHECK(minus_count[i] < 2300);
  }
}
