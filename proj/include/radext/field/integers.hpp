// Copyright 2026 The radext Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef RADEXT_FIELD_INTEGERS_HPP
#define RADEXT_FIELD_INTEGERS_HPP

#include <cstdint>
#include <numeric>
#include <optional>
#include <utility>
#include <vector>

#include "radext/error.hpp"

namespace radext {

using u64 = std::uint64_t;
using u128 = unsigned __int128;

inline u64 mul_mod(u64 a, u64 b, u64 mod) { return static_cast<u64>(static_cast<u128>(a) * b % mod); }

inline u64 pow_mod(u64 base, u64 exp, u64 mod) {
  u64 result = 1 % mod;
  base %= mod;
  while (exp != 0) {
    if (exp & 1u) result = mul_mod(result, base, mod);
    base = mul_mod(base, base, mod);
    exp >>= 1u;
  }
  return result;
}

// Trial division; inputs are desk-scale.
inline bool is_prime(u64 n) {
  if (n < 2) return false;
  if (n % 2 == 0) return n == 2;
  for (u64 d = 3; d <= n / d; d += 2) {
    if (n % d == 0) return false;
  }
  return true;
}

inline std::vector<u64> distinct_prime_factors(u64 n) {
  std::vector<u64> out;
  for (u64 d = 2; d <= n / d; ++d) {
    if (n % d == 0) {
      out.push_back(d);
      while (n % d == 0) n /= d;
    }
  }
  if (n > 1) out.push_back(n);
  return out;
}

/// Returns (p, e) with q = p^e, or nothing if q is not a prime power.
inline std::optional<std::pair<u64, unsigned>> as_prime_power(u64 q) {
  if (q < 2) return std::nullopt;
  const auto factors = distinct_prime_factors(q);
  if (factors.size() != 1) return std::nullopt;
  unsigned e = 0;
  while (q > 1) {
    q /= factors[0];
    ++e;
  }
  return std::make_pair(factors[0], e);
}

/// p^e, throwing TooLarge on overflow past `limit`.
inline u64 checked_power(u64 p, unsigned e, u64 limit = UINT64_MAX) {
  u64 r = 1;
  for (unsigned i = 0; i < e; ++i) {
    require(r <= limit / p, ErrorCode::TooLarge, "prime power exceeds supported size");
    r *= p;
  }
  return r;
}

/// Smallest e >= 1 with p^e = 1 (mod m). Throws CharDividesM when p | m.
inline unsigned min_frobenius_exponent(u64 p, u64 m) {
  require(m >= 1, ErrorCode::InvalidParameter, "m must be positive");
  require(is_prime(p), ErrorCode::NotPrime, "characteristic must be prime");
  require(m % p != 0, ErrorCode::CharDividesM, "char divides m");
  if (m == 1) return 1;
  u64 power = p % m;
  unsigned e = 1;
  while (power != 1) {
    power = mul_mod(power, p, m);
    ++e;
  }
  return e;
}

}  // namespace radext

#endif  // RADEXT_FIELD_INTEGERS_HPP
