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

#ifndef RADEXT_POLY_MONOMIAL_HPP
#define RADEXT_POLY_MONOMIAL_HPP

#include <algorithm>
#include <array>
#include <cstddef>
#include <cstdint>

namespace radext {

inline constexpr std::size_t kMaxVars = 8;

/// Exponent vector. Slots past the ring's variable count stay zero, so whole
/// array comparisons are valid within one ring.
struct Monomial {
  std::array<std::uint32_t, kMaxVars> exps{};

  std::uint64_t degree() const {
    std::uint64_t d = 0;
    for (auto e : exps) d += e;
    return d;
  }
  bool is_one() const {
    return std::all_of(exps.begin(), exps.end(), [](std::uint32_t e) { return e == 0; });
  }
  bool divides(const Monomial& other) const {
    for (std::size_t i = 0; i < kMaxVars; ++i) {
      if (exps[i] > other.exps[i]) return false;
    }
    return true;
  }

  friend Monomial operator*(const Monomial& a, const Monomial& b) {
    Monomial r;
    for (std::size_t i = 0; i < kMaxVars; ++i) r.exps[i] = a.exps[i] + b.exps[i];
    return r;
  }
  /// Requires b | a.
  friend Monomial operator/(const Monomial& a, const Monomial& b) {
    Monomial r;
    for (std::size_t i = 0; i < kMaxVars; ++i) r.exps[i] = a.exps[i] - b.exps[i];
    return r;
  }
  friend bool operator==(const Monomial&, const Monomial&) = default;

  static Monomial gcd(const Monomial& a, const Monomial& b) {
    Monomial r;
    for (std::size_t i = 0; i < kMaxVars; ++i) r.exps[i] = std::min(a.exps[i], b.exps[i]);
    return r;
  }
  static Monomial lcm(const Monomial& a, const Monomial& b) {
    Monomial r;
    for (std::size_t i = 0; i < kMaxVars; ++i) r.exps[i] = std::max(a.exps[i], b.exps[i]);
    return r;
  }
  static Monomial of_variable(std::size_t i, std::uint32_t power = 1) {
    Monomial r;
    r.exps[i] = power;
    return r;
  }
};

/// Graded lexicographic order, first declared variable most significant.
inline bool grlex_greater(const Monomial& a, const Monomial& b) {
  const auto da = a.degree(), db = b.degree();
  if (da != db) return da > db;
  return a.exps > b.exps;
}

struct MonomialHash {
  std::size_t operator()(const Monomial& m) const noexcept {
    std::uint64_t h = 0xcbf29ce484222325ull;
    for (auto e : m.exps) {
      h ^= e;
      h *= 0x100000001b3ull;
    }
    return static_cast<std::size_t>(h ^ (h >> 29));
  }
};

}  // namespace radext

#endif  // RADEXT_POLY_MONOMIAL_HPP
