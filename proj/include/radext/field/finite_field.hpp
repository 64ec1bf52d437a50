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

#ifndef RADEXT_FIELD_FINITE_FIELD_HPP
#define RADEXT_FIELD_FINITE_FIELD_HPP

#include <gmpxx.h>

#include <cstdint>
#include <memory>
#include <string>
#include <vector>

#include "radext/error.hpp"
#include "radext/field/integers.hpp"
#include "radext/field/sampling.hpp"
#include "radext/field/upoly.hpp"

namespace radext {

/// Plain arithmetic modulo a prime p < 2^32. Serves as the coefficient domain
/// for the moduli of extension fields.
struct ModP {
  using Element = u64;
  u64 p;

  Element zero() const { return 0; }
  Element one() const { return 1 % p; }
  Element from_int(long v) const {
    const long r = v % static_cast<long>(p);
    return static_cast<u64>(r < 0 ? r + static_cast<long>(p) : r);
  }
  Element add(Element a, Element b) const {
    const u64 s = a + b;
    return s >= p ? s - p : s;
  }
  Element sub(Element a, Element b) const { return a >= b ? a - b : a + p - b; }
  Element neg(Element a) const { return a == 0 ? 0 : p - a; }
  Element mul(Element a, Element b) const { return a * b % p; }
  Element inv(Element a) const {
    require(a != 0, ErrorCode::DivisionByZero, "inverse of zero");
    return pow_mod(a, p - 2, p);
  }
  bool is_zero(Element a) const { return a == 0; }
};

/// GF(p^e) with elements encoded as integers in [0, p^e): the representative of
/// c_0 + c_1 g + ... + c_{e-1} g^{e-1} is sum c_i p^i, where g is the class of X
/// modulo the defining polynomial. Integer order is the "representative order"
/// used by every deterministic scan in the library.
///
/// Prime fields (e = 1) compute directly modulo p. Proper extensions use
/// exp/log/Zech tables and are limited to order <= 2^20.
class FiniteField {
 public:
  using Element = u64;
  static constexpr u64 kMaxExtensionOrder = u64{1} << 20;

  static std::shared_ptr<const FiniteField> prime(u64 p) { return extension(p, 1); }

  /// GF(p^e) with the first monic irreducible polynomial of degree e in
  /// representative order as modulus.
  static std::shared_ptr<const FiniteField> extension(u64 p, unsigned e) {
    validate_parameters(p, e);
    return std::make_shared<const FiniteField>(Key{}, p, e, find_irreducible(p, e));
  }

  /// GF(p^e) with a user-supplied modulus, coefficients low degree first.
  static std::shared_ptr<const FiniteField> extension(u64 p, unsigned e, std::vector<u64> modulus) {
    validate_parameters(p, e);
    require(modulus.size() == e + 1 && modulus.back() == 1, ErrorCode::InvalidParameter,
            "modulus must be monic of degree e");
    for (auto c : modulus) require(c < p, ErrorCode::InvalidParameter, "modulus coefficient out of range");
    require(is_irreducible(p, modulus), ErrorCode::ReducibleModulus, "modulus is reducible over GF(p)");
    return std::make_shared<const FiniteField>(Key{}, p, e, std::move(modulus));
  }

  /// Ben-Or test: f of degree d is irreducible iff gcd(f, X^{p^i} - X) = 1 for
  /// 1 <= i <= d/2. For d <= 3 this is exactly the absence of roots in GF(p).
  static bool is_irreducible(u64 p, const std::vector<u64>& monic) {
    const ModP f{p};
    const long d = static_cast<long>(monic.size()) - 1;
    if (d < 1) return false;
    if (d == 1) return true;
    if (monic[0] == 0) return false;
    const upoly::Poly<ModP> x{0, 1};
    upoly::Poly<ModP> frob = x;
    for (long i = 1; i <= d / 2; ++i) {
      frob = upoly::pow_mod(f, frob, p, monic);
      const auto g = upoly::gcd(f, upoly::sub(f, frob, x), monic);
      if (g.size() != 1) return false;
    }
    return true;
  }

  /// First monic irreducible polynomial of degree e, enumerating the lower
  /// coefficients as base-p digits of 0, 1, 2, ...
  static std::vector<u64> find_irreducible(u64 p, unsigned e) {
    if (e == 1) return {0, 1};
    const u64 count = checked_power(p, e);
    for (u64 index = 0; index < count; ++index) {
      std::vector<u64> f(e + 1, 0);
      u64 v = index;
      for (unsigned i = 0; i < e; ++i) {
        f[i] = v % p;
        v /= p;
      }
      f[e] = 1;
      if (is_irreducible(p, f)) return f;
    }
    fail(ErrorCode::ReducibleModulus, "no irreducible polynomial found");
  }

  struct Key {};
  FiniteField(Key, u64 p, unsigned e, std::vector<u64> modulus)
      : p_(p), e_(e), order_(checked_power(p, e)), modulus_(std::move(modulus)) {
    if (e_ > 1) {
      require(order_ <= kMaxExtensionOrder, ErrorCode::TooLarge, "extension field order exceeds 2^20");
      build_tables();
    } else {
      primitive_ = find_primitive_slow();
    }
  }

  u64 characteristic() const { return p_; }
  unsigned degree() const { return e_; }
  u64 order() const { return order_; }
  const std::vector<u64>& modulus() const { return modulus_; }

  Element zero() const { return 0; }
  Element one() const { return 1; }
  Element from_int(long v) const { return ModP{p_}.from_int(v); }
  Element from_integer(const mpz_class& v) const {
    mpz_class r;
    mpz_fdiv_r_ui(r.get_mpz_t(), v.get_mpz_t(), p_);
    return r.get_ui();
  }
  /// Maps a rational into the prime subfield; fails if p divides the denominator.
  Element from_rational(const mpq_class& v) const {
    const Element den = from_integer(v.get_den());
    require(den != 0, ErrorCode::DivisionByZero, "denominator divisible by the characteristic");
    return div(from_integer(v.get_num()), den);
  }

  bool is_zero(Element a) const { return a == 0; }
  bool is_one(Element a) const { return a == 1; }

  Element add(Element a, Element b) const {
    if (e_ == 1) return ModP{p_}.add(a, b);
    if (a == 0) return b;
    if (b == 0) return a;
    const u64 la = log_[a];
    u64 d = log_[b] + (order_ - 1) - la;
    if (d >= order_ - 1) d -= order_ - 1;
    const std::uint32_t z = zech_[d];
    if (z == kNoLog) return 0;
    return exp_[la + z];
  }
  Element neg(Element a) const {
    if (e_ == 1) return ModP{p_}.neg(a);
    if (a == 0 || p_ == 2) return a;
    return exp_[log_[a] + (order_ - 1) / 2];
  }
  Element sub(Element a, Element b) const { return add(a, neg(b)); }
  Element mul(Element a, Element b) const {
    if (e_ == 1) return mul_mod(a, b, p_);
    if (a == 0 || b == 0) return 0;
    return exp_[log_[a] + log_[b]];
  }
  Element inv(Element a) const {
    require(a != 0, ErrorCode::DivisionByZero, "inverse of zero");
    if (e_ == 1) return pow_mod(a, p_ - 2, p_);
    const u64 la = log_[a];
    return exp_[la == 0 ? 0 : order_ - 1 - la];
  }
  Element div(Element a, Element b) const { return mul(a, inv(b)); }

  /// a^k for any integer k; negative k requires a != 0.
  Element pow(Element a, long k) const {
    if (k < 0) return pow(inv(a), -k);
    if (k == 0) return 1;
    if (a == 0) return 0;
    const u64 r = static_cast<u64>(k) % (order_ - 1);
    return pow_reduced(a, r);
  }
  /// a^k with a big exponent, reduced modulo the group order.
  Element pow(Element a, const mpz_class& k) const {
    if (a == 0) {
      require(k >= 0, ErrorCode::DivisionByZero, "negative power of zero");
      return k == 0 ? 1 : 0;
    }
    mpz_class r;
    mpz_fdiv_r_ui(r.get_mpz_t(), k.get_mpz_t(), order_ - 1);
    return pow_reduced(a, r.get_ui());
  }

  /// The class of X modulo the defining polynomial (for e = 1, the smallest
  /// multiplicative generator).
  Element canonical_generator() const { return e_ == 1 ? primitive_ : p_; }
  /// Smallest generator of the multiplicative group in representative order.
  Element primitive_element() const { return primitive_; }

  std::vector<u64> digits(Element a) const {
    std::vector<u64> out(e_, 0);
    for (unsigned i = 0; i < e_; ++i) {
      out[i] = a % p_;
      a /= p_;
    }
    return out;
  }
  Element from_digits(const std::vector<u64>& d) const {
    Element r = 0;
    for (std::size_t i = d.size(); i-- > 0;) r = r * p_ + d[i];
    return r;
  }

  template <class Rng>
  Element sample(Rng& rng) const {
    return uniform_below(rng, order_);
  }

  std::string to_string(Element a) const { return "#" + std::to_string(a); }
  Element parse(const std::string& text) const {
    std::string body = text;
    if (!body.empty() && body[0] == '#') body = body.substr(1);
    try {
      std::size_t used = 0;
      const long long v = std::stoll(body, &used);
      require(used == body.size(), ErrorCode::ParseError, "bad field literal '" + text + "'");
      if (text[0] == '#') {
        require(v >= 0 && static_cast<u64>(v) < order_, ErrorCode::ParseError, "field literal out of range");
        return static_cast<Element>(v);
      }
      return from_int(static_cast<long>(v));
    } catch (const std::logic_error&) {
      fail(ErrorCode::ParseError, "bad field literal '" + text + "'");
    }
  }

  std::string describe() const {
    if (e_ == 1) return "GF(" + std::to_string(p_) + ")";
    return "GF(" + std::to_string(p_) + "^" + std::to_string(e_) + ")";
  }

  bool operator==(const FiniteField& other) const {
    return p_ == other.p_ && e_ == other.e_ && modulus_ == other.modulus_;
  }

 private:
  static constexpr std::uint32_t kNoLog = UINT32_MAX;

  static void validate_parameters(u64 p, unsigned e) {
    require(e >= 1, ErrorCode::InvalidParameter, "extension degree must be positive");
    require(is_prime(p), ErrorCode::NotPrime, std::to_string(p) + " is not prime");
    require(p < (u64{1} << 32), ErrorCode::TooLarge, "characteristic must be below 2^32");
  }

  Element pow_reduced(Element a, u64 r) const {
    if (e_ == 1) return pow_mod(a, r, p_);
    return exp_[static_cast<u64>(static_cast<u128>(log_[a]) * r % (order_ - 1))];
  }

  Element mul_slow(Element a, Element b) const {
    const ModP f{p_};
    return from_digits(upoly::mul_mod(f, trimmed_digits(a), trimmed_digits(b), modulus_));
  }
  std::vector<u64> trimmed_digits(Element a) const {
    auto d = digits(a);
    upoly::trim(ModP{p_}, d);
    return d;
  }
  Element pow_slow(Element a, u64 k) const {
    Element r = 1;
    while (k != 0) {
      if (k & 1u) r = mul_slow(r, a);
      a = mul_slow(a, a);
      k >>= 1u;
    }
    return r;
  }

  Element find_primitive_slow() const {
    if (order_ == 2) return 1;
    const auto factors = distinct_prime_factors(order_ - 1);
    for (Element g = 2; g < order_; ++g) {
      bool generates = true;
      for (auto r : factors) {
        if ((e_ == 1 ? pow_mod(g, (order_ - 1) / r, p_) : pow_slow(g, (order_ - 1) / r)) == 1) {
          generates = false;
          break;
        }
      }
      if (generates) return g;
    }
    fail(ErrorCode::NoSuchRoot, "no multiplicative generator found");
  }

  void build_tables() {
    primitive_ = find_primitive_slow();
    const u64 n = order_ - 1;
    exp_.assign(2 * n, 0);
    log_.assign(order_, kNoLog);
    Element x = 1;
    for (u64 i = 0; i < n; ++i) {
      exp_[i] = static_cast<std::uint32_t>(x);
      exp_[i + n] = static_cast<std::uint32_t>(x);
      log_[x] = static_cast<std::uint32_t>(i);
      x = mul_slow(x, primitive_);
    }
    // zech_[i] = log(1 + g^i): adding 1 increments the lowest base-p digit.
    zech_.assign(n, kNoLog);
    for (u64 i = 0; i < n; ++i) {
      const Element v = exp_[i];
      const u64 low = v % p_;
      const Element w = v - low + (low + 1) % p_;
      zech_[i] = log_[w];
    }
  }

  u64 p_;
  unsigned e_;
  u64 order_;
  std::vector<u64> modulus_;
  Element primitive_ = 1;
  std::vector<std::uint32_t> exp_, log_, zech_;
};

using FiniteFieldPtr = std::shared_ptr<const FiniteField>;

}  // namespace radext

#endif  // RADEXT_FIELD_FINITE_FIELD_HPP
