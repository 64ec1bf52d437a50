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

#ifndef RADEXT_FIELD_ROOTS_HPP
#define RADEXT_FIELD_ROOTS_HPP

#include <gmpxx.h>

#include <functional>
#include <numeric>
#include <string>

#include "radext/error.hpp"
#include "radext/field/cyclotomic_field.hpp"
#include "radext/field/finite_field.hpp"
#include "radext/field/integers.hpp"
#include "radext/field/rational_field.hpp"

namespace radext {

/// eps with eps^m = 1 and eps^k != 1 for 0 < k < m. In a finite field this is
/// g^{(Q-1)/m} for the smallest multiplicative generator g.
inline FiniteField::Element primitive_root_of_unity(const FiniteField& field, u64 m) {
  require(m >= 1, ErrorCode::InvalidParameter, "m must be positive");
  require((field.order() - 1) % m == 0, ErrorCode::NoSuchRoot,
          "no primitive " + std::to_string(m) + "-th root of unity in " + field.describe());
  return field.pow(field.primitive_element(), static_cast<long>((field.order() - 1) / m));
}

inline CyclotomicField::Element primitive_root_of_unity(const CyclotomicField& field, long m) {
  require(m >= 1, ErrorCode::InvalidParameter, "m must be positive");
  const long big = field.order_of_root();
  if (m == 1) return field.one();
  if (m == 2) return field.from_int(-1);
  require(big % m == 0, ErrorCode::NoSuchRoot,
          "no primitive " + std::to_string(m) + "-th root of unity in " + field.describe());
  return field.pow(field.generator(), big / m);
}

inline RationalField::Element primitive_root_of_unity(const RationalField&, long m) {
  require(m >= 1, ErrorCode::InvalidParameter, "m must be positive");
  require(m <= 2, ErrorCode::NoSuchRoot, "the rationals contain no primitive m-th root of unity for m >= 3");
  return m == 1 ? mpq_class(1) : mpq_class(-1);
}

/// Multiplicative order of a nonzero element, by direct iteration.
template <class F>
long multiplicative_order(const F& field, const typename F::Element& x, long limit) {
  auto acc = x;
  for (long k = 1; k <= limit; ++k) {
    if (field.is_one(acc)) return k;
    acc = field.mul(acc, x);
  }
  return 0;
}

/// x^q, where q must be a power of the characteristic.
inline FiniteField::Element frobenius(const FiniteField& field, FiniteField::Element x, u64 q) {
  const u64 p = field.characteristic();
  u64 rest = q;
  while (rest > 1 && rest % p == 0) rest /= p;
  require(rest == 1, ErrorCode::WrongCharacteristic,
          std::to_string(q) + " is not a power of the characteristic " + std::to_string(p));
  return field.pow(x, mpz_class(static_cast<unsigned long>(q)));
}

/// x^{q^k} by k successive Frobenius steps.
inline FiniteField::Element frobenius_power(const FiniteField& field, FiniteField::Element x, u64 q, u64 k) {
  for (u64 i = 0; i < k; ++i) x = frobenius(field, x, q);
  return x;
}

inline RationalField::Element frobenius(const RationalField&, const mpq_class&, u64) {
  fail(ErrorCode::WrongCharacteristic, "Frobenius requires positive characteristic");
}

inline CyclotomicField::Element frobenius(const CyclotomicField&, const CyclotomicField::Element&, u64) {
  fail(ErrorCode::WrongCharacteristic, "Frobenius requires positive characteristic");
}

/// Smallest extension degree k such that m | p^{e k} - 1.
inline unsigned extension_degree_for_root(u64 p, unsigned e, u64 m) {
  require(m % p != 0, ErrorCode::NoSuchRoot, "char divides m; no primitive m-th root exists");
  const u64 q = checked_power(p, e);
  if (m == 1) return 1;
  u64 power = q % m;
  unsigned k = 1;
  while (power != 1) {
    power = mul_mod(power, q % m, m);
    ++k;
  }
  return k;
}

/// Field homomorphism GF(p^a) -> GF(p^b) for a | b. The generator of the source
/// is sent to the smallest root (in representative order) of its modulus.
class FiniteFieldEmbedding {
 public:
  FiniteFieldEmbedding(FiniteFieldPtr from, FiniteFieldPtr to) : from_(std::move(from)), to_(std::move(to)) {
    require(from_->characteristic() == to_->characteristic(), ErrorCode::FieldMismatch,
            "embedding requires equal characteristic");
    require(to_->degree() % from_->degree() == 0, ErrorCode::FieldMismatch,
            from_->describe() + " does not embed in " + to_->describe());
    if (from_->degree() == 1) return;
    const auto& mod = from_->modulus();
    for (u64 r = 0; r < to_->order(); ++r) {
      FiniteField::Element acc = 0;
      for (std::size_t i = mod.size(); i-- > 0;) acc = to_->add(to_->mul(acc, r), mod[i]);
      if (acc == 0) {
        image_of_generator_ = r;
        return;
      }
    }
    fail(ErrorCode::VerificationFailed, "modulus has no root in the target field");
  }

  FiniteField::Element operator()(FiniteField::Element x) const {
    if (from_->degree() == 1) return x;
    const auto d = from_->digits(x);
    FiniteField::Element acc = 0;
    for (std::size_t i = d.size(); i-- > 0;) acc = to_->add(to_->mul(acc, image_of_generator_), d[i]);
    return acc;
  }

  const FiniteFieldPtr& source() const { return from_; }
  const FiniteFieldPtr& target() const { return to_; }

 private:
  FiniteFieldPtr from_, to_;
  FiniteField::Element image_of_generator_ = 0;
};

/// Q(eps_a) -> Q(eps_b) for a | b, eps_a -> eps_b^{b/a}.
class CyclotomicEmbedding {
 public:
  CyclotomicEmbedding(CyclotomicFieldPtr from, CyclotomicFieldPtr to) : from_(std::move(from)), to_(std::move(to)) {
    const long a = from_->order_of_root(), b = to_->order_of_root();
    require(b % a == 0 || a <= 2, ErrorCode::FieldMismatch, from_->describe() + " does not embed in " + to_->describe());
    image_of_generator_ = primitive_root_of_unity(*to_, a);
  }

  CyclotomicField::Element operator()(const CyclotomicField::Element& x) const {
    auto acc = to_->zero(), power = to_->one();
    for (const auto& c : x) {
      if (sgn(c) != 0) acc = to_->add(acc, to_->scale(power, c));
      power = to_->mul(power, image_of_generator_);
    }
    return acc;
  }

 private:
  CyclotomicFieldPtr from_, to_;
  CyclotomicField::Element image_of_generator_;
};

}  // namespace radext

#endif  // RADEXT_FIELD_ROOTS_HPP
