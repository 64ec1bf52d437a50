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

#ifndef RADEXT_FIELD_CYCLOTOMIC_FIELD_HPP
#define RADEXT_FIELD_CYCLOTOMIC_FIELD_HPP

#include <gmpxx.h>

#include <map>
#include <memory>
#include <string>
#include <vector>

#include "radext/error.hpp"
#include "radext/field/rational_field.hpp"
#include "radext/field/upoly.hpp"

namespace radext {

using QPoly = upoly::Poly<RationalField>;

/// Phi_m from X^m - 1 = prod_{d | m} Phi_d by exact division; monic with
/// integer coefficients, low degree first.
inline QPoly cyclotomic_poly(long m) {
  require(m >= 1, ErrorCode::InvalidParameter, "cyclotomic index must be positive");
  const RationalField q;
  std::map<long, QPoly> cache;
  auto compute = [&](auto&& self, long k) -> QPoly {
    if (auto it = cache.find(k); it != cache.end()) return it->second;
    QPoly x_k_minus_1(static_cast<std::size_t>(k) + 1, mpq_class(0));
    x_k_minus_1[0] = -1;
    x_k_minus_1[static_cast<std::size_t>(k)] = 1;
    QPoly result = x_k_minus_1;
    for (long d = 1; d < k; ++d) {
      if (k % d != 0) continue;
      auto [quot, rem] = upoly::divmod(q, result, self(self, d));
      require(rem.empty(), ErrorCode::VerificationFailed, "cyclotomic division not exact");
      result = std::move(quot);
    }
    cache.emplace(k, result);
    return result;
  };
  return compute(compute, m);
}

/// Q(eps_m) = Q[X]/(Phi_m). Elements are coefficient vectors of length
/// deg Phi_m in the power basis 1, eps, eps^2, ...
class CyclotomicField {
 public:
  using Element = std::vector<mpq_class>;

  static std::shared_ptr<const CyclotomicField> make(long m) { return std::make_shared<const CyclotomicField>(Key{}, m); }

  struct Key {};
  CyclotomicField(Key, long m) : m_(m), phi_poly_(cyclotomic_poly(m)) { dim_ = phi_poly_.size() - 1; }

  long order_of_root() const { return m_; }
  std::size_t dimension() const { return dim_; }
  const QPoly& modulus() const { return phi_poly_; }
  unsigned long characteristic() const { return 0; }

  Element zero() const { return Element(dim_, mpq_class(0)); }
  Element one() const { return from_rational(1); }
  Element from_int(long v) const { return from_rational(mpq_class(v)); }
  Element from_integer(const mpz_class& v) const { return from_rational(mpq_class(v)); }
  Element from_rational(const mpq_class& v) const {
    Element r = zero();
    r[0] = v;
    return r;
  }
  /// The canonical generator eps (the class of X).
  Element generator() const { return reduce(QPoly{mpq_class(0), mpq_class(1)}); }

  bool is_zero(const Element& a) const {
    for (const auto& c : a) {
      if (sgn(c) != 0) return false;
    }
    return true;
  }
  bool is_one(const Element& a) const { return a == one(); }
  /// True when the element lies in Q (only the constant coordinate is nonzero).
  bool is_rational(const Element& a) const {
    for (std::size_t i = 1; i < a.size(); ++i) {
      if (sgn(a[i]) != 0) return false;
    }
    return true;
  }

  Element add(const Element& a, const Element& b) const {
    Element r(dim_);
    for (std::size_t i = 0; i < dim_; ++i) r[i] = a[i] + b[i];
    return r;
  }
  Element sub(const Element& a, const Element& b) const {
    Element r(dim_);
    for (std::size_t i = 0; i < dim_; ++i) r[i] = a[i] - b[i];
    return r;
  }
  Element neg(const Element& a) const {
    Element r(dim_);
    for (std::size_t i = 0; i < dim_; ++i) r[i] = -a[i];
    return r;
  }
  Element mul(const Element& a, const Element& b) const {
    if (dim_ == 1) return Element{a[0] * b[0]};
    QPoly prod(2 * dim_ - 1, mpq_class(0));
    for (std::size_t i = 0; i < dim_; ++i) {
      if (sgn(a[i]) == 0) continue;
      for (std::size_t j = 0; j < dim_; ++j) {
        if (sgn(b[j]) != 0) prod[i + j] += a[i] * b[j];
      }
    }
    return reduce(std::move(prod));
  }
  Element inv(const Element& a) const {
    require(!is_zero(a), ErrorCode::DivisionByZero, "inverse of zero");
    if (dim_ == 1) return Element{1 / a[0]};
    const RationalField q;
    QPoly as_poly(a.begin(), a.end());
    upoly::trim(q, as_poly);
    return reduce(upoly::inverse_mod(q, as_poly, phi_poly_));
  }
  Element div(const Element& a, const Element& b) const { return mul(a, inv(b)); }

  Element pow(const Element& a, long k) const {
    if (k < 0) return pow(inv(a), -k);
    Element r = one(), b = a;
    while (k != 0) {
      if (k & 1) r = mul(r, b);
      b = mul(b, b);
      k >>= 1;
    }
    return r;
  }

  /// Image under the automorphism eps -> eps^k (gcd(k, m) = 1).
  Element conjugate(const Element& a, long k) const {
    const Element root = pow(generator(), ((k % m_) + m_) % m_);
    Element acc = zero(), power = one();
    for (std::size_t i = 0; i < dim_; ++i) {
      if (sgn(a[i]) != 0) acc = add(acc, scale(power, a[i]));
      power = mul(power, root);
    }
    return acc;
  }

  Element scale(const Element& a, const mpq_class& c) const {
    Element r(dim_);
    for (std::size_t i = 0; i < dim_; ++i) r[i] = a[i] * c;
    return r;
  }

  template <class Rng>
  Element sample(Rng& rng, long bound = 1000000) const {
    return from_rational(RationalField{}.sample(rng, bound));
  }

  /// Human-readable form such as "1:2 + 3*eps^2"; rationals print as in RationalField.
  std::string to_string(const Element& a) const {
    const RationalField q;
    std::string out;
    for (std::size_t i = 0; i < dim_; ++i) {
      if (sgn(a[i]) == 0) continue;
      if (!out.empty()) out += " + ";
      std::string mono = i == 0 ? "" : (i == 1 ? "eps" : "eps^" + std::to_string(i));
      if (i == 0) {
        out += q.to_string(a[i]);
      } else if (a[i] == 1) {
        out += mono;
      } else {
        out += q.to_string(a[i]) + "*" + mono;
      }
    }
    return out.empty() ? "0" : out;
  }
  Element parse(const std::string& text) const { return from_rational(RationalField{}.parse(text)); }

  std::string describe() const { return "Q(eps_" + std::to_string(m_) + ")"; }

  bool operator==(const CyclotomicField& other) const { return m_ == other.m_; }

  /// Reduces an arbitrary polynomial in eps to canonical form.
  Element reduce(QPoly poly) const {
    for (std::size_t k = poly.size(); k-- > dim_;) {
      if (sgn(poly[k]) == 0) continue;
      const mpq_class c = poly[k];
      const std::size_t shift = k - dim_;
      for (std::size_t i = 0; i <= dim_; ++i) poly[shift + i] -= c * phi_poly_[i];
    }
    poly.resize(dim_, mpq_class(0));
    return poly;
  }

 private:
  long m_;
  QPoly phi_poly_;
  std::size_t dim_ = 1;
};

using CyclotomicFieldPtr = std::shared_ptr<const CyclotomicField>;

}  // namespace radext

#endif  // RADEXT_FIELD_CYCLOTOMIC_FIELD_HPP
