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

#ifndef RADEXT_POLY_RATFUN_HPP
#define RADEXT_POLY_RATFUN_HPP

#include <algorithm>
#include <cstdint>
#include <optional>
#include <span>
#include <utility>
#include <vector>

#include "radext/error.hpp"
#include "radext/poly/multipoly.hpp"

namespace radext {

/// Quotient num/den of polynomials. No gcd cancellation is performed; the
/// denominator is normalized to leading coefficient 1 (grlex) and equality of
/// values is decided by cross-multiplication (see ratfun_equal).
template <CoefficientField F>
class RatFun {
 public:
  using Poly = MultiPoly<F>;
  using Element = typename F::Element;

  explicit RatFun(Poly num) : num_(std::move(num)), den_(Poly::one(num_.ring())) {}
  RatFun(Poly num, Poly den) : num_(std::move(num)), den_(std::move(den)) {
    check_same_ring(num_.ring(), den_.ring());
    require(!den_.is_zero(), ErrorCode::DivisionByZero, "rational function with zero denominator");
    normalize();
  }

  static RatFun zero(RingPtr<F> ring) { return RatFun(Poly(ring)); }
  static RatFun one(RingPtr<F> ring) { return RatFun(Poly::one(ring)); }
  static RatFun constant(RingPtr<F> ring, Element c) { return RatFun(Poly::constant(std::move(ring), std::move(c))); }

  const Poly& num() const { return num_; }
  const Poly& den() const { return den_; }
  const RingPtr<F>& ring() const { return num_.ring(); }
  const F& field() const { return num_.field(); }
  bool is_zero() const { return num_.is_zero(); }
  bool is_polynomial() const { return den_.is_one(); }

  /// Structural equality of the stored pair (not value equality).
  bool identical(const RatFun& other) const { return num_ == other.num_ && den_ == other.den_; }

  friend RatFun operator+(const RatFun& a, const RatFun& b) { return combine(a, b, false); }
  friend RatFun operator-(const RatFun& a, const RatFun& b) { return combine(a, b, true); }
  RatFun operator-() const { return RatFun(-num_, den_, Normalized{}); }

  friend RatFun operator*(const RatFun& a, const RatFun& b) {
    if (a.is_zero() || b.is_zero()) return zero(a.ring());
    if (a.den_.is_one() && b.den_.is_one()) return RatFun(a.num_ * b.num_, a.den_, Normalized{});
    return RatFun(a.num_ * b.num_, a.den_ * b.den_);
  }
  friend RatFun operator/(const RatFun& a, const RatFun& b) {
    require(!b.is_zero(), ErrorCode::DivisionByZero, "division by the zero rational function");
    return RatFun(a.num_ * b.den_, a.den_ * b.num_);
  }
  RatFun& operator+=(const RatFun& b) { return *this = *this + b; }
  RatFun& operator-=(const RatFun& b) { return *this = *this - b; }
  RatFun& operator*=(const RatFun& b) { return *this = *this * b; }

  RatFun scaled(const Element& c) const { return RatFun(num_.scaled(c), den_, Normalized{}); }

  RatFun pow(long k) const {
    if (k < 0) return (one(ring()) / *this).pow(-k);
    return RatFun(num_.pow(static_cast<unsigned long>(k)), den_.pow(static_cast<unsigned long>(k)), Normalized{});
  }

  /// Cancels the common monomial factor of numerator and denominator. Content
  /// is already normalized by the unit leading coefficient of the denominator.
  RatFun light_reduced() const {
    if (num_.is_zero()) return zero(ring());
    const Monomial g = Monomial::gcd(num_.monomial_content(), den_.monomial_content());
    if (g.is_one()) return *this;
    return RatFun(num_.divide_monomial(g), den_.divide_monomial(g), Normalized{});
  }

  /// Full evaluation; throws EvalDenominatorZero if the denominator vanishes.
  Element evaluate(std::span<const Element> point) const {
    const Element d = den_.evaluate(point);
    require(!field().is_zero(d), ErrorCode::EvalDenominatorZero, "denominator vanishes at evaluation point");
    return field().div(num_.evaluate(point), d);
  }

  /// Substitutes rational functions (living in `target`) for the variables with
  /// an image; other variables are carried over by name.
  RatFun substitute(const std::vector<std::optional<RatFun>>& images, RingPtr<F> target) const {
    require(images.size() == ring()->nvars(), ErrorCode::UnboundVariable, "substitution has wrong arity");
    std::vector<std::uint32_t> bounds(images.size(), 0);
    for (std::size_t i = 0; i < images.size(); ++i) {
      bounds[i] = static_cast<std::uint32_t>(std::max<long>({0, num_.degree_in(i), den_.degree_in(i)}));
    }
    Poly n = homogenized(num_, images, target, bounds);
    Poly d = homogenized(den_, images, target, bounds);
    require(!d.is_zero(), ErrorCode::DivisionByZero, "substitution makes the denominator vanish");
    return RatFun(std::move(n), std::move(d));
  }

  RatFun scale_variable(std::size_t i, const Element& c) const {
    return RatFun(num_.scale_variable(i, c), den_.scale_variable(i, c));
  }
  RatFun swap_variables(std::size_t i, std::size_t j) const {
    return RatFun(num_.swap_variables(i, j), den_.swap_variables(i, j));
  }
  RatFun lift(RingPtr<F> target) const { return RatFun(num_.lift(target), den_.lift(target)); }

  template <CoefficientField G, class Fn>
  RatFun<G> map_coefficients(RingPtr<G> target, Fn&& fn) const {
    return RatFun<G>(num_.map_coefficients(target, fn), den_.map_coefficients(target, fn));
  }

 private:
  struct Normalized {};
  RatFun(Poly num, Poly den, Normalized) : num_(std::move(num)), den_(std::move(den)) {}

  void normalize() {
    const auto& lc = den_.leading_term().coeff;
    if (field().is_one(lc)) return;
    const auto inv = field().inv(lc);
    num_ = num_.scaled(inv);
    den_ = den_.scaled(inv);
  }

  // Numerator of P(n_1/d_1, ...) over prod d_i^{bounds_i}. Numerator and
  // denominator share the bounds, so the common factor cancels.
  static Poly homogenized(const Poly& p, const std::vector<std::optional<RatFun>>& images, const RingPtr<F>& target,
                          const std::vector<std::uint32_t>& bounds) {
    std::vector<std::vector<Poly>> num_pow(images.size()), den_pow(images.size());
    auto cached = [&](std::vector<Poly>& cache, const Poly& base, std::uint32_t e) -> const Poly& {
      if (cache.empty()) cache.push_back(Poly::one(target));
      while (cache.size() <= e) cache.push_back(cache.back() * base);
      return cache[e];
    };
    Poly acc(target);
    for (const auto& t : p.terms()) {
      Monomial kept;
      Poly factor = Poly::constant(target, t.coeff);
      for (std::size_t i = 0; i < images.size(); ++i) {
        const auto e = t.mono.exps[i];
        if (images[i]) {
          if (e != 0) factor = factor * cached(num_pow[i], images[i]->num(), e);
          if (bounds[i] != e) factor = factor * cached(den_pow[i], images[i]->den(), bounds[i] - e);
        } else if (e != 0) {
          kept.exps[target->index_of(p.ring()->vars[i])] += e;
        }
      }
      acc += factor.shifted(kept, target->field->one());
    }
    return acc;
  }

  static RatFun combine(const RatFun& a, const RatFun& b, bool subtract) {
    check_same_ring(a.ring(), b.ring());
    auto signed_b = [&](const Poly& p) { return subtract ? -p : p; };
    if (a.den_ == b.den_) {
      Poly n = subtract ? a.num_ - b.num_ : a.num_ + b.num_;
      return RatFun(std::move(n), a.den_, Normalized{});
    }
    // Denominators that agree up to a monomial factor share their cofactor,
    // so the common denominator is lcm(monomials) * cofactor.
    const Monomial ma = a.den_.monomial_content(), mb = b.den_.monomial_content();
    Poly pa = a.den_.divide_monomial(ma), pb = b.den_.divide_monomial(mb);
    const F& f = a.field();
    if (pa == pb) {
      const Monomial l = Monomial::lcm(ma, mb);
      Poly n = a.num_.shifted(l / ma, f.one()) + signed_b(b.num_.shifted(l / mb, f.one()));
      return RatFun(std::move(n), pa.shifted(l, f.one()), Normalized{});
    }
    Poly n = a.num_ * b.den_ + signed_b(b.num_ * a.den_);
    return RatFun(std::move(n), a.den_ * b.den_, Normalized{});
  }

  Poly num_;
  Poly den_;
};

/// Value equality: a.num * b.den == b.num * a.den. Denominators are normalized
/// to leading coefficient 1, so equal denominators reduce to comparing numerators.
template <CoefficientField F>
bool ratfun_equal(const RatFun<F>& a, const RatFun<F>& b) {
  check_same_ring(a.ring(), b.ring());
  if (a.den() == b.den()) return a.num() == b.num();
  if (a.is_zero() || b.is_zero()) return a.is_zero() && b.is_zero();
  return a.num() * b.den() == b.num() * a.den();
}

/// Sum of rational functions over a known common multiple of their denominators.
template <CoefficientField F>
RatFun<F> sum_over_common_denominator(std::span<const RatFun<F>> terms, const MultiPoly<F>& common) {
  MultiPoly<F> acc(common.ring());
  for (const auto& t : terms) {
    if (t.is_zero()) continue;
    auto cofactor = common.exact_div(t.den());
    require(cofactor.has_value(), ErrorCode::VerificationFailed, "denominator does not divide the common multiple");
    acc += t.num() * *cofactor;
  }
  return RatFun<F>(std::move(acc), common);
}

}  // namespace radext

#endif  // RADEXT_POLY_RATFUN_HPP
