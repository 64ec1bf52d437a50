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

#ifndef RADEXT_FIELD_UPOLY_HPP
#define RADEXT_FIELD_UPOLY_HPP

// Dense univariate polynomials over a coefficient field, coefficients stored
// low degree first. Used to build the fields themselves (moduli, cyclotomic
// polynomials, inverses), so the only requirement on `F` is element arithmetic.

#include <cstddef>
#include <utility>
#include <vector>

#include "radext/error.hpp"

namespace radext::upoly {

template <class F>
using Poly = std::vector<typename F::Element>;

template <class F>
void trim(const F& f, Poly<F>& a) {
  while (!a.empty() && f.is_zero(a.back())) a.pop_back();
}

/// Degree, with -1 for the zero polynomial.
template <class F>
long degree(const Poly<F>& a) {
  return static_cast<long>(a.size()) - 1;
}

template <class F>
Poly<F> add(const F& f, const Poly<F>& a, const Poly<F>& b) {
  Poly<F> r(std::max(a.size(), b.size()), f.zero());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i];
  for (std::size_t i = 0; i < b.size(); ++i) r[i] = f.add(r[i], b[i]);
  trim(f, r);
  return r;
}

template <class F>
Poly<F> sub(const F& f, const Poly<F>& a, const Poly<F>& b) {
  Poly<F> r(std::max(a.size(), b.size()), f.zero());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i];
  for (std::size_t i = 0; i < b.size(); ++i) r[i] = f.sub(r[i], b[i]);
  trim(f, r);
  return r;
}

template <class F>
Poly<F> mul(const F& f, const Poly<F>& a, const Poly<F>& b) {
  if (a.empty() || b.empty()) return {};
  Poly<F> r(a.size() + b.size() - 1, f.zero());
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (f.is_zero(a[i])) continue;
    for (std::size_t j = 0; j < b.size(); ++j) r[i + j] = f.add(r[i + j], f.mul(a[i], b[j]));
  }
  trim(f, r);
  return r;
}

template <class F>
Poly<F> scale(const F& f, const Poly<F>& a, const typename F::Element& c) {
  Poly<F> r;
  r.reserve(a.size());
  for (const auto& x : a) r.push_back(f.mul(x, c));
  trim(f, r);
  return r;
}

/// Quotient and remainder; b must be nonzero.
template <class F>
std::pair<Poly<F>, Poly<F>> divmod(const F& f, Poly<F> a, const Poly<F>& b) {
  require(!b.empty(), ErrorCode::DivisionByZero, "polynomial division by zero");
  trim(f, a);
  if (a.size() < b.size()) return {Poly<F>{}, std::move(a)};
  const auto lead_inv = f.inv(b.back());
  Poly<F> quot(a.size() - b.size() + 1, f.zero());
  for (std::size_t k = a.size(); k-- >= b.size();) {
    if (f.is_zero(a[k])) continue;
    const auto c = f.mul(a[k], lead_inv);
    const std::size_t shift = k - (b.size() - 1);
    quot[shift] = c;
    for (std::size_t j = 0; j < b.size(); ++j) a[shift + j] = f.sub(a[shift + j], f.mul(c, b[j]));
  }
  trim(f, quot);
  a.resize(b.size() - 1, f.zero());
  trim(f, a);
  return {std::move(quot), std::move(a)};
}

template <class F>
Poly<F> mod(const F& f, Poly<F> a, const Poly<F>& b) {
  return divmod(f, std::move(a), b).second;
}

template <class F>
Poly<F> make_monic(const F& f, const Poly<F>& a) {
  if (a.empty()) return a;
  return scale(f, a, f.inv(a.back()));
}

template <class F>
Poly<F> gcd(const F& f, Poly<F> a, Poly<F> b) {
  trim(f, a);
  trim(f, b);
  while (!b.empty()) {
    auto r = mod(f, std::move(a), b);
    a = std::move(b);
    b = std::move(r);
  }
  return make_monic(f, a);
}

/// Inverse of a modulo m when gcd(a, m) = 1, by the extended Euclidean algorithm.
template <class F>
Poly<F> inverse_mod(const F& f, const Poly<F>& a, const Poly<F>& m) {
  Poly<F> r0 = m, r1 = mod(f, a, m);
  Poly<F> s0{}, s1{f.one()};
  while (!r1.empty()) {
    auto [q, r] = divmod(f, r0, r1);
    auto s = sub(f, s0, mul(f, q, s1));
    r0 = std::move(r1);
    r1 = std::move(r);
    s0 = std::move(s1);
    s1 = std::move(s);
  }
  require(r0.size() == 1, ErrorCode::DivisionByZero, "element is not invertible modulo the given polynomial");
  return mod(f, scale(f, s0, f.inv(r0[0])), m);
}

template <class F>
Poly<F> mul_mod(const F& f, const Poly<F>& a, const Poly<F>& b, const Poly<F>& m) {
  return mod(f, mul(f, a, b), m);
}

/// base^exp mod m by square-and-multiply; exp is given as an unsigned integer.
template <class F, class Exp>
Poly<F> pow_mod(const F& f, Poly<F> base, Exp exp, const Poly<F>& m) {
  Poly<F> result = mod(f, Poly<F>{f.one()}, m);
  base = mod(f, std::move(base), m);
  while (exp != 0) {
    if ((exp & 1u) != 0) result = mul_mod(f, result, base, m);
    base = mul_mod(f, base, base, m);
    exp >>= 1u;
  }
  return result;
}

template <class F>
typename F::Element eval(const F& f, const Poly<F>& a, const typename F::Element& x) {
  auto acc = f.zero();
  for (std::size_t i = a.size(); i-- > 0;) acc = f.add(f.mul(acc, x), a[i]);
  return acc;
}

template <class F>
Poly<F> derivative(const F& f, const Poly<F>& a) {
  Poly<F> r;
  for (std::size_t i = 1; i < a.size(); ++i) r.push_back(f.mul(f.from_int(static_cast<long>(i)), a[i]));
  trim(f, r);
  return r;
}

}  // namespace radext::upoly

#endif  // RADEXT_FIELD_UPOLY_HPP
