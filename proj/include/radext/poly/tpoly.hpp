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

#ifndef RADEXT_POLY_TPOLY_HPP
#define RADEXT_POLY_TPOLY_HPP

#include <span>
#include <string>
#include <utility>
#include <vector>

#include "radext/error.hpp"
#include "radext/poly/ratfun.hpp"

namespace radext {

/// f = sum_t c_t T^t with c_t in F(X_1, ..., X_n). The ring of the
/// coefficients holds X1..Xn only; T stays symbolic.
template <CoefficientField F>
struct TPoly {
  using Element = typename F::Element;
  struct Term {
    unsigned long t;
    RatFun<F> coeff;
  };

  RingPtr<F> ring;
  std::vector<Term> terms;  // t strictly increasing, no zero coefficients
  long m = 1;
  std::size_t target = 0;  // index of the reconstructed variable
  std::string method;

  const F& field() const { return *ring->field; }
  std::size_t nvars() const { return ring->nvars(); }

  static TPoly from_coefficients(RingPtr<F> ring, const std::vector<std::pair<unsigned long, RatFun<F>>>& coeffs, long m,
                                 std::string method) {
    TPoly f{std::move(ring), {}, m, 0, std::move(method)};
    for (const auto& [t, c] : coeffs) {
      require(f.terms.empty() || f.terms.back().t < t, ErrorCode::InvalidParameter, "T exponents must increase");
      if (!c.is_zero()) f.terms.push_back(Term{t, c});
    }
    return f;
  }

  /// Value at the point x with T bound to `t_value`.
  Element evaluate(std::span<const Element> x, const Element& t_value) const {
    const F& k = field();
    Element acc = k.zero();
    for (const auto& term : terms) {
      acc = k.add(acc, k.mul(term.coeff.evaluate(x), k.pow(t_value, static_cast<long>(term.t))));
    }
    return acc;
  }

  /// Value with T = x_1 + ... + x_n.
  Element evaluate_bound(std::span<const Element> x) const {
    const F& k = field();
    Element t = k.zero();
    for (const auto& xi : x) t = k.add(t, xi);
    return evaluate(x, t);
  }

  /// sum_t c_t (X_1 + ... + X_n)^t as a rational function.
  RatFun<F> substitute_T() const {
    MultiPoly<F> sum(ring);
    for (std::size_t i = 0; i < ring->nvars(); ++i) sum += MultiPoly<F>::variable(ring, i);
    return substitute_T(sum);
  }

  RatFun<F> substitute_T(const MultiPoly<F>& value) const {
    RatFun<F> acc = RatFun<F>::zero(ring);
    MultiPoly<F> power = MultiPoly<F>::one(ring);
    unsigned long current = 0;
    for (const auto& term : terms) {
      power = power * value.pow(term.t - current);
      current = term.t;
      acc += term.coeff * RatFun<F>(power);
    }
    return acc;
  }

  /// Rewrites f as one rational function in the ring X1..Xn,T, over the
  /// common denominator of its coefficients.
  RatFun<F> as_ratfun(const RingPtr<F>& with_t, const std::string& t_name = "T") const {
    const std::size_t ti = with_t->index_of(t_name);
    RatFun<F> acc = RatFun<F>::zero(with_t);
    for (const auto& term : terms) {
      const auto lifted = term.coeff.lift(with_t);
      acc += lifted * RatFun<F>(MultiPoly<F>::variable(with_t, ti, static_cast<std::uint32_t>(term.t)));
    }
    return acc;
  }

  long degree() const { return terms.empty() ? -1 : static_cast<long>(terms.back().t); }
};

}  // namespace radext

#endif  // RADEXT_POLY_TPOLY_HPP
