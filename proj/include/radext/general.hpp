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

#ifndef RADEXT_GENERAL_HPP
#define RADEXT_GENERAL_HPP

#include <gmpxx.h>

#include <cstdint>
#include <numeric>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "radext/error.hpp"
#include "radext/field.hpp"
#include "radext/poly.hpp"

namespace radext::general {

/// An element of {0, ..., m-1}^n.
using Lambda = std::vector<std::uint32_t>;

/// All of {0, ..., m-1}^n in lexicographic order (first coordinate most significant).
inline std::vector<Lambda> lambda_indices(long m, std::size_t n) {
  std::vector<Lambda> out;
  Lambda cur(n, 0);
  for (;;) {
    out.push_back(cur);
    std::size_t k = n;
    while (k > 0 && cur[k - 1] + 1 == static_cast<std::uint32_t>(m)) cur[--k] = 0;
    if (k == 0) return out;
    ++cur[k - 1];
  }
}

inline long pairing(const Lambda& a, const Lambda& b) {
  long s = 0;
  for (std::size_t i = 0; i < a.size(); ++i) s += static_cast<long>(a[i]) * b[i];
  return s;
}

template <CoefficientField F>
struct GeneralContext {
  using Element = typename F::Element;
  long m = 1;
  std::size_t n = 1;
  std::shared_ptr<const F> field;
  Element eps;
  RingPtr<F> ring;  // X1..Xn
  std::vector<Lambda> lambdas;

  std::size_t size() const { return lambdas.size(); }

  /// Fails with NoSuchRoot if `field` lacks a primitive m-th root of unity.
  static GeneralContext make(std::shared_ptr<const F> field, long m, std::size_t n, std::size_t bound = 64) {
    require(m >= 1, ErrorCode::InvalidParameter, "m must be positive");
    require(n >= 1 && n <= kMaxVars, ErrorCode::InvalidParameter, "n must lie in 1..8");
    const auto ch = field->characteristic();
    require(ch == 0 || static_cast<unsigned long>(m) % ch != 0, ErrorCode::CharDividesM, "char divides m");
    std::size_t size = 1;
    for (std::size_t i = 0; i < n; ++i) {
      size *= static_cast<std::size_t>(m);
      require(size <= bound, ErrorCode::TooLarge, "m^n exceeds the configured bound");
    }
    GeneralContext ctx;
    ctx.m = m;
    ctx.n = n;
    ctx.eps = primitive_root_of_unity(*field, m);
    ctx.field = field;
    ctx.ring = make_ring(std::move(field), x_variables(n));
    ctx.lambdas = lambda_indices(m, n);
    return ctx;
  }

  Element eps_pow(long k) const {
    k %= m;
    if (k < 0) k += m;
    return field->pow(eps, k);
  }
};

/// Q(eps_m), where the rational construction runs.
inline GeneralContext<CyclotomicField> rational_context(long m, std::size_t n, std::size_t bound = 64) {
  require(m >= 1, ErrorCode::InvalidParameter, "m must be positive");
  return GeneralContext<CyclotomicField>::make(CyclotomicField::make(m), m, n, bound);
}

/// GF(q) for the smallest power q of p with q = 1 (mod m).
inline GeneralContext<FiniteField> finite_context(u64 p, long m, std::size_t n, std::size_t bound = 64) {
  require(m >= 1, ErrorCode::InvalidParameter, "m must be positive");
  const unsigned e = min_frobenius_exponent(p, static_cast<u64>(m));
  return GeneralContext<FiniteField>::make(FiniteField::extension(p, e), m, n, bound);
}

namespace detail {

template <class Fn>
void for_each_composition(std::size_t parts, std::uint32_t total, Fn&& fn) {
  std::vector<std::uint32_t> k(parts, 0);
  auto rec = [&](auto&& self, std::size_t i, std::uint32_t left) -> void {
    if (i + 1 == parts) {
      k[i] = left;
      fn(k);
      return;
    }
    for (std::uint32_t v = 0; v <= left; ++v) {
      k[i] = v;
      self(self, i + 1, left - v);
    }
  };
  rec(rec, 0, total);
}

}  // namespace detail

/// T^t = sum_lambda a(t, lambda) X^lambda with a(t, lambda) in F[X^m]:
/// the multinomial terms of (X_1 + ... + X_n)^t with exponents = lambda (mod m),
/// divided by X^lambda.
template <CoefficientField F>
RatFun<F> a_coeff_multinomial(const GeneralContext<F>& ctx, std::size_t t, const Lambda& lambda) {
  require(t < ctx.size(), ErrorCode::IndexOutOfRange, "t must be below m^n");
  require(lambda.size() == ctx.n, ErrorCode::IndexOutOfRange, "lambda has the wrong length");
  const auto& k = *ctx.field;
  std::vector<typename MultiPoly<F>::Term> terms;
  mpz_class tf;
  mpz_fac_ui(tf.get_mpz_t(), t);
  detail::for_each_composition(ctx.n, static_cast<std::uint32_t>(t), [&](const std::vector<std::uint32_t>& parts) {
    Monomial mono;
    mpz_class denom = 1;
    for (std::size_t i = 0; i < ctx.n; ++i) {
      if (parts[i] % static_cast<std::uint32_t>(ctx.m) != lambda[i]) return;
      mono.exps[i] = parts[i] - lambda[i];
      mpz_class f;
      mpz_fac_ui(f.get_mpz_t(), parts[i]);
      denom *= f;
    }
    const mpz_class coeff = tf / denom;
    auto c = k.from_integer(coeff);
    if (!k.is_zero(c)) terms.push_back({mono, c});
  });
  return RatFun<F>(MultiPoly<F>::from_terms(ctx.ring, std::move(terms)));
}

/// b_j = sum_k eps^{j_k} X_k, in lexicographic order of j.
template <CoefficientField F>
std::vector<MultiPoly<F>> vandermonde_nodes(const GeneralContext<F>& ctx) {
  std::vector<MultiPoly<F>> nodes;
  for (const auto& j : ctx.lambdas) {
    MultiPoly<F> b(ctx.ring);
    for (std::size_t k = 0; k < ctx.n; ++k) b += MultiPoly<F>::variable(ctx.ring, k).scaled(ctx.eps_pow(j[k]));
    nodes.push_back(std::move(b));
  }
  return nodes;
}

/// m^{-n} X^{-lambda} sum_j eps^{-<lambda, j>} b_j^t.
template <CoefficientField F>
RatFun<F> a_coeff_character(const GeneralContext<F>& ctx, std::size_t t, const Lambda& lambda) {
  require(t < ctx.size(), ErrorCode::IndexOutOfRange, "t must be below m^n");
  require(lambda.size() == ctx.n, ErrorCode::IndexOutOfRange, "lambda has the wrong length");
  const auto& k = *ctx.field;
  const auto nodes = vandermonde_nodes(ctx);
  MultiPoly<F> sum(ctx.ring);
  for (std::size_t j = 0; j < nodes.size(); ++j) {
    sum += nodes[j].pow(t).scaled(ctx.eps_pow(-pairing(lambda, ctx.lambdas[j])));
  }
  Monomial mono;
  for (std::size_t i = 0; i < ctx.n; ++i) mono.exps[i] = lambda[i];
  const auto den = MultiPoly<F>::monomial(ctx.ring, mono, k.from_int(static_cast<long>(ctx.size())));
  return RatFun<F>(std::move(sum), den);
}

/// prod_{i != j} (b_j - b_i).
template <CoefficientField F>
MultiPoly<F> node_denominator(const std::vector<MultiPoly<F>>& nodes, std::size_t j, const RingPtr<F>& ring) {
  MultiPoly<F> d = MultiPoly<F>::one(ring);
  for (std::size_t i = 0; i < nodes.size(); ++i) {
    if (i != j) d = d * (nodes[j] - nodes[i]);
  }
  require(!d.is_zero(), ErrorCode::DuplicateNodes, "Vandermonde nodes are not distinct");
  return d;
}

/// Row j of the inverse Vandermonde matrix: the coefficients of
/// prod_{i != j} (X - b_i) / prod_{i != j} (b_j - b_i), i.e.
/// a_{jt} = (-1)^{N-1-t} s_{N-1-t}(b_i : i != j) / prod_{i != j} (b_j - b_i).
template <CoefficientField F>
std::vector<RatFun<F>> vandermonde_inverse_row(const GeneralContext<F>& ctx, std::size_t j) {
  require(j < ctx.size(), ErrorCode::IndexOutOfRange, "node index out of range");
  const auto nodes = vandermonde_nodes(ctx);
  const auto den = node_denominator(nodes, j, ctx.ring);
  std::vector<MultiPoly<F>> others;
  for (std::size_t i = 0; i < nodes.size(); ++i) {
    if (i != j) others.push_back(nodes[i]);
  }
  const auto s = elementary_symmetric_all(others, ctx.ring);
  const std::size_t big_n = nodes.size();
  std::vector<RatFun<F>> row;
  for (std::size_t t = 0; t < big_n; ++t) {
    const std::size_t k = big_n - 1 - t;
    row.emplace_back(k % 2 == 0 ? s[k] : -s[k], den);
  }
  return row;
}

/// X_1 = sum_t c_t T^t, c_t = X_1 sum_j eps^{j_1} a_{jt}. All rows are put
/// over V = prod_{i<j} (b_j - b_i). Checks, before light reduction:
/// membership in F(X^m), the identity at T = X_1 + ... + X_n, and
/// sum_t c_t a(t, mu) = [mu = (1, 0, ..., 0)] for every mu.
template <CoefficientField F>
TPoly<F> reconstruct_general(const GeneralContext<F>& ctx) {
  using P = MultiPoly<F>;
  const auto& ring = ctx.ring;
  const auto nodes = vandermonde_nodes(ctx);
  const std::size_t big_n = nodes.size();
  P v = P::one(ring);
  for (std::size_t j = 0; j < big_n; ++j) {
    for (std::size_t i = 0; i < j; ++i) v = v * (nodes[j] - nodes[i]);
  }
  require(!v.is_zero(), ErrorCode::DuplicateNodes, "Vandermonde nodes are not distinct");
  std::vector<P> numer(big_n, P(ring));
  for (std::size_t j = 0; j < big_n; ++j) {
    auto cofactor = v.exact_div(node_denominator(nodes, j, ring));
    require(cofactor.has_value(), ErrorCode::VerificationFailed, "row denominator does not divide V");
    std::vector<P> others;
    for (std::size_t i = 0; i < big_n; ++i) {
      if (i != j) others.push_back(nodes[i]);
    }
    const auto s = elementary_symmetric_all(others, ring);
    const P weighted = cofactor->scaled(ctx.eps_pow(ctx.lambdas[j][0]));
    for (std::size_t t = 0; t < big_n; ++t) {
      const std::size_t k = big_n - 1 - t;
      numer[t] += k % 2 == 0 ? s[k] * weighted : -(s[k] * weighted);
    }
  }
  const P x1 = P::variable(ring, 0);
  for (auto& c : numer) c = x1 * c;

  P sum(ring);
  for (std::size_t i = 0; i < ctx.n; ++i) sum += P::variable(ring, i);
  P acc(ring), power = P::one(ring);
  for (std::size_t t = 0; t < big_n; ++t) {
    acc += numer[t] * power;
    power = power * sum;
  }
  require(acc == x1 * v, ErrorCode::VerificationFailed, "substituting T does not give X1");

  // X_1 = X_1^{1 - e_1} X^{e_1} with e_1 = (1 mod m, 0, ..., 0), so the row of
  // A^{-1} at e_1 returns X_1^{1 - e_1} there and 0 elsewhere.
  Lambda e1(ctx.n, 0);
  e1[0] = 1 % static_cast<std::uint32_t>(ctx.m);
  const P expected = e1[0] == 1 ? v : x1 * v;
  for (const auto& mu : ctx.lambdas) {
    P row(ring);
    for (std::size_t t = 0; t < big_n; ++t) row += numer[t] * a_coeff_multinomial(ctx, t, mu).num();
    require(row == (mu == e1 ? expected : P(ring)), ErrorCode::VerificationFailed, "row of the inverse of A is wrong");
  }

  TPoly<F> f{ring, {}, ctx.m, 0, "general"};
  const auto xs = first_variables(ctx.n);
  for (std::size_t t = 0; t < big_n; ++t) {
    if (numer[t].is_zero()) continue;
    RatFun<F> c(numer[t], v);
    require(is_in_power_subfield(c, ctx.m, xs), ErrorCode::VerificationFailed,
            "coefficient is not invariant under X_k -> eps X_k");
    f.terms.push_back({t, c.light_reduced()});
  }
  return f;
}

/// Whether c is fixed by every eps -> eps^k with gcd(k, m) = 1.
inline bool galois_invariant(const RatFun<CyclotomicField>& c) {
  const auto& field = c.field();
  const long m = field.order_of_root();
  for (long k = 2; k < m; ++k) {
    if (std::gcd(k, m) != 1) continue;
    auto conj = c.map_coefficients(c.ring(), [&](const CyclotomicField::Element& a) { return field.conjugate(a, k); });
    if (!ratfun_equal(conj, c)) return false;
  }
  return true;
}

/// The coefficients as rationals, if every coefficient of the normalized
/// numerator and denominator lies in Q.
inline std::optional<RatFun<RationalField>> descend_to_rational(const RatFun<CyclotomicField>& c,
                                                                const RingPtr<RationalField>& target) {
  const auto& field = c.field();
  for (const auto* p : {&c.num(), &c.den()}) {
    for (const auto& t : p->terms()) {
      if (!field.is_rational(t.coeff)) return std::nullopt;
    }
  }
  auto to_q = [](const CyclotomicField::Element& a) { return a[0]; };
  return RatFun<RationalField>(c.num().map_coefficients(target, to_q), c.den().map_coefficients(target, to_q));
}

inline std::optional<TPoly<RationalField>> descend_to_rational(const TPoly<CyclotomicField>& f) {
  auto ring = make_ring(RationalField::make(), f.ring->vars);
  TPoly<RationalField> out{ring, {}, f.m, f.target, f.method};
  for (const auto& term : f.terms) {
    auto c = descend_to_rational(term.coeff, ring);
    if (!c) return std::nullopt;
    out.terms.push_back({term.t, *c});
  }
  return out;
}

/// Swaps X_1 and X_i (1-based) in every coefficient; the result reconstructs X_i.
template <CoefficientField F>
TPoly<F> transpose_to(const TPoly<F>& f, std::size_t i) {
  require(i >= 1 && i <= f.nvars(), ErrorCode::IndexOutOfRange, "variable index out of range");
  TPoly<F> g = f;
  if (i == 1) return g;
  for (auto& term : g.terms) term.coeff = term.coeff.swap_variables(0, i - 1);
  g.target = f.target == 0 ? i - 1 : (f.target == i - 1 ? 0 : f.target);
  return g;
}

/// The variables X1..Xn followed by `name`.
template <CoefficientField F>
RingPtr<F> ring_with(const std::shared_ptr<const F>& field, std::size_t n, const std::string& name) {
  return make_ring(field, x_variables(n, {name}));
}

/// Elimination for m = 2: start from (T - X_1 - ... - X_k)^2 - (X_{k+1} + ... + X_n)^2
/// with k = floor(n/2), then replace P = U + W (W: terms odd in some of
/// X_2..X_n) by U^2 - W^2 until P is even in X_2..X_n, and solve the
/// remaining linear equation alpha X_1 + beta = 0 in X_1's parity.
/// The result lives in the ring X1..Xn,T.
template <CoefficientField F>
RatFun<F> naive_formula(const std::shared_ptr<const F>& field, std::size_t n) {
  require(n >= 1, ErrorCode::InvalidParameter, "n must be positive");
  require(n <= 4, ErrorCode::Unsupported, "the naive elimination is only available for n <= 4");
  require(field->characteristic() != 2, ErrorCode::CharDividesM, "char divides m");
  using P = MultiPoly<F>;
  const auto ring = ring_with(field, n, "T");
  const P t = P::variable(ring, n);
  if (n == 1) return RatFun<F>(t);
  const std::size_t k = n / 2;
  P left = t, right(ring);
  for (std::size_t i = 0; i < k; ++i) left -= P::variable(ring, i);
  for (std::size_t i = k; i < n; ++i) right += P::variable(ring, i);
  P poly = left * left - right * right;
  auto odd_part = [&](const P& p) {
    std::vector<typename P::Term> w;
    for (const auto& term : p.terms()) {
      for (std::size_t i = 1; i < n; ++i) {
        if (term.mono.exps[i] % 2 == 1) {
          w.push_back(term);
          break;
        }
      }
    }
    return P::from_terms(ring, std::move(w));
  };
  for (int round = 0;; ++round) {
    const P w = odd_part(poly);
    if (w.is_zero()) break;
    require(round < 8, ErrorCode::Unsupported, "elimination does not terminate");
    const P u = poly - w;
    poly = u * u - w * w;
  }
  std::vector<typename P::Term> odd, even;
  for (const auto& term : poly.terms()) {
    if (term.mono.exps[0] % 2 == 1) {
      Monomial mono = term.mono;
      mono.exps[0] -= 1;
      odd.push_back({mono, term.coeff});
    } else {
      even.push_back(term);
    }
  }
  const P alpha = P::from_terms(ring, std::move(odd)), beta = P::from_terms(ring, std::move(even));
  require(!alpha.is_zero(), ErrorCode::VerificationFailed, "elimination lost X1");
  RatFun<F> x1 = RatFun<F>(-beta, alpha).light_reduced();
  P sum(ring);
  for (std::size_t i = 0; i < n; ++i) sum += P::variable(ring, i);
  std::vector<std::optional<RatFun<F>>> images(n + 1);
  images[n] = RatFun<F>(sum);
  require(ratfun_equal(x1.substitute(images, ring), RatFun<F>(P::variable(ring, 0))), ErrorCode::VerificationFailed,
          "naive formula does not reproduce X1");
  return x1;
}

/// prod_{a in Lambda} (X - sum_i eps^{a_i} X_i) in the ring X1..Xn,`name`,
/// checked for degree m^n, membership of its coefficients in F[X^m] and
/// vanishing at X = X_1 + ... + X_n.
template <CoefficientField F>
MultiPoly<F> minimal_poly_of_T(const GeneralContext<F>& ctx, const std::string& name = "X") {
  using P = MultiPoly<F>;
  const auto ring = ring_with(ctx.field, ctx.n, name);
  const P x = P::variable(ring, ctx.n);
  P acc = P::one(ring);
  for (const auto& node : vandermonde_nodes(ctx)) acc = acc * (x - node.lift(ring));
  require(acc.degree_in(ctx.n) == static_cast<long>(ctx.size()), ErrorCode::VerificationFailed,
          "minimal polynomial has the wrong degree");
  const auto xs = first_variables(ctx.n);
  for (const auto& c : acc.coefficients_in(ctx.n)) {
    require(is_in_power_subfield(RatFun<F>(c), ctx.m, xs), ErrorCode::VerificationFailed,
            "minimal polynomial coefficient is not in F[X^m]");
  }
  P sum(ring);
  for (std::size_t i = 0; i < ctx.n; ++i) sum += P::variable(ring, i);
  std::vector<std::optional<P>> images(ctx.n + 1);
  images[ctx.n] = sum;
  require(acc.substitute(images, ring).is_zero(), ErrorCode::VerificationFailed,
          "minimal polynomial does not vanish at X1 + ... + Xn");
  return acc;
}

/// Remainder of p modulo a polynomial monic in variable `var`.
template <CoefficientField F>
MultiPoly<F> remainder_monic(const MultiPoly<F>& p, std::size_t var, const MultiPoly<F>& monic) {
  using P = MultiPoly<F>;
  const long d = monic.degree_in(var);
  require(d >= 0, ErrorCode::InvalidParameter, "modulus is zero");
  const auto lead = monic.coefficients_in(var).back();
  require(lead.is_one(), ErrorCode::InvalidParameter, "modulus is not monic in the variable");
  const P tail = monic - P::variable(p.ring(), var, static_cast<std::uint32_t>(d));
  P r = p;
  for (;;) {
    std::vector<typename P::Term> high, low;
    for (const auto& term : r.terms()) {
      if (term.mono.exps[var] >= static_cast<std::uint32_t>(d)) {
        Monomial mono = term.mono;
        mono.exps[var] -= static_cast<std::uint32_t>(d);
        high.push_back({mono, term.coeff});
      } else {
        low.push_back(term);
      }
    }
    if (high.empty()) return r;
    r = P::from_terms(r.ring(), std::move(low)) - P::from_terms(r.ring(), std::move(high)) * tail;
  }
}

/// a = b in F(X^m)[T]/(mu_T), i.e. as elements of F(X_1, ..., X_n) with T the
/// class of X_1 + ... + X_n and all its conjugates. Both arguments live in the
/// ring X1..Xn,T.
template <CoefficientField F>
bool equal_modulo_minimal_poly(const GeneralContext<F>& ctx, const RatFun<F>& a, const RatFun<F>& b) {
  const auto mu = minimal_poly_of_T(ctx, "T");
  const auto& ring = mu.ring();
  check_same_ring(ring, a.ring());
  const auto diff = a.num() * b.den() - b.num() * a.den();
  return remainder_monic(diff, ctx.n, mu).is_zero();
}

}  // namespace radext::general

#endif  // RADEXT_GENERAL_HPP
