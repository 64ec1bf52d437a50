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

#ifndef RADEXT_CHARP_HPP
#define RADEXT_CHARP_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "radext/error.hpp"
#include "radext/field.hpp"
#include "radext/field/upoly.hpp"
#include "radext/poly.hpp"

namespace radext::charp {

using FPoly = MultiPoly<FiniteField>;
using FRat = RatFun<FiniteField>;

/// Parameters of the characteristic-p reconstruction. q = p^e with
/// q = 1 (mod m); polynomials have coefficients in GF(p).
struct MooreContext {
  u64 p = 2;
  long m = 1;
  unsigned e = 1;
  u64 q = 2;
  std::size_t n = 1;
  FiniteFieldPtr base;  // GF(p)

  /// e = 0 selects the smallest e with p^e = 1 (mod m).
  static MooreContext make(u64 p, long m, std::size_t n, unsigned e = 0) {
    require(n >= 1 && n <= kMaxVars, ErrorCode::InvalidParameter, "n must lie in 1..8");
    require(m >= 1, ErrorCode::InvalidParameter, "m must be positive");
    const unsigned e_min = min_frobenius_exponent(p, static_cast<u64>(m));
    MooreContext ctx;
    ctx.p = p;
    ctx.m = m;
    ctx.e = e == 0 ? e_min : e;
    ctx.q = checked_power(p, ctx.e, u64{1} << 31);
    require((ctx.q - 1) % static_cast<u64>(m) == 0, ErrorCode::InvalidParameter,
            "q = p^e must satisfy q = 1 (mod m)");
    ctx.n = n;
    ctx.base = FiniteField::prime(p);
    return ctx;
  }

  /// Like make(), but keeps the degree of a given field GF(p^e) when it
  /// already has q = 1 (mod m).
  static MooreContext for_field(const FiniteField& field, long m, std::size_t n) {
    const u64 q = field.order();
    const bool fits = m >= 1 && field.characteristic() % static_cast<u64>(m) != 0 && (q - 1) % static_cast<u64>(m) == 0;
    return make(field.characteristic(), m, n, fits ? field.degree() : 0);
  }

  RingPtr<FiniteField> ring() const { return make_ring(base, x_variables(n)); }

  /// GF(q^n), built on demand.
  FiniteFieldPtr big_field() const { return FiniteField::extension(p, e * static_cast<unsigned>(n)); }
  FiniteFieldPtr small_field() const { return FiniteField::extension(p, e); }
};

/// The q-power map on polynomials: coefficients to the q-th power, exponents times q.
inline FPoly frobenius_poly(const FPoly& f, u64 q) {
  std::vector<FPoly::Term> out;
  out.reserve(f.size());
  const auto& k = f.field();
  for (const auto& t : f.terms()) {
    Monomial mono = t.mono;
    for (auto& x : mono.exps) {
      const u64 v = u64{x} * q;
      require(v <= UINT32_MAX, ErrorCode::TooLarge, "exponent overflow");
      x = static_cast<std::uint32_t>(v);
    }
    out.push_back({mono, k.pow(t.coeff, static_cast<long>(q))});
  }
  return FPoly::from_terms(f.ring(), std::move(out));
}

/// Rows item^{q^i} for i = 0..rows-1, one column per item.
inline Matrix<FPoly> moore_matrix(const std::vector<FPoly>& items, u64 q, std::size_t rows) {
  Matrix<FPoly> m;
  std::vector<FPoly> row = items;
  for (std::size_t i = 0; i < rows; ++i) {
    if (i > 0) {
      for (auto& x : row) x = frobenius_poly(x, q);
    }
    m.push_back(row);
  }
  return m;
}

inline Matrix<FPoly> moore_matrix(const RingPtr<FiniteField>& ring, u64 q, std::size_t n) {
  require(n >= 1 && n <= ring->nvars(), ErrorCode::InvalidParameter, "Moore matrix needs 1 <= n <= nvars");
  checked_power(q, static_cast<unsigned>(n - 1), UINT32_MAX);
  std::vector<FPoly> vars;
  for (std::size_t j = 0; j < n; ++j) vars.push_back(FPoly::variable(ring, j));
  return moore_matrix(vars, q, n);
}

/// Moore determinant of arbitrary items; the empty determinant is 1.
inline FPoly moore_det(const std::vector<FPoly>& items, u64 q, const RingPtr<FiniteField>& ring) {
  return sym_det(moore_matrix(items, q, items.size()), ring);
}

inline FPoly moore_det_direct(const RingPtr<FiniteField>& ring, u64 q, std::size_t n) {
  return sym_det(moore_matrix(ring, q, n), ring);
}

/// prod_i prod_{a in GF(q)^{i-1}} (X_i + sum_j a_j X_j), computed over GF(q)
/// and returned with coefficients in the prime field of `ring`.
inline FPoly moore_det_product(const RingPtr<FiniteField>& ring, u64 q, std::size_t n) {
  require(n >= 1 && n <= ring->nvars(), ErrorCode::InvalidParameter, "Moore determinant needs 1 <= n <= nvars");
  checked_power(q, static_cast<unsigned>(n - 1), 10000);
  const auto pe = as_prime_power(q);
  require(pe && pe->first == ring->field->characteristic(), ErrorCode::WrongCharacteristic,
          "q must be a power of the characteristic");
  auto gq = FiniteField::extension(pe->first, pe->second);
  auto rq = make_ring(gq, ring->vars);
  using P = MultiPoly<FiniteField>;
  P acc = P::one(rq);
  for (std::size_t i = 0; i < n; ++i) {
    const u64 combos = checked_power(q, static_cast<unsigned>(i));
    for (u64 c = 0; c < combos; ++c) {
      P factor = P::variable(rq, i);
      u64 rest = c;
      for (std::size_t j = 0; j < i; ++j, rest /= q) {
        if (rest % q != 0) factor += P::variable(rq, j).scaled(rest % q);
      }
      acc = acc * factor;
    }
  }
  // Prime-field elements are exactly the representatives below p.
  return acc.map_coefficients(ring, [&](FiniteField::Element c) {
    require(c < pe->first, ErrorCode::VerificationFailed, "Moore product left the prime field");
    return c;
  });
}

/// Minor of the Moore matrix omitting row q^i and column X_1, for n >= 2;
/// for n = 1 the empty determinant 1.
inline FPoly delta_i_direct(const RingPtr<FiniteField>& ring, std::size_t i, u64 q, std::size_t n) {
  require(i < n, ErrorCode::IndexOutOfRange, "Delta index must be below n");
  if (n == 1) return FPoly::one(ring);
  auto full = moore_matrix(ring, q, n);
  Matrix<FPoly> minor;
  for (std::size_t r = 0; r < n; ++r) {
    if (r == i) continue;
    minor.emplace_back(full[r].begin() + 1, full[r].end());
  }
  return sym_det(minor, ring);
}

namespace detail {

inline FRat identity_x1(const RingPtr<FiniteField>& ring) { return FRat(FPoly::variable(ring, 0)); }

}  // namespace detail

/// X_1 = sum_i (-1)^i X_1 Delta_i / Delta T^{q^i}. Checks membership of every
/// coefficient in F(X^{q-1}) and the identity at T = X_1 + ... + X_n.
inline TPoly<FiniteField> reconstruct_charp(const MooreContext& ctx) {
  auto ring = ctx.ring();
  const auto& k = *ctx.base;
  const FPoly delta = moore_det_direct(ring, ctx.q, ctx.n);
  const FPoly x1 = FPoly::variable(ring, 0);
  TPoly<FiniteField> f{ring, {}, ctx.m, 0, "charp"};
  FPoly check(ring);
  FPoly sum_power(ring);  // (X_1 + ... + X_n)^{q^i}
  for (std::size_t j = 0; j < ctx.n; ++j) sum_power += FPoly::variable(ring, j);
  u64 t = 1;
  for (std::size_t i = 0; i < ctx.n; ++i) {
    FPoly num = x1 * delta_i_direct(ring, i, ctx.q, ctx.n);
    if (i % 2 == 1) num = num.scaled(k.neg(k.one()));
    check += num * sum_power;
    if (!num.is_zero()) f.terms.push_back({t, FRat(num, delta)});
    if (i + 1 < ctx.n) {
      sum_power = frobenius_poly(sum_power, ctx.q);
      t *= ctx.q;
    }
  }
  require(check == x1 * delta, ErrorCode::VerificationFailed, "substituting T does not give X1");
  const auto xs = first_variables(ctx.n);
  for (const auto& term : f.terms) {
    require(is_in_power_subfield(term.coeff, static_cast<long>(ctx.q - 1), xs), ErrorCode::VerificationFailed,
            "coefficient is not invariant under X_k -> eps X_k");
  }
  return f;
}

// ---------------------------------------------------------------------------
// Scalars in GF(q^n).

/// Moore matrix of field elements: entry (i, j) = items_j^{q^i}.
inline Matrix<FiniteField::Element> moore_matrix_of(const FiniteField& big, const std::vector<FiniteField::Element>& items,
                                                    u64 q) {
  Matrix<FiniteField::Element> m;
  std::vector<FiniteField::Element> row = items;
  for (std::size_t i = 0; i < items.size(); ++i) {
    if (i > 0) {
      for (auto& x : row) x = big.pow(x, static_cast<long>(q));
    }
    m.push_back(row);
  }
  return m;
}

inline FiniteField::Element moore_det_of(const FiniteField& big, const std::vector<FiniteField::Element>& items, u64 q) {
  return det_field(big, moore_matrix_of(big, items, q));
}

/// M(z) with entry (i, j) = z^{q^{i+j}}.
inline Matrix<FiniteField::Element> frobenius_matrix(const FiniteField& big, FiniteField::Element z, u64 q,
                                                     std::size_t n) {
  std::vector<FiniteField::Element> conj(2 * n);
  conj[0] = z;
  for (std::size_t k = 1; k < conj.size(); ++k) conj[k] = big.pow(conj[k - 1], static_cast<long>(q));
  Matrix<FiniteField::Element> m(n, std::vector<FiniteField::Element>(n));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) m[i][j] = conj[i + j];
  }
  return m;
}

/// First z in representative order whose conjugates form a normal basis.
inline FiniteField::Element normal_basis_find(const MooreContext& ctx, const FiniteField& big) {
  for (u64 z = 1; z < big.order(); ++z) {
    if (!big.is_zero(det_field(big, frobenius_matrix(big, z, ctx.q, ctx.n)))) return z;
  }
  fail(ErrorCode::VerificationFailed, "no normal basis element found");
}

/// w with M(w) = M(z)^{-1}.
inline FiniteField::Element dual_element_w(const MooreContext& ctx, const FiniteField& big, FiniteField::Element z) {
  const std::size_t n = ctx.n;
  require(!big.is_zero(det_field(big, frobenius_matrix(big, z, ctx.q, n))), ErrorCode::SingularMooreMatrix,
          "z does not generate a normal basis");
  std::vector<FiniteField::Element> conj(n);
  conj[0] = z;
  for (std::size_t k = 1; k < n; ++k) conj[k] = big.pow(conj[k - 1], static_cast<long>(ctx.q));
  const auto full = moore_det_of(big, conj, ctx.q);
  require(!big.is_zero(full), ErrorCode::SingularMooreMatrix, "Moore determinant of the conjugates vanishes");
  std::vector<FiniteField::Element> head(conj.begin(), conj.end() - 1);
  const auto numer = big.pow(big.pow(moore_det_of(big, head, ctx.q), static_cast<long>(ctx.q)), static_cast<long>(ctx.q));
  const auto w = big.div(numer, full);
  const auto prod = mat_mul(big, frobenius_matrix(big, w, ctx.q, n), frobenius_matrix(big, z, ctx.q, n));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      require(prod[i][j] == (i == j ? big.one() : big.zero()), ErrorCode::VerificationFailed, "M(w) M(z) != I");
    }
  }
  return w;
}

/// Delta(c, X_2, ..., X_n) with a constant first argument, over GF(q^n).
inline FPoly moore_det_with_constant(const RingPtr<FiniteField>& big_ring, FiniteField::Element c, u64 q,
                                     std::size_t n) {
  std::vector<FPoly> items{FPoly::constant(big_ring, c)};
  for (std::size_t j = 1; j < n; ++j) items.push_back(FPoly::variable(big_ring, j));
  return moore_det(items, q, big_ring);
}

/// Delta_i = (-1)^i sum_k w^{q^{i+k}} Delta(z^{q^k}, X_2, ..., X_n).
inline FPoly delta_i_normal_basis(const MooreContext& ctx, const RingPtr<FiniteField>& big_ring, std::size_t i,
                                  FiniteField::Element z) {
  require(i < ctx.n, ErrorCode::IndexOutOfRange, "Delta index must be below n");
  if (ctx.n == 1) return FPoly::one(big_ring);
  const auto& big = *big_ring->field;
  const auto w = dual_element_w(ctx, big, z);
  FPoly acc(big_ring);
  auto wi = frobenius_power(big, w, ctx.q, i);
  auto zk = z;
  for (std::size_t k = 0; k < ctx.n; ++k) {
    acc += moore_det_with_constant(big_ring, zk, ctx.q, ctx.n).scaled(wi);
    wi = big.pow(wi, static_cast<long>(ctx.q));
    zk = big.pow(zk, static_cast<long>(ctx.q));
  }
  return i % 2 == 1 ? -acc : acc;
}

/// Minimal-polynomial data of alpha over GF(q): f = X^n + b_{n-1} X^{n-1} + ... + b_0,
/// and a_k = -(1/f'(alpha)) sum_{j<=k} alpha^{-k-1+j} b_j.
struct MinPolyData {
  std::vector<FiniteField::Element> b;  // b_0..b_n, b_n = 1
  FiniteField::Element fprime_alpha;
  std::vector<FiniteField::Element> a;  // a_0..a_{n-1}
};

inline void require_degree_n(const MooreContext& ctx, const FiniteField& big, FiniteField::Element alpha) {
  auto x = alpha;
  for (std::size_t k = 1; k <= ctx.n; ++k) {
    x = big.pow(x, static_cast<long>(ctx.q));
    if (k < ctx.n) require(x != alpha, ErrorCode::DegreeTooSmall, "alpha lies in a proper subfield");
  }
  require(x == alpha, ErrorCode::DegreeTooSmall, "alpha does not lie in GF(q^n)");
}

/// The canonical generator of GF(q^n) if it has degree n over GF(q), else
/// the first such element in representative order.
inline FiniteField::Element default_alpha(const MooreContext& ctx, const FiniteField& big) {
  auto ok = [&](FiniteField::Element a) {
    try {
      require_degree_n(ctx, big, a);
      return true;
    } catch (const Error&) {
      return false;
    }
  };
  if (ok(big.canonical_generator())) return big.canonical_generator();
  for (u64 a = 1; a < big.order(); ++a) {
    if (ok(a)) return a;
  }
  fail(ErrorCode::DegreeTooSmall, "no element of degree n");
}

inline MinPolyData min_poly_coeffs_a_k(const MooreContext& ctx, const FiniteField& big, FiniteField::Element alpha) {
  require_degree_n(ctx, big, alpha);
  const std::size_t n = ctx.n;
  upoly::Poly<FiniteField> f{big.one()};
  auto conj = alpha;
  for (std::size_t i = 0; i < n; ++i) {
    f = upoly::mul(big, f, upoly::Poly<FiniteField>{big.neg(conj), big.one()});
    conj = big.pow(conj, static_cast<long>(ctx.q));
  }
  for (const auto& c : f) {
    require(big.pow(c, static_cast<long>(ctx.q)) == c, ErrorCode::VerificationFailed,
            "minimal polynomial coefficient outside GF(q)");
  }
  MinPolyData d;
  d.b = f;
  d.fprime_alpha = upoly::eval(big, upoly::derivative(big, f), alpha);
  const auto scale = big.neg(big.inv(d.fprime_alpha));
  const auto alpha_inv = big.inv(alpha);
  for (std::size_t k = 0; k < n; ++k) {
    auto sum = big.zero();
    for (std::size_t j = 0; j <= k; ++j) {
      sum = big.add(sum, big.mul(big.pow(alpha_inv, static_cast<long>(k + 1 - j)), d.b[j]));
    }
    d.a.push_back(big.mul(scale, sum));
  }
  // g(X) = sum_k a_k X^k satisfies g(alpha^{q^i}) = [i == 0].
  conj = alpha;
  for (std::size_t i = 0; i < n; ++i) {
    const auto g = upoly::eval(big, d.a, conj);
    require(g == (i == 0 ? big.one() : big.zero()), ErrorCode::VerificationFailed, "g(alpha_i) != delta_{i0}");
    conj = big.pow(conj, static_cast<long>(ctx.q));
  }
  return d;
}

/// Delta_i = (-1)^i sum_k alpha^{k q^i} Delta(a_k, X_2, ..., X_n).
inline FPoly delta_i_minpoly(const MooreContext& ctx, const RingPtr<FiniteField>& big_ring, std::size_t i,
                             FiniteField::Element alpha) {
  require(i < ctx.n, ErrorCode::IndexOutOfRange, "Delta index must be below n");
  const auto& big = *big_ring->field;
  const auto data = min_poly_coeffs_a_k(ctx, big, alpha);
  if (ctx.n == 1) return FPoly::one(big_ring);
  const auto alpha_qi = frobenius_power(big, alpha, ctx.q, i);
  FPoly acc(big_ring);
  auto weight = big.one();
  for (std::size_t k = 0; k < ctx.n; ++k) {
    acc += moore_det_with_constant(big_ring, data.a[k], ctx.q, ctx.n).scaled(weight);
    weight = big.mul(weight, alpha_qi);
  }
  return i % 2 == 1 ? -acc : acc;
}

/// The same sum with a_k expanded: since Delta is GF(q)-linear in its first
/// argument, Delta_i = (-1)^{i+1} sum_k alpha^{k q^i} sum_{j<=k} b_j Delta(alpha^{-k-1+j}/f'(alpha), X_2, ...).
/// `sign_exponent` overrides i+1 so that alternative sign conventions can be tested.
inline FPoly delta_i_minpoly_substituted(const MooreContext& ctx, const RingPtr<FiniteField>& big_ring, std::size_t i,
                                         FiniteField::Element alpha, std::optional<long> sign_exponent = {}) {
  require(i < ctx.n, ErrorCode::IndexOutOfRange, "Delta index must be below n");
  const auto& big = *big_ring->field;
  const auto data = min_poly_coeffs_a_k(ctx, big, alpha);
  if (ctx.n == 1) return FPoly::one(big_ring);
  const auto alpha_qi = frobenius_power(big, alpha, ctx.q, i);
  const auto alpha_inv = big.inv(alpha), fp_inv = big.inv(data.fprime_alpha);
  FPoly acc(big_ring);
  auto weight = big.one();
  for (std::size_t k = 0; k < ctx.n; ++k) {
    for (std::size_t j = 0; j <= k; ++j) {
      if (big.is_zero(data.b[j])) continue;
      const auto arg = big.mul(big.pow(alpha_inv, static_cast<long>(k + 1 - j)), fp_inv);
      acc += moore_det_with_constant(big_ring, arg, ctx.q, ctx.n).scaled(big.mul(weight, data.b[j]));
    }
    weight = big.mul(weight, alpha_qi);
  }
  const long s = sign_exponent.value_or(static_cast<long>(i) + 1);
  return s % 2 != 0 ? -acc : acc;
}

/// Embeds a GF(p)-polynomial into a ring over an extension of GF(p).
inline FPoly embed_prime(const FPoly& f, const RingPtr<FiniteField>& target) {
  require(f.field().degree() == 1 && f.field().characteristic() == target->field->characteristic(),
          ErrorCode::FieldMismatch, "source must be the prime field of the target");
  return f.map_coefficients(target, [](FiniteField::Element c) { return c; });
}

}  // namespace radext::charp

#endif  // RADEXT_CHARP_HPP
