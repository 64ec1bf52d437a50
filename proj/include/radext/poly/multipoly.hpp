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

#ifndef RADEXT_POLY_MULTIPOLY_HPP
#define RADEXT_POLY_MULTIPOLY_HPP

#include <algorithm>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "radext/error.hpp"
#include "radext/field/concepts.hpp"
#include "radext/poly/monomial.hpp"

namespace radext {

/// A coefficient field together with an ordered list of variable names.
template <CoefficientField F>
struct PolyRing {
  std::shared_ptr<const F> field;
  std::vector<std::string> vars;

  std::size_t nvars() const { return vars.size(); }

  std::size_t index_of(const std::string& name) const {
    for (std::size_t i = 0; i < vars.size(); ++i) {
      if (vars[i] == name) return i;
    }
    fail(ErrorCode::UnboundVariable, "unknown variable '" + name + "'");
  }
  bool has_var(const std::string& name) const { return std::find(vars.begin(), vars.end(), name) != vars.end(); }
};

template <CoefficientField F>
using RingPtr = std::shared_ptr<const PolyRing<F>>;

template <CoefficientField F>
RingPtr<F> make_ring(std::shared_ptr<const F> field, std::vector<std::string> vars) {
  require(vars.size() <= kMaxVars, ErrorCode::TooLarge, "at most 8 variables are supported");
  for (std::size_t i = 0; i < vars.size(); ++i) {
    for (std::size_t j = i + 1; j < vars.size(); ++j) {
      require(vars[i] != vars[j], ErrorCode::InvalidParameter, "duplicate variable name " + vars[i]);
    }
  }
  return std::make_shared<const PolyRing<F>>(PolyRing<F>{std::move(field), std::move(vars)});
}

/// Variables "X1", ..., "Xn", optionally followed by extra names such as "T".
inline std::vector<std::string> x_variables(std::size_t n, std::vector<std::string> extra = {}) {
  std::vector<std::string> vars;
  for (std::size_t i = 1; i <= n; ++i) vars.push_back("X" + std::to_string(i));
  for (auto& e : extra) vars.push_back(std::move(e));
  return vars;
}

template <CoefficientField F>
void check_same_ring(const RingPtr<F>& a, const RingPtr<F>& b) {
  if (a == b) return;
  require(a->vars == b->vars, ErrorCode::VariableMismatch, "polynomials use different variable lists");
  require(a->field == b->field || *a->field == *b->field, ErrorCode::FieldMismatch,
          "polynomials are over different fields");
}

/// Sparse multivariate polynomial. Terms are kept sorted by decreasing grlex
/// order with no zero coefficients; the zero polynomial has no terms.
template <CoefficientField F>
class MultiPoly {
 public:
  using Element = typename F::Element;
  struct Term {
    Monomial mono;
    Element coeff;
  };

  explicit MultiPoly(RingPtr<F> ring) : ring_(std::move(ring)) {}

  static MultiPoly constant(RingPtr<F> ring, Element c) {
    MultiPoly r(std::move(ring));
    if (!r.field().is_zero(c)) r.terms_.push_back({Monomial{}, std::move(c)});
    return r;
  }
  static MultiPoly constant(RingPtr<F> ring, long c) {
    auto e = ring->field->from_int(c);
    return constant(std::move(ring), std::move(e));
  }
  static MultiPoly one(RingPtr<F> ring) { return constant(ring, ring->field->one()); }
  static MultiPoly variable(RingPtr<F> ring, std::size_t i, std::uint32_t power = 1) {
    require(i < ring->nvars(), ErrorCode::IndexOutOfRange, "variable index out of range");
    auto c = ring->field->one();
    return monomial(std::move(ring), Monomial::of_variable(i, power), std::move(c));
  }
  static MultiPoly variable(RingPtr<F> ring, const std::string& name) {
    const auto i = ring->index_of(name);
    return variable(std::move(ring), i);
  }
  static MultiPoly monomial(RingPtr<F> ring, const Monomial& mono, Element c) {
    MultiPoly r(std::move(ring));
    if (!r.field().is_zero(c)) r.terms_.push_back({mono, std::move(c)});
    return r;
  }
  /// Builds a polynomial from arbitrary terms: like monomials are combined and
  /// zeros dropped.
  static MultiPoly from_terms(RingPtr<F> ring, std::vector<Term> terms) {
    MultiPoly r(std::move(ring));
    std::sort(terms.begin(), terms.end(), [](const Term& a, const Term& b) { return grlex_greater(a.mono, b.mono); });
    const F& f = r.field();
    for (auto& t : terms) {
      if (!r.terms_.empty() && r.terms_.back().mono == t.mono) {
        r.terms_.back().coeff = f.add(r.terms_.back().coeff, t.coeff);
      } else {
        r.terms_.push_back(std::move(t));
      }
    }
    r.prune();
    return r;
  }

  const RingPtr<F>& ring() const { return ring_; }
  const F& field() const { return *ring_->field; }
  const std::vector<Term>& terms() const { return terms_; }
  std::size_t size() const { return terms_.size(); }
  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const { return terms_.empty() || (terms_.size() == 1 && terms_[0].mono.is_one()); }
  Element constant_value() const {
    require(is_constant(), ErrorCode::InvalidParameter, "polynomial is not constant");
    return terms_.empty() ? field().zero() : terms_[0].coeff;
  }
  bool is_one() const { return is_constant() && !terms_.empty() && terms_[0].coeff == field().one(); }
  const Term& leading_term() const {
    require(!terms_.empty(), ErrorCode::InvalidParameter, "zero polynomial has no leading term");
    return terms_.front();
  }
  long total_degree() const { return terms_.empty() ? -1 : static_cast<long>(terms_.front().mono.degree()); }
  long degree_in(std::size_t var) const {
    long d = -1;
    for (const auto& t : terms_) d = std::max(d, static_cast<long>(t.mono.exps[var]));
    return d;
  }

  friend bool operator==(const MultiPoly& a, const MultiPoly& b) {
    check_same_ring(a.ring_, b.ring_);
    if (a.terms_.size() != b.terms_.size()) return false;
    for (std::size_t i = 0; i < a.terms_.size(); ++i) {
      if (!(a.terms_[i].mono == b.terms_[i].mono) || !(a.terms_[i].coeff == b.terms_[i].coeff)) return false;
    }
    return true;
  }

  friend MultiPoly operator+(const MultiPoly& a, const MultiPoly& b) { return merge(a, b, false); }
  friend MultiPoly operator-(const MultiPoly& a, const MultiPoly& b) { return merge(a, b, true); }
  MultiPoly operator-() const {
    MultiPoly r = *this;
    for (auto& t : r.terms_) t.coeff = field().neg(t.coeff);
    return r;
  }
  MultiPoly& operator+=(const MultiPoly& b) { return *this = *this + b; }
  MultiPoly& operator-=(const MultiPoly& b) { return *this = *this - b; }
  MultiPoly& operator*=(const MultiPoly& b) { return *this = *this * b; }

  MultiPoly scaled(const Element& c) const {
    if (field().is_zero(c)) return MultiPoly(ring_);
    MultiPoly r = *this;
    for (auto& t : r.terms_) t.coeff = field().mul(t.coeff, c);
    return r;
  }
  /// Multiplication by a monomial keeps the term order, so no re-sort.
  MultiPoly shifted(const Monomial& mono, const Element& c) const {
    if (field().is_zero(c)) return MultiPoly(ring_);
    MultiPoly r(ring_);
    r.terms_.reserve(terms_.size());
    for (const auto& t : terms_) r.terms_.push_back({t.mono * mono, field().mul(t.coeff, c)});
    return r;
  }

  friend MultiPoly operator*(const MultiPoly& a, const MultiPoly& b) {
    check_same_ring(a.ring_, b.ring_);
    if (a.is_zero() || b.is_zero()) return MultiPoly(a.ring_);
    if (a.terms_.size() == 1) return b.shifted(a.terms_[0].mono, a.terms_[0].coeff);
    if (b.terms_.size() == 1) return a.shifted(b.terms_[0].mono, b.terms_[0].coeff);
    const F& f = a.field();
    std::unordered_map<Monomial, Element, MonomialHash> acc;
    acc.reserve(a.terms_.size() * b.terms_.size());
    for (const auto& ta : a.terms_) {
      for (const auto& tb : b.terms_) {
        auto prod = f.mul(ta.coeff, tb.coeff);
        auto [it, inserted] = acc.try_emplace(ta.mono * tb.mono, prod);
        if (!inserted) it->second = f.add(it->second, prod);
      }
    }
    MultiPoly r(a.ring_);
    r.terms_.reserve(acc.size());
    for (auto& [mono, coeff] : acc) {
      if (!f.is_zero(coeff)) r.terms_.push_back({mono, std::move(coeff)});
    }
    r.sort_terms();
    return r;
  }

  MultiPoly pow(unsigned long k) const {
    MultiPoly result = one(ring_), base = *this;
    while (k != 0) {
      if (k & 1u) result = result * base;
      k >>= 1u;
      if (k != 0) base = base * base;
    }
    return result;
  }

  /// Evaluates at a full point (one value per ring variable).
  Element evaluate(std::span<const Element> point) const {
    require(point.size() == ring_->nvars(), ErrorCode::UnboundVariable, "evaluation point has wrong arity");
    const F& f = field();
    std::vector<std::vector<Element>> powers(point.size());
    auto power_of = [&](std::size_t var, std::uint32_t e) -> const Element& {
      auto& cache = powers[var];
      if (cache.empty()) cache.push_back(f.one());
      while (cache.size() <= e) cache.push_back(f.mul(cache.back(), point[var]));
      return cache[e];
    };
    Element acc = f.zero();
    for (const auto& t : terms_) {
      Element v = t.coeff;
      for (std::size_t i = 0; i < point.size(); ++i) {
        if (t.mono.exps[i] != 0) v = f.mul(v, power_of(i, t.mono.exps[i]));
      }
      acc = f.add(acc, v);
    }
    return acc;
  }

  /// Replaces variable i by images[i] where present; the images live in `target`.
  MultiPoly substitute(const std::vector<std::optional<MultiPoly>>& images, RingPtr<F> target) const {
    require(images.size() == ring_->nvars(), ErrorCode::UnboundVariable, "substitution has wrong arity");
    std::vector<std::vector<MultiPoly>> powers(images.size());
    auto power_of = [&](std::size_t var, std::uint32_t e) -> const MultiPoly& {
      auto& cache = powers[var];
      if (cache.empty()) cache.push_back(one(target));
      while (cache.size() <= e) cache.push_back(cache.back() * *images[var]);
      return cache[e];
    };
    std::unordered_map<Monomial, Element, MonomialHash> acc;
    const F& f = field();
    for (const auto& t : terms_) {
      // Unsubstituted variables must exist in the target under the same name.
      Monomial kept;
      MultiPoly factor = constant(target, t.coeff);
      for (std::size_t i = 0; i < images.size(); ++i) {
        const auto e = t.mono.exps[i];
        if (e == 0) continue;
        if (images[i]) {
          factor = factor * power_of(i, e);
        } else {
          kept.exps[target->index_of(ring_->vars[i])] += e;
        }
      }
      for (const auto& ft : factor.terms_) {
        auto [it, inserted] = acc.try_emplace(ft.mono * kept, ft.coeff);
        if (!inserted) it->second = f.add(it->second, ft.coeff);
      }
    }
    MultiPoly r(target);
    for (auto& [mono, coeff] : acc) {
      if (!f.is_zero(coeff)) r.terms_.push_back({mono, std::move(coeff)});
    }
    r.sort_terms();
    return r;
  }

  /// Moves the polynomial into a ring whose variable list contains all of this
  /// ring's variables (matched by name).
  MultiPoly lift(RingPtr<F> target) const {
    // Variables that do not occur need not exist in the target.
    Monomial used;
    for (const auto& t : terms_) used = Monomial::lcm(used, t.mono);
    std::vector<std::size_t> where(ring_->nvars(), 0);
    for (std::size_t i = 0; i < where.size(); ++i) {
      if (used.exps[i] != 0) where[i] = target->index_of(ring_->vars[i]);
    }
    std::vector<Term> out;
    out.reserve(terms_.size());
    for (const auto& t : terms_) {
      Monomial m;
      for (std::size_t i = 0; i < where.size(); ++i) {
        if (used.exps[i] != 0) m.exps[where[i]] = t.mono.exps[i];
      }
      out.push_back({m, t.coeff});
    }
    return from_terms(std::move(target), std::move(out));
  }

  /// X_i -> c X_i.
  MultiPoly scale_variable(std::size_t i, const Element& c) const {
    MultiPoly r = *this;
    for (auto& t : r.terms_) {
      if (t.mono.exps[i] != 0) t.coeff = field().mul(t.coeff, field().pow(c, static_cast<long>(t.mono.exps[i])));
    }
    r.prune();
    return r;
  }

  MultiPoly swap_variables(std::size_t i, std::size_t j) const {
    std::vector<Term> out = terms_;
    for (auto& t : out) std::swap(t.mono.exps[i], t.mono.exps[j]);
    return from_terms(ring_, std::move(out));
  }

  /// Greatest common monomial divisor of all terms (1 for the zero polynomial).
  Monomial monomial_content() const {
    if (terms_.empty()) return Monomial{};
    Monomial g = terms_.front().mono;
    for (const auto& t : terms_) g = Monomial::gcd(g, t.mono);
    return g;
  }
  /// Requires mono to divide every term.
  MultiPoly divide_monomial(const Monomial& mono) const {
    MultiPoly r = *this;
    for (auto& t : r.terms_) {
      require(mono.divides(t.mono), ErrorCode::InvalidParameter, "monomial does not divide polynomial");
      t.mono = t.mono / mono;
    }
    return r;
  }

  /// Quotient when `divisor` divides this polynomial exactly, otherwise nothing.
  std::optional<MultiPoly> exact_div(const MultiPoly& divisor) const {
    check_same_ring(ring_, divisor.ring_);
    require(!divisor.is_zero(), ErrorCode::DivisionByZero, "division by the zero polynomial");
    const F& f = field();
    const auto& lead = divisor.terms_.front();
    const auto lead_inv = f.inv(lead.coeff);
    if (divisor.terms_.size() == 1) {
      MultiPoly q(ring_);
      for (const auto& t : terms_) {
        if (!lead.mono.divides(t.mono)) return std::nullopt;
        q.terms_.push_back({t.mono / lead.mono, f.mul(t.coeff, lead_inv)});
      }
      return q;
    }
    MultiPoly rem = *this;
    std::vector<Term> quot;
    while (!rem.is_zero()) {
      const auto& rt = rem.terms_.front();
      if (!lead.mono.divides(rt.mono)) return std::nullopt;
      const Monomial qm = rt.mono / lead.mono;
      const Element qc = f.mul(rt.coeff, lead_inv);
      rem = rem - divisor.shifted(qm, qc);
      quot.push_back({qm, qc});
    }
    MultiPoly q(ring_);
    q.terms_ = std::move(quot);  // generated in decreasing order
    return q;
  }

  /// Coefficient-wise image in another ring with the same number of variables.
  template <CoefficientField G, class Fn>
  MultiPoly<G> map_coefficients(RingPtr<G> target, Fn&& fn) const {
    require(target->nvars() == ring_->nvars(), ErrorCode::VariableMismatch, "ring arity differs");
    std::vector<typename MultiPoly<G>::Term> out;
    out.reserve(terms_.size());
    for (const auto& t : terms_) out.push_back({t.mono, fn(t.coeff)});
    return MultiPoly<G>::from_terms(std::move(target), std::move(out));
  }

  /// Collects coefficients with respect to variable `var`: result[k] is the
  /// coefficient of var^k, as a polynomial in the remaining variables (var
  /// exponent zeroed, same ring).
  std::vector<MultiPoly> coefficients_in(std::size_t var) const {
    const long d = degree_in(var);
    std::vector<std::vector<Term>> buckets(static_cast<std::size_t>(d + 1));
    for (const auto& t : terms_) {
      Term c = t;
      c.mono.exps[var] = 0;
      buckets[t.mono.exps[var]].push_back(std::move(c));
    }
    std::vector<MultiPoly> out;
    for (auto& b : buckets) {
      MultiPoly p(ring_);
      p.terms_ = std::move(b);
      p.sort_terms();
      out.push_back(std::move(p));
    }
    return out;
  }

 private:
  static MultiPoly merge(const MultiPoly& a, const MultiPoly& b, bool subtract) {
    check_same_ring(a.ring_, b.ring_);
    const F& f = a.field();
    MultiPoly r(a.ring_);
    r.terms_.reserve(a.terms_.size() + b.terms_.size());
    std::size_t i = 0, j = 0;
    while (i < a.terms_.size() || j < b.terms_.size()) {
      if (j == b.terms_.size() || (i < a.terms_.size() && grlex_greater(a.terms_[i].mono, b.terms_[j].mono))) {
        r.terms_.push_back(a.terms_[i++]);
      } else if (i == a.terms_.size() || grlex_greater(b.terms_[j].mono, a.terms_[i].mono)) {
        const auto& t = b.terms_[j++];
        r.terms_.push_back({t.mono, subtract ? f.neg(t.coeff) : t.coeff});
      } else {
        auto c = subtract ? f.sub(a.terms_[i].coeff, b.terms_[j].coeff) : f.add(a.terms_[i].coeff, b.terms_[j].coeff);
        if (!f.is_zero(c)) r.terms_.push_back({a.terms_[i].mono, std::move(c)});
        ++i;
        ++j;
      }
    }
    return r;
  }

  void sort_terms() {
    std::sort(terms_.begin(), terms_.end(), [](const Term& a, const Term& b) { return grlex_greater(a.mono, b.mono); });
  }
  void prune() {
    const F& f = field();
    std::erase_if(terms_, [&](const Term& t) { return f.is_zero(t.coeff); });
  }

  template <CoefficientField G>
  friend class MultiPoly;

  RingPtr<F> ring_;
  std::vector<Term> terms_;
};

}  // namespace radext

#endif  // RADEXT_POLY_MULTIPOLY_HPP
