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

#ifndef RADEXT_VERIFY_HPP
#define RADEXT_VERIFY_HPP

#include <algorithm>
#include <cstdint>
#include <functional>
#include <optional>
#include <random>
#include <span>
#include <string>
#include <vector>

#include "radext/error.hpp"
#include "radext/field.hpp"
#include "radext/poly.hpp"

namespace radext::verify {

/// Trial i draws from std::mt19937_64 seeded with split_seed(seed, i).
inline std::uint64_t split_seed(std::uint64_t seed, std::uint64_t trial) {
  std::uint64_t z = seed + 0x9E3779B97F4A7C15ULL * (trial + 1);
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
  return z ^ (z >> 31);
}

struct TrialPlan {
  std::size_t trials = 100;
  std::uint64_t seed = 1;
  std::size_t retry_limit = 0;  // 0 selects 20 * trials

  std::size_t effective_retry_limit() const { return retry_limit == 0 ? 20 * trials : retry_limit; }
  void validate() const {
    require(trials >= 1, ErrorCode::InvalidParameter, "trials must be positive");
    require(effective_retry_limit() >= trials, ErrorCode::InvalidParameter, "retry limit must be at least trials");
  }
};

struct Counterexample {
  std::vector<std::string> point;  // x_1..x_n, then T
  std::string expected;
  std::string got;
};

struct Verdict {
  bool passed = true;
  std::size_t trials_run = 0;
  std::size_t retries = 0;
  std::optional<Counterexample> counterexample;
};

enum class Agreement { FreeT, BoundT };

/// Degree of a common multiple of the coefficient denominators: the lcm of
/// their monomial parts times each distinct remaining factor once.
template <CoefficientField F>
long common_denominator_degree(const TPoly<F>& f) {
  Monomial mono;
  std::vector<MultiPoly<F>> parts;
  long deg = 0;
  for (const auto& term : f.terms) {
    const auto& d = term.coeff.den();
    const Monomial c = d.monomial_content();
    mono = Monomial::lcm(mono, c);
    auto rest = d.divide_monomial(c);
    if (std::find(parts.begin(), parts.end(), rest) != parts.end()) continue;
    deg += rest.total_degree();
    parts.push_back(std::move(rest));
  }
  return deg + static_cast<long>(mono.degree());
}

/// Anything that maps (x_1..x_n, T) to a field element and reconstructs X_target.
template <CoefficientField F>
struct Candidate {
  using Element = typename F::Element;
  std::shared_ptr<const F> field;
  std::size_t nvars = 0;
  std::size_t target = 0;
  long denominator_degree = 0;
  std::function<Element(std::span<const Element>, const Element&)> eval;

  static Candidate of(const TPoly<F>& f) {
    return Candidate{f.ring->field, f.nvars(), f.target, common_denominator_degree(f),
                     [f](std::span<const Element> x, const Element& t) { return f.evaluate(x, t); }};
  }

  /// A rational function in the ring X1..Xn,T (T last).
  static Candidate of(const RatFun<F>& f, std::size_t target = 0) {
    const std::size_t n = f.ring()->nvars() - 1;
    return Candidate{f.ring()->field, n, target, f.den().total_degree(),
                     [f](std::span<const Element> x, const Element& t) {
                       std::vector<Element> pt(x.begin(), x.end());
                       pt.push_back(t);
                       return f.evaluate(pt);
                     }};
  }
};

namespace detail {

template <CoefficientField F>
void require_large_enough(const F& field, long degree) {
  if (field.characteristic() == 0) return;
  if constexpr (requires { field.order(); }) {
    require(field.order() > static_cast<u64>(2 * degree), ErrorCode::FieldTooSmall,
            "field order must exceed twice the total denominator degree");
  }
}

template <CoefficientField F>
std::vector<std::string> render(const F& field, std::span<const typename F::Element> x, const typename F::Element& t) {
  std::vector<std::string> out;
  for (const auto& v : x) out.push_back(field.to_string(v));
  out.push_back(field.to_string(t));
  return out;
}

// Runs `trial(rng, x, t)` on fresh points; redraws when it throws
// EvalDenominatorZero. `trial` returns nullopt on success, else (expected, got).
template <CoefficientField F, class Trial>
Verdict run(const F& field, std::size_t nvars, const TrialPlan& plan, bool free_t, Trial&& trial) {
  plan.validate();
  Verdict v;
  const std::size_t limit = plan.effective_retry_limit();
  for (std::size_t i = 0; i < plan.trials; ++i) {
    std::mt19937_64 rng(split_seed(plan.seed, i));
    for (;;) {
      std::vector<typename F::Element> x;
      for (std::size_t k = 0; k < nvars; ++k) x.push_back(field.sample(rng));
      auto t = field.zero();
      if (free_t) {
        t = field.sample(rng);
      } else {
        for (const auto& xi : x) t = field.add(t, xi);
      }
      std::optional<std::pair<typename F::Element, typename F::Element>> bad;
      try {
        bad = trial(std::span<const typename F::Element>(x), t);
      } catch (const Error& e) {
        if (e.code() != ErrorCode::EvalDenominatorZero) throw;
        require(++v.retries <= limit, ErrorCode::RetriesExhausted, "too many points hit a vanishing denominator");
        continue;
      }
      ++v.trials_run;
      if (bad) {
        v.passed = false;
        v.counterexample =
            Counterexample{render(field, std::span<const typename F::Element>(x), t), field.to_string(bad->first),
                           field.to_string(bad->second)};
        return v;
      }
      break;
    }
  }
  return v;
}

}  // namespace detail

/// Checks f(x, x_1 + ... + x_n) = x_target at random points.
template <CoefficientField F>
Verdict verify_reconstruction(const Candidate<F>& f, const TrialPlan& plan) {
  const F& field = *f.field;
  detail::require_large_enough(field, f.denominator_degree);
  return detail::run(field, f.nvars, plan, false,
                     [&](std::span<const typename F::Element> x, const typename F::Element& t)
                         -> std::optional<std::pair<typename F::Element, typename F::Element>> {
                       const auto got = f.eval(x, t);
                       if (got == x[f.target]) return std::nullopt;
                       return std::make_pair(x[f.target], got);
                     });
}

template <CoefficientField F>
Verdict verify_reconstruction(const TPoly<F>& f, const TrialPlan& plan) {
  return verify_reconstruction(Candidate<F>::of(f), plan);
}

/// Compares two candidates at common points, with T free or bound to the sum.
template <CoefficientField F>
Verdict verify_cross(const Candidate<F>& a, const Candidate<F>& b, const TrialPlan& plan, Agreement mode) {
  require(a.nvars == b.nvars, ErrorCode::VariableMismatch, "candidates have different variable counts");
  require(*a.field == *b.field, ErrorCode::FieldMismatch, "candidates are over different fields");
  const F& field = *a.field;
  detail::require_large_enough(field, a.denominator_degree + b.denominator_degree);
  return detail::run(field, a.nvars, plan, mode == Agreement::FreeT,
                     [&](std::span<const typename F::Element> x, const typename F::Element& t)
                         -> std::optional<std::pair<typename F::Element, typename F::Element>> {
                       const auto va = a.eval(x, t);
                       const auto vb = b.eval(x, t);
                       if (va == vb) return std::nullopt;
                       return std::make_pair(va, vb);
                     });
}

/// Copy of f with the coefficient of T^t replaced: c -> 2c if c != 0 (c + 1
/// in characteristic 2), and 0 -> 1.
template <CoefficientField F>
TPoly<F> mutate_coefficient(const TPoly<F>& f, unsigned long t) {
  TPoly<F> g = f;
  const F& k = f.field();
  for (auto& term : g.terms) {
    if (term.t != t) continue;
    term.coeff = k.characteristic() == 2 ? term.coeff + RatFun<F>::one(f.ring) : term.coeff.scaled(k.from_int(2));
    return g;
  }
  auto it = g.terms.begin();
  while (it != g.terms.end() && it->t < t) ++it;
  g.terms.insert(it, {t, RatFun<F>::one(f.ring)});
  return g;
}

/// Coefficients mapped through a field embedding into `target`.
template <CoefficientField F, CoefficientField G, class Map>
TPoly<G> map_tpoly(const TPoly<F>& f, std::shared_ptr<const G> target, Map&& map) {
  auto ring = make_ring(std::move(target), f.ring->vars);
  TPoly<G> out{ring, {}, f.m, f.target, f.method};
  for (const auto& term : f.terms) {
    out.terms.push_back({term.t, RatFun<G>(term.coeff.num().map_coefficients(ring, map),
                                           term.coeff.den().map_coefficients(ring, map))});
  }
  return out;
}

inline TPoly<FiniteField> embed(const TPoly<FiniteField>& f, const FiniteFieldPtr& target) {
  FiniteFieldEmbedding emb(f.ring->field, target);
  return map_tpoly(f, target, [&](FiniteField::Element c) { return emb(c); });
}

inline RatFun<FiniteField> embed(const RatFun<FiniteField>& f, const FiniteFieldPtr& target) {
  FiniteFieldEmbedding emb(f.ring()->field, target);
  auto ring = make_ring(target, f.ring()->vars);
  auto map = [&](FiniteField::Element c) { return emb(c); };
  return RatFun<FiniteField>(f.num().map_coefficients(ring, map), f.den().map_coefficients(ring, map));
}

}  // namespace radext::verify

#endif  // RADEXT_VERIFY_HPP
