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

// Acceptance checks 1-11. Prints one PASS/FAIL line per criterion and exits
// non-zero if any criterion fails or exceeds its time budget.

#include <chrono>
#include <cstdio>
#include <functional>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "cli_app.hpp"
#include "radext/charp.hpp"
#include "radext/general.hpp"
#include "radext/verify.hpp"

namespace {

using namespace radext;

struct Outcome {
  bool ok = true;
  std::string detail;
};

struct Criterion {
  int id;
  const char* title;
  double budget_seconds;
  std::function<Outcome()> run;
};

/// Collects failures; ok() is true when none were recorded.
class Tally {
 public:
  void check(bool condition, const std::string& what) {
    ++checks_;
    if (!condition && first_failure_.empty()) first_failure_ = what;
    failed_ = failed_ || !condition;
  }
  Outcome outcome(const std::string& summary) const {
    if (failed_) return {false, "first failure: " + first_failure_};
    return {true, summary + ", " + std::to_string(checks_) + " checks"};
  }

 private:
  bool failed_ = false;
  std::size_t checks_ = 0;
  std::string first_failure_;
};

template <CoefficientField F>
MultiPoly<F> var(const RingPtr<F>& ring, std::size_t i) {
  return MultiPoly<F>::variable(ring, i);
}

template <CoefficientField F>
MultiPoly<F> cst(const RingPtr<F>& ring, long c) {
  return MultiPoly<F>::constant(ring, c);
}

template <CoefficientField F>
RatFun<F> x1_of(const TPoly<F>& f) {
  return RatFun<F>(var(f.ring, 0));
}

// X1 = (T^2 + X1^2 - X2^2) / (2T), and the three-variable display.
template <CoefficientField F>
RatFun<F> displayed_formula(const RingPtr<F>& ring, std::size_t n) {
  const auto t = var(ring, n);
  if (n == 2) {
    const auto x1 = var(ring, 0), x2 = var(ring, 1);
    return RatFun<F>(t.pow(2) + x1.pow(2) - x2.pow(2), cst(ring, 2) * t);
  }
  const auto x1 = var(ring, 0), x2 = var(ring, 1), x3 = var(ring, 2);
  const auto s = t.pow(2) + x1.pow(2) - x2.pow(2) - x3.pow(2);
  return RatFun<F>(s.pow(2) + cst(ring, 4) * t.pow(2) * x1.pow(2) - cst(ring, 4) * x2.pow(2) * x3.pow(2),
                   cst(ring, 4) * t * s);
}

Outcome criterion1() {
  Tally tally;
  for (std::size_t n : {2u, 3u}) {
    const auto ctx = general::rational_context(2, n);
    const auto f = general::reconstruct_general(ctx);
    tally.check(ratfun_equal(f.substitute_T(), x1_of(f)), "T -> sum X is not X1 for n=" + std::to_string(n));
    const auto ring_t = general::ring_with(ctx.field, n, "T");
    const auto shown = displayed_formula(ring_t, n);
    tally.check(general::equal_modulo_minimal_poly(ctx, f.as_ratfun(ring_t), shown),
                "general output differs from the displayed formula modulo mu_T for n=" + std::to_string(n));
    std::vector<std::optional<RatFun<CyclotomicField>>> images(n + 1);
    MultiPoly<CyclotomicField> sum(ring_t);
    for (std::size_t i = 0; i < n; ++i) sum += var(ring_t, i);
    images[n] = RatFun<CyclotomicField>(sum);
    tally.check(ratfun_equal(shown.substitute(images, ring_t), RatFun<CyclotomicField>(var(ring_t, 0))),
                "displayed formula is not X1 at T = sum X for n=" + std::to_string(n));
  }
  return tally.outcome("n=2,3; free-T comparison taken in F(X^m)[T]/(mu_T)");
}

template <CoefficientField F>
void identity_case(Tally& tally, const general::GeneralContext<F>& ctx) {
  const auto f = general::reconstruct_general(ctx);
  tally.check(ratfun_equal(f.substitute_T(), x1_of(f)),
              "identity fails over " + ctx.field->describe() + " m=" + std::to_string(ctx.m) + " n=" + std::to_string(ctx.n));
}

Outcome criterion2() {
  Tally tally;
  const std::pair<long, std::size_t> cases[] = {{2, 2}, {2, 3}, {3, 2}};
  for (auto [m, n] : cases) {
    identity_case(tally, general::rational_context(m, n));
    identity_case(tally, general::finite_context(m == 2 ? 3 : 2, m, n));  // GF(3), GF(4)
  }
  return tally.outcome("Q(eps), GF(3), GF(4)");
}

template <CoefficientField F>
void membership_case(Tally& tally, const TPoly<F>& f, long m, const std::string& label) {
  const auto xs = first_variables(f.nvars());
  for (const auto& term : f.terms) {
    tally.check(is_in_power_subfield(term.coeff, m, xs), label + ": c_" + std::to_string(term.t) + " not invariant");
  }
}

Outcome criterion3() {
  Tally tally;
  const std::pair<long, std::size_t> cases[] = {{2, 2}, {2, 3}, {3, 2}};
  for (auto [m, n] : cases) {
    const auto label = "general m=" + std::to_string(m) + " n=" + std::to_string(n);
    membership_case(tally, general::reconstruct_general(general::rational_context(m, n)), m, label + " Q(eps)");
    membership_case(tally, general::reconstruct_general(general::finite_context(m == 2 ? 3 : 2, m, n)), m, label + " GF(q)");
  }
  const std::pair<u64, long> charp_cases[] = {{3, 2}, {2, 3}, {5, 2}};
  for (auto [p, m] : charp_cases) {
    for (std::size_t n = 1; n <= 3; ++n) {
      const auto ctx = charp::MooreContext::make(p, m, n);
      membership_case(tally, charp::reconstruct_charp(ctx), m,
                      "charp p=" + std::to_string(p) + " m=" + std::to_string(m) + " n=" + std::to_string(n));
    }
  }
  return tally.outcome("both paths");
}

Outcome criterion4() {
  Tally tally;
  const std::pair<u64, long> cases[] = {{3, 2}, {2, 3}, {5, 2}};
  std::size_t points = 0;
  for (auto [p, m] : cases) {
    for (std::size_t n = 1; n <= 3; ++n) {
      const auto ctx = charp::MooreContext::make(p, m, n);
      const auto big = ctx.big_field();
      const auto f = verify::embed(charp::reconstruct_charp(ctx), big);
      std::mt19937_64 rng(verify::split_seed(p * 100 + static_cast<u64>(m) * 10 + n, 0));
      std::size_t failures = 0, accepted = 0;
      for (std::size_t draws = 0; accepted < 100 && draws < 100000; ++draws) {
        std::vector<FiniteField::Element> x(n);
        for (auto& v : x) v = big->sample(rng);
        if (big->is_zero(charp::moore_det_of(*big, x, ctx.q))) continue;
        ++accepted;
        if (f.evaluate_bound(x) != x[0]) ++failures;
      }
      points += accepted;
      const auto label = "p=" + std::to_string(p) + " m=" + std::to_string(m) + " n=" + std::to_string(n);
      tally.check(accepted == 100, label + ": too few points with Delta != 0");
      tally.check(failures == 0, label + ": " + std::to_string(failures) + " failures");
    }
  }
  return tally.outcome(std::to_string(points) + " points of GF(q^n)^n");
}

Outcome criterion5() {
  Tally tally;
  const std::pair<u64, std::size_t> cases[] = {{2, 2}, {2, 3}, {3, 2}, {4, 2}, {5, 2}, {3, 3}};
  for (auto [q, n] : cases) {
    const auto ring = make_ring(FiniteField::prime(as_prime_power(q)->first), x_variables(n));
    tally.check(charp::moore_det_product(ring, q, n) == charp::moore_det_direct(ring, q, n),
                "q=" + std::to_string(q) + " n=" + std::to_string(n));
  }
  return tally.outcome("6 cases");
}

Outcome criterion6() {
  Tally tally;
  const std::pair<u64, std::size_t> cases[] = {{2, 2}, {3, 2}, {2, 3}, {4, 2}};
  for (auto [q, n] : cases) {
    const auto [p, e] = *as_prime_power(q);
    const auto ctx = charp::MooreContext::make(p, 1, n, e);
    const auto big = ctx.big_field();
    const auto big_ring = make_ring(big, x_variables(n));
    const auto z = charp::normal_basis_find(ctx, *big);
    const auto alpha = charp::default_alpha(ctx, *big);
    for (std::size_t i = 0; i < n; ++i) {
      const auto label = "q=" + std::to_string(q) + " n=" + std::to_string(n) + " i=" + std::to_string(i);
      const auto direct = charp::embed_prime(charp::delta_i_direct(ctx.ring(), i, q, n), big_ring);
      tally.check(direct == charp::delta_i_normal_basis(ctx, big_ring, i, z), label + " normal basis");
      tally.check(direct == charp::delta_i_minpoly(ctx, big_ring, i, alpha), label + " minimal polynomial");
      tally.check(direct == charp::delta_i_minpoly_substituted(ctx, big_ring, i, alpha), label + " expanded form");
    }
  }
  return tally.outcome("direct, normal basis, minimal polynomial");
}

Outcome criterion7() {
  Tally tally;
  std::size_t entries = 0;
  const std::pair<long, std::size_t> cases[] = {{2, 2}, {3, 2}, {2, 3}};
  for (auto [m, n] : cases) {
    const auto ctx = general::rational_context(m, n);
    for (std::size_t t = 0; t < ctx.size(); ++t) {
      for (const auto& lambda : ctx.lambdas) {
        ++entries;
        tally.check(ratfun_equal(general::a_coeff_multinomial(ctx, t, lambda), general::a_coeff_character(ctx, t, lambda)),
                    "m=" + std::to_string(m) + " n=" + std::to_string(n) + " t=" + std::to_string(t));
      }
    }
  }
  tally.check(entries == 16 + 81 + 64, "wrong grid size");
  return tally.outcome(std::to_string(entries) + " entries");
}

Outcome criterion8() {
  Tally tally;
  for (long m : {2L, 3L}) {
    const auto ctx = general::rational_context(m, 2);
    using R = RatFun<CyclotomicField>;
    const auto nodes = general::vandermonde_nodes(ctx);
    for (std::size_t j = 0; j < ctx.size(); ++j) {
      const auto row = general::vandermonde_inverse_row(ctx, j);
      for (std::size_t i = 0; i < ctx.size(); ++i) {
        R sum = R::zero(ctx.ring);
        for (std::size_t t = 0; t < row.size(); ++t) sum += row[t] * R(nodes[i].pow(static_cast<long>(t)));
        tally.check(ratfun_equal(sum, i == j ? R::one(ctx.ring) : R::zero(ctx.ring)),
                    "m=" + std::to_string(m) + " i=" + std::to_string(i) + " j=" + std::to_string(j));
      }
    }
  }
  return tally.outcome("(2,2), (3,2)");
}

Outcome criterion9() {
  Tally tally;
  const std::pair<long, std::size_t> cases[] = {{2, 2}, {2, 3}, {3, 2}};
  for (auto [m, n] : cases) {
    const auto ctx = general::rational_context(m, n);
    const auto mu = general::minimal_poly_of_T(ctx);
    const auto label = "m=" + std::to_string(m) + " n=" + std::to_string(n);
    tally.check(mu.degree_in(n) == static_cast<long>(ctx.size()), label + " degree");
    for (const auto& c : mu.coefficients_in(n)) {
      tally.check(is_in_power_subfield(RatFun<CyclotomicField>(c), m, first_variables(n)), label + " membership");
    }
    std::vector<std::optional<MultiPoly<CyclotomicField>>> images(n + 1);
    MultiPoly<CyclotomicField> sum(mu.ring());
    for (std::size_t i = 0; i < n; ++i) sum += var(mu.ring(), i);
    images[n] = sum;
    tally.check(mu.substitute(images, mu.ring()).is_zero(), label + " annihilation");
    if (m == 2 && n == 2) {
      const auto& r = mu.ring();
      const auto x = var(r, 2), x1 = var(r, 0), x2 = var(r, 1);
      const auto expected = (x.pow(2) + x1.pow(2) - x2.pow(2)).pow(2) - cst(r, 4) * x.pow(2) * x1.pow(2);
      tally.check(mu == expected, "(2,2) closed form");
    }
  }
  return tally.outcome("(2,2), (2,3), (3,2)");
}

template <class Fn>
bool raises_char_divides_m(Fn&& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.code() == ErrorCode::CharDividesM;
  }
  return false;
}

Outcome criterion10() {
  Tally tally;
  tally.check(raises_char_divides_m([] { min_frobenius_exponent(2, 4); }), "min_frobenius_exponent");
  tally.check(raises_char_divides_m([] { general::finite_context(2, 2, 2); }), "finite_context");
  tally.check(raises_char_divides_m([] { general::finite_context(3, 6, 1); }), "finite_context m=6");
  tally.check(raises_char_divides_m([] { general::GeneralContext<FiniteField>::make(FiniteField::extension(3, 2), 3, 2); }),
              "GeneralContext over GF(9)");
  tally.check(raises_char_divides_m([] { charp::MooreContext::make(3, 3, 2); }), "MooreContext");
  tally.check(raises_char_divides_m([] { charp::MooreContext::for_field(*FiniteField::extension(2, 2), 2, 2); }),
              "MooreContext::for_field");
  tally.check(raises_char_divides_m([] { general::naive_formula(FiniteField::prime(2), 2); }), "naive_formula");
  for (const char* line : {"reconstruct --m 2 --n 2 --field gf:2 --method general",
                           "reconstruct --m 3 --n 2 --field gf:3 --method charp",
                           "reconstruct --m 2 --n 2 --field gf:2 --method naive",
                           "verify --m 2 --n 2 --field gf:2 --method general",
                           "minpoly-t --m 5 --n 1 --field gf:5", "crosscheck-a --m 7 --n 1 --field gf:7"}) {
    std::istringstream in(line);
    std::vector<std::string> args;
    for (std::string w; in >> w;) args.push_back(w);
    std::ostringstream out, err;
    const int code = cli::run(args, out, err);
    tally.check(code == 2 && err.str().find("char divides m") != std::string::npos, std::string("CLI: ") + line);
  }
  return tally.outcome("library guards and CLI exit code 2");
}

template <CoefficientField F>
TPoly<F> scale_numerator_coefficient(const TPoly<F>& f, std::size_t term, std::size_t index) {
  TPoly<F> g = f;
  auto& c = g.terms[term].coeff;
  std::vector<typename MultiPoly<F>::Term> terms(c.num().terms().begin(), c.num().terms().end());
  terms[index].coeff = f.field().mul(terms[index].coeff, f.field().from_int(2));
  c = RatFun<F>(MultiPoly<F>::from_terms(c.ring(), terms), c.den());
  return g;
}

Outcome criterion11() {
  Tally tally;
  std::size_t mutants = 0;
  // Larger (m, n) have common denominators of degree > 50, too many for GF(101).
  const std::pair<long, std::size_t> cases[] = {{2, 2}, {2, 3}, {4, 1}, {5, 1}};
  for (auto [m, n] : cases) {
    const auto f = general::reconstruct_general(general::finite_context(101, m, n));
    const auto label = "m=" + std::to_string(m) + " n=" + std::to_string(n);
    std::vector<std::pair<std::string, TPoly<FiniteField>>> bad;
    for (unsigned long t = 0; t <= static_cast<unsigned long>(f.degree()); ++t) {
      bad.emplace_back(label + " c_" + std::to_string(t), verify::mutate_coefficient(f, t));
    }
    for (std::size_t k = 0; k < f.terms.size(); ++k) {
      for (std::size_t i = 0; i < f.terms[k].coeff.num().size(); ++i) {
        bad.emplace_back(label + " term " + std::to_string(k) + " monomial " + std::to_string(i),
                         scale_numerator_coefficient(f, k, i));
      }
    }
    for (const auto& [what, g] : bad) {
      ++mutants;
      for (std::uint64_t seed = 1; seed <= 10; ++seed) {
        tally.check(!verify::verify_reconstruction(g, verify::TrialPlan{10, seed}).passed,
                    what + " undetected for seed " + std::to_string(seed));
      }
    }
    tally.check(verify::verify_reconstruction(f, verify::TrialPlan{10, 1}).passed, label + " valid input rejected");
  }
  return tally.outcome(std::to_string(mutants) + " mutants x 10 seeds over GF(101)");
}

}  // namespace

int main() {
  const std::vector<Criterion> criteria = {
      {1, "golden closed forms n=2,3", 20, criterion1},
      {2, "reconstruction identity", 360, criterion2},
      {3, "coefficient membership", 450, criterion3},
      {4, "char-p path at random points", 270, criterion4},
      {5, "Moore determinant two ways", 30, criterion5},
      {6, "Delta_i three ways", 60, criterion6},
      {7, "a(t, lambda) two ways", 120, criterion7},
      {8, "Vandermonde inverse", 60, criterion8},
      {9, "minimal polynomial of T", 30, criterion9},
      {10, "char divides m guards", 1, criterion10},
      {11, "mutation detection", 10, criterion11},
  };
  int failures = 0;
  for (const auto& c : criteria) {
    const auto start = std::chrono::steady_clock::now();
    Outcome outcome;
    try {
      outcome = c.run();
    } catch (const std::exception& e) {
      outcome = {false, std::string("exception: ") + e.what()};
    }
    const double seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (outcome.ok && seconds > c.budget_seconds) {
      outcome = {false, "over the time budget of " + std::to_string(c.budget_seconds) + " s"};
    }
    failures += outcome.ok ? 0 : 1;
    std::printf("criterion %2d: %s  %-32s %8.3f s  %s\n", c.id, outcome.ok ? "PASS" : "FAIL", c.title, seconds,
                outcome.detail.c_str());
  }
  std::fflush(stdout);
  return failures == 0 ? 0 : 1;
}
