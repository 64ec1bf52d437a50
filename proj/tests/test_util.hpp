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

#ifndef RADEXT_TESTS_TEST_UTIL_HPP
#define RADEXT_TESTS_TEST_UTIL_HPP

#include <random>
#include <vector>

#include "radext/poly.hpp"

namespace radext::testing {

/// Random sparse polynomial with `terms` terms and exponents below `max_exp`.
template <CoefficientField F>
MultiPoly<F> random_poly(const RingPtr<F>& ring, std::mt19937_64& rng, int terms, std::uint32_t max_exp,
                         long coeff_bound = 9) {
  std::uniform_int_distribution<long> coeff(-coeff_bound, coeff_bound);
  std::uniform_int_distribution<std::uint32_t> ex(0, max_exp - 1);
  MultiPoly<F> p(ring);
  for (int i = 0; i < terms; ++i) {
    Monomial mono;
    for (std::size_t v = 0; v < ring->nvars(); ++v) mono.exps[v] = ex(rng);
    p += MultiPoly<F>::monomial(ring, mono, ring->field->from_int(coeff(rng)));
  }
  return p;
}

template <CoefficientField F>
MultiPoly<F> random_nonzero_poly(const RingPtr<F>& ring, std::mt19937_64& rng, int terms, std::uint32_t max_exp) {
  for (;;) {
    auto p = random_poly(ring, rng, terms, max_exp);
    if (!p.is_zero()) return p;
  }
}

/// X1, ..., Xn of a ring as polynomials.
template <CoefficientField F>
std::vector<MultiPoly<F>> variables_of(const RingPtr<F>& ring) {
  std::vector<MultiPoly<F>> v;
  for (std::size_t i = 0; i < ring->nvars(); ++i) v.push_back(MultiPoly<F>::variable(ring, i));
  return v;
}

template <CoefficientField F>
MultiPoly<F> cst(const RingPtr<F>& ring, long c) {
  return MultiPoly<F>::constant(ring, c);
}

}  // namespace radext::testing

#endif  // RADEXT_TESTS_TEST_UTIL_HPP
