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

#ifndef RADEXT_POLY_POWER_SUBFIELD_HPP
#define RADEXT_POLY_POWER_SUBFIELD_HPP

#include <numeric>
#include <vector>

#include "radext/field.hpp"
#include "radext/poly/ratfun.hpp"

namespace radext {

/// True iff f is fixed by X_k -> eps X_k for every listed k, where eps is the
/// given root of unity.
template <CoefficientField F>
bool invariant_under_scaling(const RatFun<F>& f, const typename F::Element& eps, const std::vector<std::size_t>& xvars) {
  for (auto k : xvars) {
    if (!ratfun_equal(f.scale_variable(k, eps), f)) return false;
  }
  return true;
}

template <CoefficientField F, CoefficientField G, class Map>
RatFun<G> extend_coefficients(const RatFun<F>& f, std::shared_ptr<const G> target, Map&& map) {
  return f.map_coefficients(make_ring(std::move(target), f.ring()->vars), map);
}

/// Membership in F(X_k^m : k in xvars), coefficients extended to Q(eps_m).
inline bool is_in_power_subfield(const RatFun<RationalField>& f, long m, const std::vector<std::size_t>& xvars) {
  require(m >= 1, ErrorCode::InvalidParameter, "m must be positive");
  if (m <= 2) return invariant_under_scaling(f, primitive_root_of_unity(f.field(), m), xvars);
  auto cyc = CyclotomicField::make(m);
  auto g = extend_coefficients(f, cyc, [&](const mpq_class& c) { return cyc->from_rational(c); });
  return invariant_under_scaling(g, cyc->generator(), xvars);
}

/// Membership over a finite field, extending to the smallest GF(p^{ek}) with m | p^{ek} - 1.
inline bool is_in_power_subfield(const RatFun<FiniteField>& f, long m, const std::vector<std::size_t>& xvars) {
  require(m >= 1, ErrorCode::InvalidParameter, "m must be positive");
  const auto& base = f.ring()->field;
  const unsigned k = extension_degree_for_root(base->characteristic(), base->degree(), static_cast<u64>(m));
  if (k == 1) return invariant_under_scaling(f, primitive_root_of_unity(*base, static_cast<u64>(m)), xvars);
  auto big = FiniteField::extension(base->characteristic(), base->degree() * k);
  FiniteFieldEmbedding emb(base, big);
  auto g = extend_coefficients(f, big, [&](FiniteField::Element c) { return emb(c); });
  return invariant_under_scaling(g, primitive_root_of_unity(*big, static_cast<u64>(m)), xvars);
}

inline bool is_in_power_subfield(const RatFun<CyclotomicField>& f, long m, const std::vector<std::size_t>& xvars) {
  require(m >= 1, ErrorCode::InvalidParameter, "m must be positive");
  const auto& base = f.ring()->field;
  const long order = base->order_of_root();
  if (m <= 2 || order % m == 0) return invariant_under_scaling(f, primitive_root_of_unity(*base, m), xvars);
  auto big = CyclotomicField::make(std::lcm(order, m));
  CyclotomicEmbedding emb(base, big);
  auto g = extend_coefficients(f, big, [&](const CyclotomicField::Element& c) { return emb(c); });
  return invariant_under_scaling(g, primitive_root_of_unity(*big, m), xvars);
}

/// Indices 0..n-1, the usual X variables of a ring whose first n names are X1..Xn.
inline std::vector<std::size_t> first_variables(std::size_t n) {
  std::vector<std::size_t> v(n);
  std::iota(v.begin(), v.end(), std::size_t{0});
  return v;
}

}  // namespace radext

#endif  // RADEXT_POLY_POWER_SUBFIELD_HPP
