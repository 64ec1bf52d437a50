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

#ifndef RADEXT_POLY_MATRIX_HPP
#define RADEXT_POLY_MATRIX_HPP

#include <cstddef>
#include <optional>
#include <utility>
#include <vector>

#include "radext/error.hpp"
#include "radext/poly/multipoly.hpp"

namespace radext {

template <class T>
using Matrix = std::vector<std::vector<T>>;

namespace detail {

template <class T>
void require_square(const Matrix<T>& m) {
  for (const auto& row : m) require(row.size() == m.size(), ErrorCode::NotSquare, "matrix is not square");
}

template <CoefficientField F>
MultiPoly<F> cofactor_rec(const Matrix<MultiPoly<F>>& m, std::vector<std::size_t>& rows, std::vector<std::size_t>& cols,
                          const RingPtr<F>& ring) {
  if (cols.empty()) return MultiPoly<F>::one(ring);
  if (cols.size() == 1) return m[rows[0]][cols[0]];
  // Expand along the remaining column with the fewest terms.
  std::size_t best = 0, best_terms = SIZE_MAX;
  for (std::size_t c = 0; c < cols.size(); ++c) {
    std::size_t terms = 0;
    for (auto r : rows) terms += m[r][cols[c]].size();
    if (terms < best_terms) best_terms = terms, best = c;
  }
  const std::size_t col = cols[best];
  cols.erase(cols.begin() + static_cast<std::ptrdiff_t>(best));
  MultiPoly<F> acc(ring);
  for (std::size_t k = 0; k < rows.size(); ++k) {
    const auto& entry = m[rows[k]][col];
    if (entry.is_zero()) continue;
    const std::size_t r = rows[k];
    rows.erase(rows.begin() + static_cast<std::ptrdiff_t>(k));
    auto minor = cofactor_rec(m, rows, cols, ring);
    rows.insert(rows.begin() + static_cast<std::ptrdiff_t>(k), r);
    if ((k + best) % 2 == 0) {
      acc += entry * minor;
    } else {
      acc -= entry * minor;
    }
  }
  cols.insert(cols.begin() + static_cast<std::ptrdiff_t>(best), col);
  return acc;
}

}  // namespace detail

/// Laplace expansion, always choosing the sparsest column.
template <CoefficientField F>
MultiPoly<F> det_cofactor(const Matrix<MultiPoly<F>>& m, const RingPtr<F>& ring) {
  detail::require_square(m);
  std::vector<std::size_t> rows(m.size()), cols(m.size());
  for (std::size_t i = 0; i < m.size(); ++i) rows[i] = cols[i] = i;
  return detail::cofactor_rec(m, rows, cols, ring);
}

/// Fraction-free Gaussian elimination; every division is exact.
template <CoefficientField F>
MultiPoly<F> det_bareiss(Matrix<MultiPoly<F>> a, const RingPtr<F>& ring) {
  detail::require_square(a);
  const std::size_t n = a.size();
  if (n == 0) return MultiPoly<F>::one(ring);
  bool negate = false;
  MultiPoly<F> prev = MultiPoly<F>::one(ring);
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (a[k][k].is_zero()) {
      std::size_t r = k + 1;
      while (r < n && a[r][k].is_zero()) ++r;
      if (r == n) return MultiPoly<F>(ring);
      std::swap(a[k], a[r]);
      negate = !negate;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) {
        auto num = a[k][k] * a[i][j] - a[i][k] * a[k][j];
        auto q = num.exact_div(prev);
        require(q.has_value(), ErrorCode::VerificationFailed, "Bareiss step is not exact");
        a[i][j] = std::move(*q);
      }
    }
    prev = a[k][k];
  }
  return negate ? -a[n - 1][n - 1] : a[n - 1][n - 1];
}

/// Exact determinant: cofactor expansion up to dimension 5, Bareiss above.
template <CoefficientField F>
MultiPoly<F> sym_det(const Matrix<MultiPoly<F>>& m, const RingPtr<F>& ring) {
  detail::require_square(m);
  return m.size() <= 5 ? det_cofactor(m, ring) : det_bareiss(m, ring);
}

/// Determinant of a matrix of field elements by Gaussian elimination.
template <CoefficientField F>
typename F::Element det_field(const F& field, Matrix<typename F::Element> a) {
  detail::require_square(a);
  const std::size_t n = a.size();
  auto det = field.one();
  for (std::size_t k = 0; k < n; ++k) {
    std::size_t r = k;
    while (r < n && field.is_zero(a[r][k])) ++r;
    if (r == n) return field.zero();
    if (r != k) {
      std::swap(a[k], a[r]);
      det = field.neg(det);
    }
    det = field.mul(det, a[k][k]);
    const auto pivot_inv = field.inv(a[k][k]);
    for (std::size_t i = k + 1; i < n; ++i) {
      if (field.is_zero(a[i][k])) continue;
      const auto factor = field.mul(a[i][k], pivot_inv);
      for (std::size_t j = k; j < n; ++j) a[i][j] = field.sub(a[i][j], field.mul(factor, a[k][j]));
    }
  }
  return det;
}

template <CoefficientField F>
Matrix<typename F::Element> mat_mul(const F& field, const Matrix<typename F::Element>& a,
                                    const Matrix<typename F::Element>& b) {
  const std::size_t n = a.size(), k = b.size(), m = k == 0 ? 0 : b[0].size();
  Matrix<typename F::Element> c(n, std::vector<typename F::Element>(m, field.zero()));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t l = 0; l < k; ++l) {
      for (std::size_t j = 0; j < m; ++j) c[i][j] = field.add(c[i][j], field.mul(a[i][l], b[l][j]));
    }
  }
  return c;
}


/// Solves a x = b by Gaussian elimination; nullopt when a is singular.
template <CoefficientField F>
std::optional<std::vector<typename F::Element>> solve_field(const F& field, Matrix<typename F::Element> a,
                                                            std::vector<typename F::Element> b) {
  detail::require_square(a);
  const std::size_t n = a.size();
  for (std::size_t k = 0; k < n; ++k) {
    std::size_t r = k;
    while (r < n && field.is_zero(a[r][k])) ++r;
    if (r == n) return std::nullopt;
    std::swap(a[k], a[r]);
    std::swap(b[k], b[r]);
    const auto pivot_inv = field.inv(a[k][k]);
    for (std::size_t j = k; j < n; ++j) a[k][j] = field.mul(a[k][j], pivot_inv);
    b[k] = field.mul(b[k], pivot_inv);
    for (std::size_t i = 0; i < n; ++i) {
      if (i == k || field.is_zero(a[i][k])) continue;
      const auto factor = a[i][k];
      for (std::size_t j = k; j < n; ++j) a[i][j] = field.sub(a[i][j], field.mul(factor, a[k][j]));
      b[i] = field.sub(b[i], field.mul(factor, b[k]));
    }
  }
  return b;
}

}  // namespace radext

#endif  // RADEXT_POLY_MATRIX_HPP
