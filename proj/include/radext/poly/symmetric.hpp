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

#ifndef RADEXT_POLY_SYMMETRIC_HPP
#define RADEXT_POLY_SYMMETRIC_HPP

#include <vector>

#include "radext/error.hpp"
#include "radext/poly/multipoly.hpp"

namespace radext {

/// s_0, ..., s_N of the items, read off prod (1 + item_i u).
template <CoefficientField F>
std::vector<MultiPoly<F>> elementary_symmetric_all(const std::vector<MultiPoly<F>>& items, const RingPtr<F>& ring) {
  std::vector<MultiPoly<F>> s(items.size() + 1, MultiPoly<F>(ring));
  s[0] = MultiPoly<F>::one(ring);
  for (std::size_t i = 0; i < items.size(); ++i) {
    for (std::size_t k = i + 1; k >= 1; --k) s[k] += s[k - 1] * items[i];
  }
  return s;
}

template <CoefficientField F>
MultiPoly<F> elementary_symmetric(const std::vector<MultiPoly<F>>& items, std::size_t k, const RingPtr<F>& ring) {
  require(k <= items.size(), ErrorCode::IndexOutOfRange, "symmetric function index exceeds item count");
  std::vector<MultiPoly<F>> s(k + 1, MultiPoly<F>(ring));
  s[0] = MultiPoly<F>::one(ring);
  for (std::size_t i = 0; i < items.size(); ++i) {
    for (std::size_t j = std::min(k, i + 1); j >= 1; --j) s[j] += s[j - 1] * items[i];
  }
  return s[k];
}

/// Same recurrence over field elements.
template <CoefficientField F>
std::vector<typename F::Element> elementary_symmetric_all(const F& field,
                                                          const std::vector<typename F::Element>& items) {
  std::vector<typename F::Element> s(items.size() + 1, field.zero());
  s[0] = field.one();
  for (std::size_t i = 0; i < items.size(); ++i) {
    for (std::size_t k = i + 1; k >= 1; --k) s[k] = field.add(s[k], field.mul(s[k - 1], items[i]));
  }
  return s;
}

}  // namespace radext

#endif  // RADEXT_POLY_SYMMETRIC_HPP
