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

#ifndef RADEXT_FIELD_CONCEPTS_HPP
#define RADEXT_FIELD_CONCEPTS_HPP

#include <gmpxx.h>

#include <concepts>
#include <string>

namespace radext {

/// An exact coefficient field: a handle object that performs arithmetic on
/// value-type elements with canonical representations.
template <class F>
concept CoefficientField = requires(const F& f, const typename F::Element& a, const mpz_class& z, long k,
                                    const std::string& s) {
  typename F::Element;
  { f.zero() } -> std::convertible_to<typename F::Element>;
  { f.one() } -> std::convertible_to<typename F::Element>;
  { f.from_int(k) } -> std::convertible_to<typename F::Element>;
  { f.from_integer(z) } -> std::convertible_to<typename F::Element>;
  { f.add(a, a) } -> std::convertible_to<typename F::Element>;
  { f.sub(a, a) } -> std::convertible_to<typename F::Element>;
  { f.mul(a, a) } -> std::convertible_to<typename F::Element>;
  { f.neg(a) } -> std::convertible_to<typename F::Element>;
  { f.inv(a) } -> std::convertible_to<typename F::Element>;
  { f.div(a, a) } -> std::convertible_to<typename F::Element>;
  { f.pow(a, k) } -> std::convertible_to<typename F::Element>;
  { f.is_zero(a) } -> std::convertible_to<bool>;
  { f.to_string(a) } -> std::convertible_to<std::string>;
  { f.parse(s) } -> std::convertible_to<typename F::Element>;
  { f.describe() } -> std::convertible_to<std::string>;
  { f == f } -> std::convertible_to<bool>;
  { a == a } -> std::convertible_to<bool>;
};

}  // namespace radext

#endif  // RADEXT_FIELD_CONCEPTS_HPP
