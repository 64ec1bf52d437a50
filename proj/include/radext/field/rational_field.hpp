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

#ifndef RADEXT_FIELD_RATIONAL_FIELD_HPP
#define RADEXT_FIELD_RATIONAL_FIELD_HPP

#include <gmpxx.h>

#include <memory>
#include <random>
#include <string>

#include "radext/error.hpp"
#include "radext/field/sampling.hpp"

namespace radext {

/// The rationals, with GMP big-integer fractions. mpq_class keeps every value
/// reduced with a positive denominator, so representation equality is value
/// equality.
class RationalField {
 public:
  using Element = mpq_class;

  static std::shared_ptr<const RationalField> make() { return std::make_shared<const RationalField>(); }

  Element zero() const { return Element(0); }
  Element one() const { return Element(1); }
  Element from_int(long v) const { return Element(v); }
  Element from_integer(const mpz_class& v) const { return Element(v); }
  Element from_rational(const mpq_class& v) const { return v; }

  Element add(const Element& a, const Element& b) const { return a + b; }
  Element sub(const Element& a, const Element& b) const { return a - b; }
  Element mul(const Element& a, const Element& b) const { return a * b; }
  Element neg(const Element& a) const { return -a; }
  Element inv(const Element& a) const {
    require(sgn(a) != 0, ErrorCode::DivisionByZero, "inverse of zero");
    return 1 / a;
  }
  Element div(const Element& a, const Element& b) const { return mul(a, inv(b)); }
  bool is_zero(const Element& a) const { return sgn(a) == 0; }
  bool is_one(const Element& a) const { return a == 1; }

  Element pow(const Element& a, long k) const {
    if (k < 0) return pow(inv(a), -k);
    Element r = 1, b = a;
    while (k != 0) {
      if (k & 1) r *= b;
      b *= b;
      k >>= 1;
    }
    return r;
  }

  unsigned long characteristic() const { return 0; }

  /// Integer sample in [-bound, bound].
  template <class Rng>
  Element sample(Rng& rng, long bound = 1000000) const {
    const auto span = static_cast<std::uint64_t>(2 * bound + 1);
    return Element(static_cast<long>(uniform_below(rng, span)) - bound);
  }

  /// Literal form: integers as "k", fractions as "num:den".
  std::string to_string(const Element& a) const {
    if (a.get_den() == 1) return a.get_num().get_str();
    return a.get_num().get_str() + ":" + a.get_den().get_str();
  }

  Element parse(const std::string& text) const {
    const auto colon = text.find(':');
    try {
      if (colon == std::string::npos) return Element(mpz_class(text));
      Element r(mpz_class(text.substr(0, colon)), mpz_class(text.substr(colon + 1)));
      require(r.get_den() != 0, ErrorCode::ParseError, "zero denominator in literal " + text);
      r.canonicalize();
      return r;
    } catch (const std::invalid_argument&) {
      fail(ErrorCode::ParseError, "bad rational literal '" + text + "'");
    }
  }

  std::string describe() const { return "rational"; }

  bool operator==(const RationalField&) const { return true; }
};

}  // namespace radext

#endif  // RADEXT_FIELD_RATIONAL_FIELD_HPP
