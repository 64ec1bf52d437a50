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

#ifndef RADEXT_FIELD_FIELD_SPEC_HPP
#define RADEXT_FIELD_FIELD_SPEC_HPP

#include <memory>
#include <string>
#include <variant>
#include <vector>

#include "radext/error.hpp"
#include "radext/field/cyclotomic_field.hpp"
#include "radext/field/finite_field.hpp"
#include "radext/field/rational_field.hpp"

namespace radext {

struct FieldSpec {
  enum class Kind { Rational, Prime, Extension, Cyclotomic };

  Kind kind = Kind::Rational;
  u64 p = 0;
  unsigned e = 1;
  long m = 1;
  /// Optional user modulus for Extension, low degree first; empty means search.
  std::vector<u64> modulus;

  static FieldSpec rational() { return {}; }
  static FieldSpec prime(u64 p) { return {Kind::Prime, p, 1, 1, {}}; }
  static FieldSpec extension(u64 p, unsigned e, std::vector<u64> modulus = {}) {
    return {Kind::Extension, p, e, 1, std::move(modulus)};
  }
  static FieldSpec cyclotomic(long m) { return {Kind::Cyclotomic, 0, 1, m, {}}; }

  /// Accepts "rational", "gf:<p>", "gf:<p>^<e>" and "cyclotomic:<m>".
  static FieldSpec parse(const std::string& text) {
    if (text == "rational") return rational();
    auto number = [&](const std::string& s) -> unsigned long long {
      try {
        std::size_t used = 0;
        const auto v = std::stoull(s, &used);
        require(used == s.size() && !s.empty() && s[0] != '-', ErrorCode::InvalidParameter,
                "bad number in field spec '" + text + "'");
        return v;
      } catch (const std::logic_error&) {
        fail(ErrorCode::InvalidParameter, "bad number in field spec '" + text + "'");
      }
    };
    if (text.rfind("gf:", 0) == 0) {
      const std::string body = text.substr(3);
      const auto caret = body.find('^');
      if (caret == std::string::npos) return prime(number(body));
      const auto e = number(body.substr(caret + 1));
      require(e >= 1 && e < 64, ErrorCode::InvalidParameter, "bad extension degree");
      if (e == 1) return prime(number(body.substr(0, caret)));
      return extension(number(body.substr(0, caret)), static_cast<unsigned>(e));
    }
    if (text.rfind("cyclotomic:", 0) == 0) return cyclotomic(static_cast<long>(number(text.substr(11))));
    fail(ErrorCode::InvalidParameter, "unknown field spec '" + text + "'");
  }
};

using AnyField = std::variant<std::shared_ptr<const RationalField>, FiniteFieldPtr, CyclotomicFieldPtr>;

inline AnyField make_field(const FieldSpec& spec) {
  switch (spec.kind) {
    case FieldSpec::Kind::Rational:
      return RationalField::make();
    case FieldSpec::Kind::Prime:
      return FiniteField::prime(spec.p);
    case FieldSpec::Kind::Extension:
      require(spec.e >= 1, ErrorCode::InvalidParameter, "extension degree must be positive");
      if (spec.modulus.empty()) return FiniteField::extension(spec.p, spec.e);
      return FiniteField::extension(spec.p, spec.e, spec.modulus);
    case FieldSpec::Kind::Cyclotomic:
      require(spec.m >= 1, ErrorCode::InvalidParameter, "cyclotomic index must be positive");
      return CyclotomicField::make(spec.m);
  }
  fail(ErrorCode::InvalidParameter, "unknown field kind");
}

}  // namespace radext

#endif  // RADEXT_FIELD_FIELD_SPEC_HPP
