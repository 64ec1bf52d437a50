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

#ifndef RADEXT_EXPR_HPP
#define RADEXT_EXPR_HPP

#include <gmpxx.h>

#include <cctype>
#include <nlohmann/json.hpp>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "radext/error.hpp"
#include "radext/field.hpp"
#include "radext/poly.hpp"

namespace radext::expr {

/// Expression tree shared by every output format.
struct Expr {
  enum class Kind { Var, Const, Add, Mul, Pow, Ratio };

  Kind kind = Kind::Const;
  std::string text;  // variable name or literal
  long exponent = 0;
  std::vector<Expr> children;  // Pow: {base}; Ratio: {num, den}

  static Expr var(std::string name) { return {Kind::Var, std::move(name), 0, {}}; }
  static Expr constant(std::string literal) { return {Kind::Const, std::move(literal), 0, {}}; }
  static Expr add(std::vector<Expr> c) { return {Kind::Add, {}, 0, std::move(c)}; }
  static Expr mul(std::vector<Expr> c) { return {Kind::Mul, {}, 0, std::move(c)}; }
  static Expr pow(Expr base, long k) { return {Kind::Pow, {}, k, {std::move(base)}}; }
  static Expr ratio(Expr num, Expr den) { return {Kind::Ratio, {}, 0, {std::move(num), std::move(den)}}; }

  friend bool operator==(const Expr&, const Expr&) = default;
};

// ---------------------------------------------------------------------------
// S-expressions: (+ a b ...) (* a b ...) (^ a k) (/ a b), atoms and literals.

inline void write_sexpr(const Expr& e, std::string& out) {
  switch (e.kind) {
    case Expr::Kind::Var:
    case Expr::Kind::Const:
      out += e.text;
      return;
    case Expr::Kind::Pow:
      out += "(^ ";
      write_sexpr(e.children[0], out);
      out += " " + std::to_string(e.exponent) + ")";
      return;
    default:
      break;
  }
  out += e.kind == Expr::Kind::Add ? "(+" : e.kind == Expr::Kind::Mul ? "(*" : "(/";
  for (const auto& c : e.children) {
    out += ' ';
    write_sexpr(c, out);
  }
  out += ')';
}

inline std::string to_sexpr(const Expr& e) {
  std::string out;
  write_sexpr(e, out);
  return out;
}

namespace detail {

inline bool is_variable_name(const std::string& s) {
  if (s == "T" || s == "X" || s == "eps" || s == "g") return true;
  if (s.size() < 2 || s[0] != 'X') return false;
  for (std::size_t i = 1; i < s.size(); ++i) {
    if (!std::isdigit(static_cast<unsigned char>(s[i]))) return false;
  }
  return true;
}

inline bool is_literal(const std::string& s) {
  std::size_t i = 0;
  if (!s.empty() && s[0] == '#') return s.size() > 1 && s.find_first_not_of("0123456789", 1) == std::string::npos;
  if (i < s.size() && s[i] == '-') ++i;
  const auto colon = s.find(':');
  auto digits = [&](std::size_t a, std::size_t b) {
    if (a >= b) return false;
    for (std::size_t k = a; k < b; ++k) {
      if (!std::isdigit(static_cast<unsigned char>(s[k]))) return false;
    }
    return true;
  };
  if (colon == std::string::npos) return digits(i, s.size());
  return digits(i, colon) && digits(colon + 1, s.size());
}

class SexprParser {
 public:
  explicit SexprParser(const std::string& text) : s_(text) {}

  Expr parse_all() {
    Expr e = parse();
    skip();
    require(pos_ == s_.size(), ErrorCode::ParseError, "trailing input after expression");
    return e;
  }

 private:
  void skip() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
  }
  std::string token() {
    skip();
    const std::size_t start = pos_;
    while (pos_ < s_.size() && !std::isspace(static_cast<unsigned char>(s_[pos_])) && s_[pos_] != '(' &&
           s_[pos_] != ')') {
      ++pos_;
    }
    require(pos_ > start, ErrorCode::ParseError, "expected a token at offset " + std::to_string(start));
    return s_.substr(start, pos_ - start);
  }
  Expr parse() {
    skip();
    require(pos_ < s_.size(), ErrorCode::ParseError, "unexpected end of input");
    if (s_[pos_] != '(') {
      auto t = token();
      if (is_variable_name(t)) return Expr::var(t);
      require(is_literal(t), ErrorCode::ParseError, "bad atom '" + t + "'");
      return Expr::constant(t);
    }
    ++pos_;
    const auto op = token();
    std::vector<Expr> args;
    long exponent = 0;
    for (;;) {
      skip();
      require(pos_ < s_.size(), ErrorCode::ParseError, "unbalanced parentheses");
      if (s_[pos_] == ')') {
        ++pos_;
        break;
      }
      if (op == "^" && args.size() == 1) {
        const auto k = token();
        try {
          std::size_t used = 0;
          exponent = std::stol(k, &used);
          require(used == k.size(), ErrorCode::ParseError, "bad exponent '" + k + "'");
        } catch (const std::logic_error&) {
          fail(ErrorCode::ParseError, "bad exponent '" + k + "'");
        }
        args.push_back(Expr::constant(k));
        continue;
      }
      args.push_back(parse());
    }
    if (op == "+" || op == "*") {
      require(!args.empty(), ErrorCode::ParseError, "empty sum or product");
      return op == "+" ? Expr::add(std::move(args)) : Expr::mul(std::move(args));
    }
    if (op == "^") {
      require(args.size() == 2, ErrorCode::ParseError, "(^ a k) takes two arguments");
      return Expr::pow(std::move(args[0]), exponent);
    }
    if (op == "/") {
      require(args.size() == 2, ErrorCode::ParseError, "(/ a b) takes two arguments");
      require(!(args[1].kind == Expr::Kind::Const && args[1].text == "0"), ErrorCode::ParseError, "zero denominator");
      return Expr::ratio(std::move(args[0]), std::move(args[1]));
    }
    fail(ErrorCode::ParseError, "unknown operator '" + op + "'");
  }

  const std::string& s_;
  std::size_t pos_ = 0;
};

}  // namespace detail

inline Expr parse_sexpr(const std::string& text) { return detail::SexprParser(text).parse_all(); }

// ---------------------------------------------------------------------------
// JSON: one object per node, field values as strings.

inline nlohmann::json to_json(const Expr& e) {
  using nlohmann::json;
  switch (e.kind) {
    case Expr::Kind::Var:
      return json{{"kind", "var"}, {"name", e.text}};
    case Expr::Kind::Const:
      return json{{"kind", "const"}, {"value", e.text}};
    case Expr::Kind::Pow:
      return json{{"kind", "pow"}, {"base", to_json(e.children[0])}, {"exponent", e.exponent}};
    case Expr::Kind::Ratio:
      return json{{"kind", "ratio"}, {"num", to_json(e.children[0])}, {"den", to_json(e.children[1])}};
    default:
      break;
  }
  json children = json::array();
  for (const auto& c : e.children) children.push_back(to_json(c));
  return json{{"kind", e.kind == Expr::Kind::Add ? "add" : "mul"}, {"children", children}};
}

inline Expr from_json(const nlohmann::json& j) {
  try {
    const auto kind = j.at("kind").get<std::string>();
    if (kind == "var") {
      auto name = j.at("name").get<std::string>();
      require(detail::is_variable_name(name), ErrorCode::ParseError, "bad variable '" + name + "'");
      return Expr::var(name);
    }
    if (kind == "const") {
      auto v = j.at("value").get<std::string>();
      require(detail::is_literal(v), ErrorCode::ParseError, "bad literal '" + v + "'");
      return Expr::constant(v);
    }
    if (kind == "pow") return Expr::pow(from_json(j.at("base")), j.at("exponent").get<long>());
    if (kind == "ratio") return Expr::ratio(from_json(j.at("num")), from_json(j.at("den")));
    if (kind == "add" || kind == "mul") {
      std::vector<Expr> children;
      for (const auto& c : j.at("children")) children.push_back(from_json(c));
      require(!children.empty(), ErrorCode::ParseError, "empty sum or product");
      return kind == "add" ? Expr::add(std::move(children)) : Expr::mul(std::move(children));
    }
    fail(ErrorCode::ParseError, "unknown node kind '" + kind + "'");
  } catch (const nlohmann::json::exception& ex) {
    fail(ErrorCode::ParseError, std::string("malformed expression JSON: ") + ex.what());
  }
}

// ---------------------------------------------------------------------------
// LaTeX, display only.

namespace detail {

inline std::string latex_atom(const std::string& name) {
  if (name == "eps") return "\\epsilon";
  if (name.size() > 1 && name[0] == 'X') return "X_{" + name.substr(1) + "}";
  return name;
}

inline std::string latex_literal(const std::string& lit) {
  if (!lit.empty() && lit[0] == '#') return lit.substr(1);
  const auto colon = lit.find(':');
  if (colon == std::string::npos) return lit;
  std::string num = lit.substr(0, colon), sign;
  if (!num.empty() && num[0] == '-') sign = "-", num = num.substr(1);
  return sign + "\\frac{" + num + "}{" + lit.substr(colon + 1) + "}";
}

inline bool is_negative_literal(const Expr& e) { return e.kind == Expr::Kind::Const && !e.text.empty() && e.text[0] == '-'; }

inline std::string write_latex(const Expr& e);

inline std::string latex_factor(const Expr& e) {
  const bool wrap = e.kind == Expr::Kind::Add;
  const auto s = write_latex(e);
  return wrap ? "\\left(" + s + "\\right)" : s;
}

inline std::string write_latex(const Expr& e) {
  switch (e.kind) {
    case Expr::Kind::Var:
      return latex_atom(e.text);
    case Expr::Kind::Const:
      return latex_literal(e.text);
    case Expr::Kind::Pow: {
      const auto& b = e.children[0];
      const bool wrap = b.kind != Expr::Kind::Var && !(b.kind == Expr::Kind::Const && !is_negative_literal(b));
      const auto base = write_latex(b);
      return (wrap ? "\\left(" + base + "\\right)" : base) + "^{" + std::to_string(e.exponent) + "}";
    }
    case Expr::Kind::Ratio: {
      const auto& num = e.children[0];
      if (is_negative_literal(num)) {
        return "-\\frac{" + latex_literal(num.text.substr(1)) + "}{" + write_latex(e.children[1]) + "}";
      }
      return "\\frac{" + write_latex(num) + "}{" + write_latex(e.children[1]) + "}";
    }
    case Expr::Kind::Mul: {
      std::string out;
      for (std::size_t i = 0; i < e.children.size(); ++i) {
        const auto& c = e.children[i];
        if (i == 0 && is_negative_literal(c) && e.children.size() > 1) {
          out += c.text == "-1" ? "-" : "-" + latex_literal(c.text.substr(1)) + " ";
          continue;
        }
        if (!out.empty() && out.back() != '-' && out.back() != ' ') out += " ";
        out += latex_factor(c);
      }
      return out;
    }
    case Expr::Kind::Add: {
      std::string out;
      for (std::size_t i = 0; i < e.children.size(); ++i) {
        auto term = write_latex(e.children[i]);
        if (i > 0) {
          if (!term.empty() && term[0] == '-') {
            out += " - " + term.substr(1);
          } else {
            out += " + " + term;
          }
        } else {
          out += term;
        }
      }
      return out;
    }
  }
  return {};
}

}  // namespace detail

inline std::string to_latex(const Expr& e) { return detail::write_latex(e); }

// ---------------------------------------------------------------------------
// Field elements and polynomials as expressions.

inline Expr element_expr(const RationalField& f, const mpq_class& a) { return Expr::constant(f.to_string(a)); }

inline Expr element_expr(const FiniteField& f, FiniteField::Element a) { return Expr::constant(f.to_string(a)); }

/// sum_i c_i eps^i.
inline Expr element_expr(const CyclotomicField&, const CyclotomicField::Element& a) {
  RationalField q;
  std::vector<Expr> terms;
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (sgn(a[i]) == 0) continue;
    if (i == 0) {
      terms.push_back(Expr::constant(q.to_string(a[i])));
      continue;
    }
    Expr power = i == 1 ? Expr::var("eps") : Expr::pow(Expr::var("eps"), static_cast<long>(i));
    if (a[i] == 1) {
      terms.push_back(power);
    } else {
      terms.push_back(Expr::mul({Expr::constant(q.to_string(a[i])), power}));
    }
  }
  if (terms.empty()) return Expr::constant("0");
  if (terms.size() == 1) return terms[0];
  return Expr::add(std::move(terms));
}

namespace detail {

template <CoefficientField F>
Expr monomial_expr(const RingPtr<F>& ring, const Monomial& mono, std::vector<Expr> factors) {
  for (std::size_t i = 0; i < ring->nvars(); ++i) {
    const auto e = mono.exps[i];
    if (e == 0) continue;
    factors.push_back(e == 1 ? Expr::var(ring->vars[i]) : Expr::pow(Expr::var(ring->vars[i]), e));
  }
  if (factors.empty()) return Expr::constant("1");
  if (factors.size() == 1) return factors[0];
  return Expr::mul(std::move(factors));
}

}  // namespace detail

template <CoefficientField F>
Expr poly_expr(const MultiPoly<F>& p) {
  const F& f = p.field();
  if (p.is_zero()) return Expr::constant("0");
  std::vector<Expr> terms;
  for (const auto& t : p.terms()) {
    std::vector<Expr> factors;
    if (!f.is_one(t.coeff) || t.mono.is_one()) factors.push_back(element_expr(f, t.coeff));
    terms.push_back(detail::monomial_expr(p.ring(), t.mono, std::move(factors)));
  }
  if (terms.size() == 1) return terms[0];
  return Expr::add(std::move(terms));
}

template <CoefficientField F>
Expr ratfun_expr(const RatFun<F>& r) {
  if (r.den().is_one()) return poly_expr(r.num());
  return Expr::ratio(poly_expr(r.num()), poly_expr(r.den()));
}

/// Over Q: numerator and denominator scaled to coprime integer coefficients
/// with a positive leading denominator coefficient, e.g. (T^2 + X1^2 - X2^2)/(2 T).
inline std::pair<MultiPoly<RationalField>, MultiPoly<RationalField>> clear_denominators(
    const RatFun<RationalField>& r) {
  mpz_class l = 1, g = 0;
  for (const auto* p : {&r.num(), &r.den()}) {
    for (const auto& t : p->terms()) l = lcm(l, mpz_class(t.coeff.get_den()));
  }
  for (const auto* p : {&r.num(), &r.den()}) {
    for (const auto& t : p->terms()) g = gcd(g, mpz_class(t.coeff.get_num() * (l / t.coeff.get_den())));
  }
  mpq_class s(l, g);
  s.canonicalize();
  if (sgn(r.den().leading_term().coeff) < 0) s = -s;
  return {r.num().scaled(s), r.den().scaled(s)};
}

template <CoefficientField F>
Expr display_ratfun(const RatFun<F>& r) {
  if constexpr (std::is_same_v<F, RationalField>) {
    if (r.is_zero()) return Expr::constant("0");
    auto [num, den] = clear_denominators(r);
    if (den.is_one()) return poly_expr(num);
    return Expr::ratio(poly_expr(num), poly_expr(den));
  } else {
    return ratfun_expr(r);
  }
}

/// sum_t c_t T^t with T named `t_name`.
template <CoefficientField F>
Expr tpoly_expr(const TPoly<F>& f, const std::string& t_name = "T") {
  std::vector<Expr> terms;
  for (const auto& term : f.terms) {
    Expr c = display_ratfun(term.coeff);
    if (term.t == 0) {
      terms.push_back(std::move(c));
      continue;
    }
    Expr tp = term.t == 1 ? Expr::var(t_name) : Expr::pow(Expr::var(t_name), static_cast<long>(term.t));
    if (c.kind == Expr::Kind::Const && c.text == "1") {
      terms.push_back(std::move(tp));
    } else {
      terms.push_back(Expr::mul({std::move(c), std::move(tp)}));
    }
  }
  if (terms.empty()) return Expr::constant("0");
  if (terms.size() == 1) return terms[0];
  return Expr::add(std::move(terms));
}

// ---------------------------------------------------------------------------
// Expressions back to rational functions.

template <CoefficientField F>
struct Interpretation {
  RingPtr<F> ring;
  std::optional<typename F::Element> eps;
  std::optional<typename F::Element> g;  // field generator
};

template <CoefficientField F>
RatFun<F> to_ratfun(const Expr& e, const Interpretation<F>& in) {
  const auto& ring = in.ring;
  const F& f = *ring->field;
  using R = RatFun<F>;
  switch (e.kind) {
    case Expr::Kind::Var: {
      if (e.text == "eps" || e.text == "g") {
        const auto& v = e.text == "eps" ? in.eps : in.g;
        require(v.has_value(), ErrorCode::UnboundVariable, "'" + e.text + "' has no value in " + f.describe());
        return R::constant(ring, *v);
      }
      return R(MultiPoly<F>::variable(ring, e.text));
    }
    case Expr::Kind::Const:
      return R::constant(ring, f.parse(e.text));
    case Expr::Kind::Add: {
      R acc = R::zero(ring);
      for (const auto& c : e.children) acc += to_ratfun(c, in);
      return acc;
    }
    case Expr::Kind::Mul: {
      R acc = R::one(ring);
      for (const auto& c : e.children) acc *= to_ratfun(c, in);
      return acc;
    }
    case Expr::Kind::Pow:
      return to_ratfun(e.children[0], in).pow(e.exponent);
    case Expr::Kind::Ratio:
      return to_ratfun(e.children[0], in) / to_ratfun(e.children[1], in);
  }
  fail(ErrorCode::ParseError, "unknown node");
}

}  // namespace radext::expr

#endif  // RADEXT_EXPR_HPP
