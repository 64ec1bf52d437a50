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

#ifndef RADEXT_TOOLS_CLI_APP_HPP
#define RADEXT_TOOLS_CLI_APP_HPP

#include <CLI11.hpp>
#include <algorithm>
#include <nlohmann/json.hpp>
#include <numeric>
#include <ostream>
#include <string>
#include <variant>
#include <vector>

#include "radext/charp.hpp"
#include "radext/expr.hpp"
#include "radext/field.hpp"
#include "radext/general.hpp"
#include "radext/verify.hpp"

namespace radext::cli {

using nlohmann::json;

struct Request {
  long m = 0;
  std::size_t n = 0;
  std::string field = "rational";
  std::string method = "general";
  std::string out = "sexpr";
  std::size_t var = 1;
};

/// A reconstruction of X_var. Naive results are rational functions in X1..Xn,T.
using Result = std::variant<TPoly<RationalField>, TPoly<FiniteField>, RatFun<RationalField>, RatFun<FiniteField>>;

struct Built {
  Result value;
  std::size_t target = 0;
  unsigned eval_degree = 1;  // evaluation needs GF(p^k) with eval_degree | k
  std::string note;
};

inline std::variant<std::shared_ptr<const RationalField>, FiniteFieldPtr> parse_field(const std::string& text) {
  const auto spec = FieldSpec::parse(text);
  require(spec.kind != FieldSpec::Kind::Cyclotomic, ErrorCode::InvalidParameter,
          "--field must be rational or gf:<p>[^<e>]");
  auto field = make_field(spec);
  if (auto* q = std::get_if<std::shared_ptr<const RationalField>>(&field)) return *q;
  return std::get<FiniteFieldPtr>(field);
}

/// The smallest extension of `given` holding a primitive m-th root of unity.
inline FiniteFieldPtr root_field(const FiniteFieldPtr& given, long m) {
  require(m >= 1, ErrorCode::InvalidParameter, "m must be positive");
  const u64 p = given->characteristic();
  const unsigned e = min_frobenius_exponent(p, static_cast<u64>(m));
  const unsigned k = std::lcm(given->degree(), e);
  return k == given->degree() ? given : FiniteField::extension(p, k);
}

inline Built build(const Request& r) {
  require(r.m >= 1, ErrorCode::InvalidParameter, "m must be positive");
  require(r.n >= 1 && r.n <= kMaxVars, ErrorCode::InvalidParameter, "n must lie in 1..8");
  require(r.var >= 1 && r.var <= r.n, ErrorCode::IndexOutOfRange, "--var must lie in 1..n");
  const auto field = parse_field(r.field);
  const auto* rational = std::get_if<std::shared_ptr<const RationalField>>(&field);
  const FiniteFieldPtr finite = rational ? nullptr : std::get<FiniteFieldPtr>(field);
  Built b{TPoly<RationalField>{}, r.var - 1, 1, {}};

  if (r.method == "general") {
    if (rational) {
      auto f = general::descend_to_rational(general::reconstruct_general(general::rational_context(r.m, r.n)));
      require(f.has_value(), ErrorCode::VerificationFailed, "coefficients do not descend to Q");
      b.value = general::transpose_to(*f, r.var);
    } else {
      auto ctx = general::GeneralContext<FiniteField>::make(root_field(finite, r.m), r.m, r.n);
      b.value = general::transpose_to(general::reconstruct_general(ctx), r.var);
      b.note = "coefficients in " + ctx.field->describe();
    }
  } else if (r.method == "charp") {
    require(finite != nullptr, ErrorCode::InvalidParameter, "charp requires --field gf:<p>[^<e>]");
    const auto ctx = charp::MooreContext::for_field(*finite, r.m, r.n);
    b.value = general::transpose_to(charp::reconstruct_charp(ctx), r.var);
    b.eval_degree = ctx.e * static_cast<unsigned>(r.n);
    b.note = "q = " + std::to_string(ctx.q) + " (p = " + std::to_string(ctx.p) + ", e = " + std::to_string(ctx.e) + ")";
  } else if (r.method == "naive") {
    require(r.m == 2, ErrorCode::InvalidParameter, "naive requires m = 2");
    auto swap = [&](auto f) { return r.var == 1 ? f : f.swap_variables(0, r.var - 1); };
    if (rational) {
      b.value = swap(general::naive_formula(*rational, r.n));
    } else {
      b.value = swap(general::naive_formula(finite, r.n));
    }
  } else {
    fail(ErrorCode::InvalidParameter, "unknown method '" + r.method + "'");
  }
  return b;
}

inline expr::Expr expression(const Result& r) {
  return std::visit(
      [](const auto& f) -> expr::Expr {
        if constexpr (requires { f.terms; }) {
          return expr::tpoly_expr(f);
        } else {
          return expr::display_ratfun(f);
        }
      },
      r);
}

inline void emit(const expr::Expr& e, const std::string& format, const std::string& lhs, std::ostream& out) {
  if (format == "json") {
    out << expr::to_json(e).dump(2) << '\n';
  } else if (format == "latex") {
    out << (lhs.empty() ? "" : lhs + " = ") << expr::to_latex(e) << '\n';
  } else {
    out << expr::to_sexpr(e) << '\n';
  }
}

// ---------------------------------------------------------------------------
// verify

inline json report(const verify::Verdict& v) {
  json j{{"passed", v.passed}, {"trials", v.trials_run}, {"retries", v.retries}, {"counterexample", nullptr}};
  if (v.counterexample) {
    j["counterexample"] = {
        {"point", v.counterexample->point}, {"expected", v.counterexample->expected}, {"got", v.counterexample->got}};
  }
  return j;
}

inline verify::Candidate<RationalField> rational_candidate(const Built& b) {
  if (const auto* f = std::get_if<TPoly<RationalField>>(&b.value)) return verify::Candidate<RationalField>::of(*f);
  return verify::Candidate<RationalField>::of(std::get<RatFun<RationalField>>(b.value), b.target);
}

inline verify::Candidate<FiniteField> finite_candidate(const Built& b, const FiniteFieldPtr& eval) {
  if (const auto* f = std::get_if<TPoly<FiniteField>>(&b.value)) {
    return verify::Candidate<FiniteField>::of(verify::embed(*f, eval));
  }
  return verify::Candidate<FiniteField>::of(verify::embed(std::get<RatFun<FiniteField>>(b.value), eval), b.target);
}

inline const FiniteField& coefficient_field(const Built& b) {
  if (const auto* f = std::get_if<TPoly<FiniteField>>(&b.value)) return *f->ring->field;
  return std::get<RatFun<FiniteField>>(b.value).field();
}

/// GF(p^k) containing every coefficient field and evaluation extension,
/// enlarged until it exceeds twice the largest denominator degree.
inline FiniteFieldPtr evaluation_field(const std::vector<const Built*>& built) {
  const u64 p = coefficient_field(*built.front()).characteristic();
  unsigned base = 1;
  for (const auto* b : built) base = std::lcm(base, std::lcm(coefficient_field(*b).degree(), b->eval_degree));
  long degree = 0;
  for (const auto* b : built) degree = std::max(degree, finite_candidate(*b, FiniteField::extension(p, base)).denominator_degree);
  unsigned k = base;
  for (;;) {
    u64 order = 1;
    for (unsigned i = 0; i < k && order <= (u64{1} << 20); ++i) order *= p;
    if (order > static_cast<u64>(2 * degree) || order * p > (u64{1} << 20)) break;
    k += base;
  }
  return FiniteField::extension(p, k);
}

inline verify::Verdict run_verify(const Built& a, const Built* cross, const verify::TrialPlan& plan,
                                  verify::Agreement mode, std::optional<verify::Verdict>& cross_verdict) {
  if (std::holds_alternative<TPoly<RationalField>>(a.value) || std::holds_alternative<RatFun<RationalField>>(a.value)) {
    const auto ca = rational_candidate(a);
    auto v = verify::verify_reconstruction(ca, plan);
    if (cross) cross_verdict = verify::verify_cross(ca, rational_candidate(*cross), plan, mode);
    return v;
  }
  std::vector<const Built*> all{&a};
  if (cross) all.push_back(cross);
  const auto eval = evaluation_field(all);
  const auto ca = finite_candidate(a, eval);
  auto v = verify::verify_reconstruction(ca, plan);
  if (cross) cross_verdict = verify::verify_cross(ca, finite_candidate(*cross, eval), plan, mode);
  return v;
}

// ---------------------------------------------------------------------------
// crosscheck-delta, crosscheck-a, minpoly-t

inline bool crosscheck_delta(u64 q, std::size_t n, json& out) {
  const auto pe = as_prime_power(q);
  require(pe.has_value() && q <= 16, ErrorCode::InvalidParameter, "q must be a prime power at most 16");
  require(n >= 1 && n <= 4, ErrorCode::InvalidParameter, "n must lie in 1..4");
  const auto ctx = charp::MooreContext::make(pe->first, 1, n, pe->second);
  const auto big = ctx.big_field();
  const auto base_ring = ctx.ring();
  const auto big_ring = make_ring(big, base_ring->vars);
  const auto z = charp::normal_basis_find(ctx, *big);
  const auto alpha = charp::default_alpha(ctx, *big);
  bool all = true;
  json rows = json::array();
  for (std::size_t i = 0; i < n; ++i) {
    const auto direct = charp::delta_i_direct(base_ring, i, q, n);
    const auto lifted = charp::embed_prime(direct, big_ring);
    const bool a1 = lifted == charp::delta_i_normal_basis(ctx, big_ring, i, z);
    const bool a2 = lifted == charp::delta_i_minpoly(ctx, big_ring, i, alpha);
    const bool a3 = lifted == charp::delta_i_minpoly_substituted(ctx, big_ring, i, alpha);
    all = all && a1 && a2 && a3;
    rows.push_back({{"i", i},
                    {"direct", expr::to_sexpr(expr::poly_expr(direct))},
                    {"normal_basis", a1},
                    {"minimal_polynomial", a2},
                    {"minimal_polynomial_expanded", a3}});
  }
  out = {{"q", q}, {"n", n}, {"passed", all}, {"deltas", rows}};
  return all;
}

template <CoefficientField F>
bool crosscheck_a(const general::GeneralContext<F>& ctx, json& out) {
  std::size_t agree = 0;
  json mismatches = json::array();
  for (std::size_t t = 0; t < ctx.size(); ++t) {
    for (const auto& lambda : ctx.lambdas) {
      if (ratfun_equal(general::a_coeff_multinomial(ctx, t, lambda), general::a_coeff_character(ctx, t, lambda))) {
        ++agree;
      } else {
        mismatches.push_back({{"t", t}, {"lambda", std::vector<long>(lambda.begin(), lambda.end())}});
      }
    }
  }
  out = {{"m", ctx.m},
         {"n", ctx.n},
         {"entries", ctx.size() * ctx.size()},
         {"agree", agree},
         {"passed", mismatches.empty()},
         {"mismatches", mismatches}};
  return mismatches.empty();
}

inline expr::Expr minpoly_expr(const Request& r) {
  const auto field = parse_field(r.field);
  if (std::holds_alternative<FiniteFieldPtr>(field)) {
    const auto given = std::get<FiniteFieldPtr>(field);
    const auto ctx = general::GeneralContext<FiniteField>::make(root_field(given, r.m), r.m, r.n);
    return expr::poly_expr(general::minimal_poly_of_T(ctx));
  }
  const auto ctx = general::rational_context(r.m, r.n);
  const auto mu = general::minimal_poly_of_T(ctx);
  for (const auto& t : mu.terms()) {
    require(ctx.field->is_rational(t.coeff), ErrorCode::VerificationFailed, "minimal polynomial is not over Q");
  }
  auto ring = make_ring(RationalField::make(), mu.ring()->vars);
  return expr::poly_expr(mu.map_coefficients(ring, [](const CyclotomicField::Element& a) { return a[0]; }));
}

// ---------------------------------------------------------------------------

inline int exit_code(ErrorCode code) {
  switch (code) {
    case ErrorCode::VerificationFailed:
    case ErrorCode::RetriesExhausted:
    case ErrorCode::SingularMooreMatrix:
      return 1;
    default:
      return 2;
  }
}

/// Runs the command line `args` (without the program name). Returns the exit code.
inline int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Explicit radical reconstruction of X1 from X1^m, ..., Xn^m and T = X1 + ... + Xn.", "radext"};
  app.require_subcommand(1);

  Request req;
  auto add_common = [&req](CLI::App* sub, bool with_method) {
    sub->add_option("--m", req.m, "Exponent m")->required()->check(CLI::PositiveNumber);
    sub->add_option("--n", req.n, "Number of variables")->required()->check(CLI::Range(1, 8));
    sub->add_option("--field", req.field, "rational | gf:<p> | gf:<p>^<e>")->capture_default_str();
    if (with_method) {
      sub->add_option("--method", req.method)
          ->check(CLI::IsMember({"general", "charp", "naive"}))
          ->capture_default_str();
      sub->add_option("--var", req.var, "Reconstruct X_var instead of X1")->capture_default_str();
    }
  };

  auto* reconstruct = app.add_subcommand("reconstruct", "Print f with X_var = f(X^m, T)");
  add_common(reconstruct, true);
  reconstruct->add_option("--out", req.out)->check(CLI::IsMember({"sexpr", "json", "latex"}))->capture_default_str();

  verify::TrialPlan plan;
  std::string cross_method, mode = "bound";
  auto* verify_cmd = app.add_subcommand("verify", "Check the identity at random points");
  add_common(verify_cmd, true);
  verify_cmd->add_option("--trials", plan.trials)->check(CLI::PositiveNumber)->capture_default_str();
  verify_cmd->add_option("--seed", plan.seed)->capture_default_str();
  verify_cmd->add_option("--retry-limit", plan.retry_limit, "0 means 20 * trials")->capture_default_str();
  verify_cmd->add_option("--cross", cross_method, "Second method to compare against")
      ->check(CLI::IsMember({"general", "charp", "naive"}));
  verify_cmd->add_option("--mode", mode, "Cross comparison: bound (T = sum X) or free (T random)")
      ->check(CLI::IsMember({"bound", "free"}))
      ->capture_default_str();

  u64 q = 0;
  std::size_t delta_n = 0;
  auto* delta = app.add_subcommand("crosscheck-delta", "Compare the three constructions of Delta_i");
  delta->add_option("--q", q)->required();
  delta->add_option("--n", delta_n)->required();

  auto* a_cmd = app.add_subcommand("crosscheck-a", "Compare both formulas for a(t, lambda)");
  add_common(a_cmd, false);

  auto* minpoly = app.add_subcommand("minpoly-t", "Print the minimal polynomial of T in the variable X");
  add_common(minpoly, false);
  minpoly->add_option("--out", req.out)->check(CLI::IsMember({"sexpr", "json", "latex"}))->capture_default_str();

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? 0 : 2;
  }

  try {
    if (reconstruct->parsed()) {
      const auto b = build(req);
      if (!b.note.empty()) err << b.note << '\n';
      emit(expression(b.value), req.out, "X_{" + std::to_string(req.var) + "}", out);
      return 0;
    }
    if (verify_cmd->parsed()) {
      plan.validate();
      const auto a = build(req);
      std::optional<Built> b;
      if (!cross_method.empty()) {
        Request r2 = req;
        r2.method = cross_method;
        b = build(r2);
      }
      std::optional<verify::Verdict> cross_verdict;
      const auto agreement = mode == "free" ? verify::Agreement::FreeT : verify::Agreement::BoundT;
      const auto v = run_verify(a, b ? &*b : nullptr, plan, agreement, cross_verdict);
      auto j = report(v);
      bool passed = v.passed;
      if (cross_verdict) {
        j["cross"] = report(*cross_verdict);
        passed = passed && cross_verdict->passed;
        j["passed"] = passed;
      }
      out << j.dump(2) << '\n';
      return passed ? 0 : 1;
    }
    if (delta->parsed()) {
      json j;
      const bool ok = crosscheck_delta(q, delta_n, j);
      out << j.dump(2) << '\n';
      return ok ? 0 : 1;
    }
    if (a_cmd->parsed()) {
      json j;
      bool ok = false;
      const auto field = parse_field(req.field);
      if (const auto* f = std::get_if<FiniteFieldPtr>(&field)) {
        ok = crosscheck_a(general::GeneralContext<FiniteField>::make(root_field(*f, req.m), req.m, req.n), j);
      } else {
        ok = crosscheck_a(general::rational_context(req.m, req.n), j);
      }
      out << j.dump(2) << '\n';
      return ok ? 0 : 1;
    }
    if (minpoly->parsed()) {
      emit(minpoly_expr(req), req.out, "", out);
      return 0;
    }
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return exit_code(e.code());
  }
  return 2;
}

}  // namespace radext::cli

#endif  // RADEXT_TOOLS_CLI_APP_HPP
