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

#include "cli_app.hpp"

#include <gtest/gtest.h>

#include <sstream>

namespace radext::cli {
namespace {

struct Outcome {
  int code;
  std::string out;
  std::string err;
};

Outcome call(const std::vector<std::string>& args) {
  std::ostringstream out, err;
  const int code = run(args, out, err);
  return {code, out.str(), err.str()};
}

Outcome call(const std::string& line) {
  std::istringstream in(line);
  std::vector<std::string> args;
  for (std::string w; in >> w;) args.push_back(w);
  return call(args);
}

TEST(Reconstruct, LinearCaseIsT) {
  auto r = call("reconstruct --m 2 --n 1 --field rational --method general --out sexpr");
  EXPECT_EQ(0, r.code);
  EXPECT_EQ("T\n", r.out);
}

TEST(Reconstruct, NaiveLatex) {
  auto r = call("reconstruct --m 2 --n 2 --field rational --method naive --out latex");
  EXPECT_EQ(0, r.code);
  EXPECT_EQ("X_{1} = \\frac{X_{1}^{2} - X_{2}^{2} + T^{2}}{2 T}\n", r.out);
}

TEST(Reconstruct, CharpInfersExponent) {
  auto r = call("reconstruct --m 3 --n 2 --field gf:2 --method charp");
  EXPECT_EQ(0, r.code);
  EXPECT_EQ("q = 4 (p = 2, e = 2)\n", r.err);
  // Coefficients of T^{q^i}: T and T^4.
  EXPECT_NE(std::string::npos, r.out.find("(^ T 4)"));
  EXPECT_EQ(std::string::npos, r.out.find("(^ T 2)"));
}

TEST(Reconstruct, SexprParsesBackToTheLibraryResult) {
  auto r = call("reconstruct --m 3 --n 2 --field gf:7 --method general");
  ASSERT_EQ(0, r.code);
  auto ctx = general::finite_context(7, 3, 2);
  auto f = general::reconstruct_general(ctx);
  auto ring = make_ring(ctx.field, x_variables(2, {"T"}));
  auto back = expr::to_ratfun(expr::parse_sexpr(r.out), expr::Interpretation<FiniteField>{ring, ctx.eps, {}});
  EXPECT_TRUE(ratfun_equal(back, f.as_ratfun(ring, "T")));
}

TEST(Reconstruct, JsonParsesBackOverQ) {
  auto r = call("reconstruct --m 2 --n 3 --method general --out json");
  ASSERT_EQ(0, r.code);
  auto ring = make_ring(RationalField::make(), x_variables(3, {"T"}));
  auto back = expr::to_ratfun(expr::from_json(json::parse(r.out)), expr::Interpretation<RationalField>{ring, {}, {}});
  auto f = general::descend_to_rational(general::reconstruct_general(general::rational_context(2, 3)));
  ASSERT_TRUE(f.has_value());
  EXPECT_TRUE(ratfun_equal(back, f->as_ratfun(ring, "T")));
}

TEST(Reconstruct, OtherVariable) {
  auto r = call("reconstruct --m 2 --n 2 --method naive --var 2");
  EXPECT_EQ(0, r.code);
  EXPECT_EQ("(/ (+ (* -1 (^ X1 2)) (^ X2 2) (^ T 2)) (* 2 T))\n", r.out);
  EXPECT_EQ(2, call("reconstruct --m 2 --n 2 --var 3").code);
}

TEST(Verify, GeneralOverGf101) {
  auto r = call("verify --m 2 --n 2 --field gf:101 --method general --trials 100 --seed 7");
  EXPECT_EQ(0, r.code) << r.err;
  auto j = json::parse(r.out);
  EXPECT_TRUE(j["passed"].get<bool>());
  EXPECT_EQ(100, j["trials"].get<int>());
  EXPECT_TRUE(j["counterexample"].is_null());
}

TEST(Verify, CrossNaive) {
  auto r = call("verify --m 2 --n 2 --field gf:101 --method general --trials 100 --seed 7 --cross naive");
  EXPECT_EQ(0, r.code) << r.err;
  EXPECT_TRUE(json::parse(r.out)["cross"]["passed"].get<bool>());
}

TEST(Verify, CharpNeedsTheBigField) {
  for (const char* field : {"gf:3", "gf:2", "gf:5"}) {
    const long m = std::string(field) == "gf:2" ? 3 : 2;
    for (int n = 1; n <= 3; ++n) {
      auto r = call("verify --m " + std::to_string(m) + " --n " + std::to_string(n) + " --field " + field +
                    " --method charp --trials 30 --seed 3");
      EXPECT_EQ(0, r.code) << field << " n=" << n << " " << r.out << r.err;
    }
  }
}

TEST(Verify, CrossCharpAgainstGeneral) {
  auto r = call("verify --m 2 --n 2 --field gf:5 --method charp --cross general --trials 50 --seed 2");
  EXPECT_EQ(0, r.code) << r.out << r.err;
}

TEST(Verify, RationalFields) {
  EXPECT_EQ(0, call("verify --m 3 --n 2 --method general --trials 10 --seed 1").code);
  EXPECT_EQ(0, call("verify --m 2 --n 3 --method naive --trials 10 --seed 1 --cross general").code);
}

TEST(Verify, FreeModeDisagreesAwayFromT) {
  // The two formulas agree on T = X1 + X2 but not as functions of a free T.
  auto r = call("verify --m 2 --n 2 --field gf:101 --method general --cross naive --mode free --trials 20");
  EXPECT_EQ(1, r.code);
  auto j = json::parse(r.out);
  EXPECT_FALSE(j["passed"].get<bool>());
  EXPECT_EQ(3u, j["cross"]["counterexample"]["point"].size());
}

TEST(ExitCodes, CharDividesM) {
  auto r = call("verify --m 2 --n 2 --field gf:2 --method general");
  EXPECT_EQ(2, r.code);
  EXPECT_NE(std::string::npos, r.err.find("char divides m"));
  EXPECT_EQ(2, call("reconstruct --m 3 --n 2 --field gf:3 --method charp").code);
  EXPECT_EQ(2, call("reconstruct --m 2 --n 2 --field gf:2 --method naive").code);
  EXPECT_EQ(2, call("minpoly-t --m 5 --n 1 --field gf:5").code);
}

TEST(ExitCodes, InvalidArguments) {
  for (const char* line : {"", "reconstruct", "reconstruct --m 0 --n 2", "reconstruct --m 2 --n 9",
                           "reconstruct --m 2 --n 2 --field gf:4", "reconstruct --m 2 --n 2 --field bogus",
                           "reconstruct --m 2 --n 2 --method nope", "reconstruct --m 2 --n 2 --out xml",
                           "reconstruct --m 3 --n 2 --method naive", "reconstruct --m 2 --n 2 --method charp",
                           "verify --m 2 --n 2 --trials 0", "verify --m 2 --n 2 --retry-limit 5 --trials 10",
                           "crosscheck-delta --q 6 --n 2", "crosscheck-delta --q 17 --n 2",
                           "crosscheck-delta --q 2 --n 5", "minpoly-t --m 2 --n 7", "frobnicate"}) {
    auto r = call(std::string(line));
    EXPECT_EQ(2, r.code) << line;
    EXPECT_TRUE(r.out.empty()) << line;
  }
  EXPECT_EQ(0, call("--help").code);
}

TEST(CrosscheckDelta, Examples) {
  for (const char* line : {"crosscheck-delta --q 2 --n 2", "crosscheck-delta --q 3 --n 2", "crosscheck-delta --q 2 --n 4",
                           "crosscheck-delta --q 4 --n 3", "crosscheck-delta --q 9 --n 2"}) {
    auto r = call(std::string(line));
    EXPECT_EQ(0, r.code) << line << r.err;
    EXPECT_TRUE(json::parse(r.out)["passed"].get<bool>());
  }
  auto j = json::parse(call("crosscheck-delta --q 2 --n 2").out);
  EXPECT_EQ("(^ X2 2)", j["deltas"][0]["direct"]);
  EXPECT_EQ("X2", j["deltas"][1]["direct"]);
}

TEST(CrosscheckA, Grids) {
  for (const char* line : {"crosscheck-a --m 2 --n 2", "crosscheck-a --m 3 --n 2", "crosscheck-a --m 2 --n 3 --field gf:7"}) {
    auto r = call(std::string(line));
    EXPECT_EQ(0, r.code) << line;
    auto j = json::parse(r.out);
    EXPECT_EQ(j["entries"], j["agree"]);
  }
}

TEST(MinpolyT, Examples) {
  EXPECT_EQ("(+ (* -1 (^ X1 2)) (^ X 2))\n", call("minpoly-t --m 2 --n 1").out);
  EXPECT_EQ("(+ (* -1 X1) (* -1 X2) (* -1 X3) X)\n", call("minpoly-t --m 1 --n 3").out);
  EXPECT_EQ("(+ (^ X1 4) (* -2 (^ X1 2) (^ X2 2)) (* -2 (^ X1 2) (^ X 2)) (^ X2 4) (* -2 (^ X2 2) (^ X 2)) (^ X 4))\n",
            call("minpoly-t --m 2 --n 2").out);
  EXPECT_EQ(0, call("minpoly-t --m 3 --n 2 --field gf:7").code);
}

TEST(Determinism, ByteIdenticalOutput) {
  for (const char* line : {"reconstruct --m 3 --n 2 --field gf:7 --method general --out json",
                           "verify --m 2 --n 3 --field gf:101 --method general --trials 25 --seed 99",
                           "verify --m 2 --n 2 --field gf:101 --method general --cross naive --mode free --seed 4",
                           "crosscheck-delta --q 3 --n 3"}) {
    const auto a = call(std::string(line)), b = call(std::string(line));
    EXPECT_EQ(a.code, b.code);
    EXPECT_EQ(a.out, b.out) << line;
    EXPECT_EQ(a.err, b.err) << line;
  }
}

}  // namespace
}  // namespace radext::cli
