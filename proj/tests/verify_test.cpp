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

#include <gtest/gtest.h>

#include "radext/charp.hpp"
#include "radext/general.hpp"
#include "radext/verify.hpp"
#include "test_util.hpp"

namespace radext::verify {
namespace {

using FTPoly = TPoly<FiniteField>;
using FRat = RatFun<FiniteField>;
using FPoly = MultiPoly<FiniteField>;

FTPoly identity_t(const FiniteFieldPtr& f) {
  auto ring = make_ring(f, x_variables(1));
  return FTPoly::from_coefficients(ring, {{1, FRat::one(ring)}}, 2, "test");
}

FTPoly general_22() { return general::reconstruct_general(general::finite_context(101, 2, 2)); }

TEST(SplitSeed, DistinctAndStable) {
  EXPECT_NE(split_seed(1, 0), split_seed(1, 1));
  EXPECT_NE(split_seed(1, 0), split_seed(2, 0));
  EXPECT_EQ(split_seed(7, 3), split_seed(7, 3));
}

TEST(VerifyReconstruction, IdentityT) {
  auto v = verify_reconstruction(identity_t(FiniteField::prime(101)), TrialPlan{20, 3});
  EXPECT_TRUE(v.passed);
  EXPECT_EQ(20u, v.trials_run);
  EXPECT_FALSE(v.counterexample.has_value());
}

TEST(VerifyReconstruction, NaiveClosedFormOverGf101) {
  auto f = general::naive_formula(FiniteField::prime(101), 2);
  auto v = verify_reconstruction(Candidate<FiniteField>::of(f), TrialPlan{100, 7});
  EXPECT_TRUE(v.passed);
  EXPECT_EQ(100u, v.trials_run);
}

TEST(VerifyReconstruction, CorruptionFoundAndSound) {
  auto f = general_22();
  auto bad = mutate_coefficient(f, 1);
  auto v = verify_reconstruction(bad, TrialPlan{100, 7});
  ASSERT_FALSE(v.passed);
  ASSERT_TRUE(v.counterexample.has_value());
  const auto& ce = *v.counterexample;
  const auto& k = f.field();
  std::vector<FiniteField::Element> x{k.parse(ce.point[0]), k.parse(ce.point[1])};
  const auto t = k.parse(ce.point[2]);
  EXPECT_EQ(k.add(x[0], x[1]), t);
  EXPECT_EQ(k.to_string(bad.evaluate(x, t)), ce.got);
  EXPECT_EQ(k.to_string(x[0]), ce.expected);
  EXPECT_NE(ce.expected, ce.got);
}

TEST(VerifyReconstruction, Deterministic) {
  auto bad = mutate_coefficient(general_22(), 3);
  const TrialPlan plan{50, 99};
  auto a = verify_reconstruction(bad, plan), b = verify_reconstruction(bad, plan);
  EXPECT_EQ(a.passed, b.passed);
  EXPECT_EQ(a.trials_run, b.trials_run);
  EXPECT_EQ(a.retries, b.retries);
  ASSERT_EQ(a.counterexample.has_value(), b.counterexample.has_value());
  if (a.counterexample) {
    EXPECT_EQ(a.counterexample->point, b.counterexample->point);
    EXPECT_EQ(a.counterexample->got, b.counterexample->got);
  }
}

TEST(VerifyReconstruction, RationalIntegerPoints) {
  auto f = general::descend_to_rational(general::reconstruct_general(general::rational_context(2, 2)));
  ASSERT_TRUE(f.has_value());
  auto v = verify_reconstruction(*f, TrialPlan{30, 5});
  EXPECT_TRUE(v.passed);
}

TEST(VerifyReconstruction, FieldTooSmall) {
  auto ring = make_ring(FiniteField::prime(3), x_variables(2));
  auto x = radext::testing::variables_of(ring);
  auto f = FTPoly::from_coefficients(ring, {{1, FRat(x[0], x[0] * x[1])}}, 2, "test");
  try {
    verify_reconstruction(f, TrialPlan{});
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(ErrorCode::FieldTooSmall, e.code());
  }
}

TEST(VerifyReconstruction, RetriesExhausted) {
  auto field = FiniteField::prime(101);
  Candidate<FiniteField> c{field, 1, 0, 0, [](std::span<const FiniteField::Element>, const FiniteField::Element&)
                                                -> FiniteField::Element {
                             fail(ErrorCode::EvalDenominatorZero, "always");
                           }};
  try {
    verify_reconstruction(c, TrialPlan{5, 1, 10});
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(ErrorCode::RetriesExhausted, e.code());
  }
}

TEST(VerifyReconstruction, PlanValidation) {
  try {
    verify_reconstruction(identity_t(FiniteField::prime(101)), TrialPlan{10, 1, 5});
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(ErrorCode::InvalidParameter, e.code());
  }
}

TEST(VerifyCross, Modes) {
  auto field = FiniteField::prime(101);
  auto g = Candidate<FiniteField>::of(general_22());
  auto naive = Candidate<FiniteField>::of(general::naive_formula(field, 2));
  const TrialPlan plan{100, 7};
  EXPECT_TRUE(verify_cross(g, g, plan, Agreement::FreeT).passed);
  EXPECT_TRUE(verify_cross(g, naive, plan, Agreement::BoundT).passed);
  EXPECT_FALSE(verify_cross(g, naive, plan, Agreement::FreeT).passed);
  auto t = identity_t(field);
  auto two_t = t;
  two_t.terms[0].coeff = two_t.terms[0].coeff.scaled(2);
  EXPECT_FALSE(verify_cross(Candidate<FiniteField>::of(t), Candidate<FiniteField>::of(two_t), plan,
                            Agreement::FreeT)
                   .passed);
}

TEST(VerifyCross, CharpInExtensionField) {
  auto ctx = charp::MooreContext::make(3, 2, 2);
  auto f = embed(charp::reconstruct_charp(ctx), ctx.big_field());
  EXPECT_TRUE(verify_reconstruction(f, TrialPlan{100, 2}).passed);
}

TEST(Mutation, DetectedWithinTenTrials) {
  std::vector<FTPoly> valid{general_22(), general::reconstruct_general(general::finite_context(101, 2, 3)),
                            general::reconstruct_general(general::finite_context(103, 3, 2))};
  for (const auto& f : valid) {
    for (unsigned long t = 0; t <= static_cast<unsigned long>(f.degree()); ++t) {
      const auto bad = mutate_coefficient(f, t);
      for (std::uint64_t seed = 1; seed <= 10; ++seed) {
        EXPECT_FALSE(verify_reconstruction(bad, TrialPlan{10, seed}).passed) << "t=" << t << " seed=" << seed;
      }
    }
  }
}

TEST(Mutation, ZeroCoefficientBecomesOne) {
  auto f = identity_t(FiniteField::prime(101));
  auto g = mutate_coefficient(f, 0);
  ASSERT_EQ(2u, g.terms.size());
  EXPECT_EQ(0u, g.terms[0].t);
  EXPECT_TRUE(ratfun_equal(g.terms[0].coeff, FRat::one(f.ring)));
}

}  // namespace
}  // namespace radext::verify
