// Copyright 2026 The drinfeld-bounds Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <gtest/gtest.h>

#include <cmath>

#include "drinfeld/bounds.hpp"

using namespace drinfeld;

namespace {

BoundParams running(ExpBase base = ExpBase::d) {
  BoundParams p;
  p.q = 3;
  p.d = 1;
  p.r = 2;
  p.h = 5;
  p.h_G = Rational(5, 2);
  p.log_c2 = 0.0;
  p.exp_base = base;
  return p;
}

double log3(double x) { return std::log(x) / std::log(3.0); }

/// Largest x with x ln q - n ln x <= omega ln q, by bisection on [n / ln q, 1e7].
double bisect_c(double q, double n, double omega) {
  auto f = [&](double x) { return x * std::log(q) - n * std::log(x) - omega * std::log(q); };
  double lo = n / std::log(q), hi = 1e7;
  for (int i = 0; i < 300; ++i) {
    const double mid = 0.5 * (lo + hi);
    (f(mid) <= 0 ? lo : hi) = mid;
  }
  return 0.5 * (lo + hi);
}

}  // namespace

TEST(Bounds, Nd) {
  EXPECT_EQ(n_d(1), 1280);
  EXPECT_EQ(n_d(2), 21870);
  EXPECT_EQ(n_d(3), 163840);
  EXPECT_EQ(exponent_n(running(ExpBase::r)), 21870);
  EXPECT_THROW(n_d(1000), DomainError);
}

TEST(Bounds, DegreeBoundExamples) {
  EXPECT_NEAR(dd_log_degree_bound(running(ExpBase::r), 5), 21870 * log3(5), 1e-9);
  EXPECT_NEAR(dd_log_degree_bound(running(ExpBase::r), 5), 32039.0, 0.1);
  EXPECT_NEAR(dd_log_degree_bound(running(), 5), 1875.2, 0.05);
  EXPECT_EQ(dd_log_degree_bound(running(), 1), 0.0);
  EXPECT_EQ(dd_log_degree_bound(running(), Rational(1, 3)), 0.0);
}

TEST(Bounds, Ineq1Examples) {
  const BoundParams p = running();
  EXPECT_EQ(ineq1_log_argument(p), Rational(31, 8));
  const double rhs = 1280 * (2 + log3(31.0 / 8.0));
  EXPECT_NEAR(ineq1_rhs(p), rhs, 1e-9 * rhs);
  EXPECT_NEAR(rhs, 4138.19, 0.01);

  auto e1 = ineq1_holds(1, p);
  EXPECT_EQ(e1.lhs, 1.0);
  EXPECT_TRUE(e1.holds);
  auto e100 = ineq1_holds(100, p);
  EXPECT_NEAR(e100.lhs, 100 - 1280 * log3(100), 1e-9);
  EXPECT_NEAR(e100.lhs, -5265.5, 0.1);
  EXPECT_TRUE(e100.holds);
  auto e20000 = ineq1_holds(20000, p);
  EXPECT_NEAR(e20000.lhs, 8461.3, 0.1);
  EXPECT_FALSE(e20000.holds);
  EXPECT_THROW(ineq1_holds(0, p), DomainError);
}

TEST(Bounds, Ineq2Examples) {
  const BoundParams p = running();
  EXPECT_TRUE(ineq2_holds(100, p).holds);
  EXPECT_NEAR(ineq2_holds(100, p).rhs, 1875.17, 0.01);
  EXPECT_FALSE(ineq2_holds(2000, p).holds);
  BoundParams one = p;
  one.h = 1;
  EXPECT_EQ(ineq2_holds(1, one).rhs, 0.0);
  EXPECT_FALSE(ineq2_holds(1, one).holds);
  // literal bracketing: N log_q(d) h
  EXPECT_EQ(ineq2_rhs_literal(p), 0.0);
  BoundParams d2 = p;
  d2.d = 2;
  EXPECT_NEAR(ineq2_rhs_literal(d2), 21870 * log3(2) * 5, 1e-6);
  EXPECT_NEAR(ineq2_rhs(d2), 21870 * log3(10), 1e-6);
}

TEST(Bounds, Omega) {
  const BoundParams p = running();
  EXPECT_NEAR(omega_phi(p), 1280 * (2 + log3(31.0 / 8.0)), 1e-9 * 4138);
  BoundParams shifted = p;
  shifted.log_c2 = 10;
  EXPECT_NEAR(ineq1_rhs(shifted) - ineq1_rhs(p), 10.0, 1e-9);
  EXPECT_NEAR(ineq2_rhs(shifted) - ineq2_rhs(p), 10.0, 1e-9);
  EXPECT_NEAR(omega_phi(shifted) - omega_phi(p), 10.0, 1e-9);

  BoundParams constant = p;
  constant.h = 0;
  constant.h_G = 0;
  EXPECT_EQ(ineq1_log_argument(constant), Rational(11, 8));
  EXPECT_EQ(ineq2_rhs(constant), 0.0);
  EXPECT_NEAR(omega_phi(constant), 1280 * (2 + log3(11.0 / 8.0)), 1e-9 * 2931);
}

TEST(Bounds, ParameterValidation) {
  BoundParams p = running();
  p.r = 1;
  EXPECT_THROW(omega_phi(p), DomainError);
  p = running();
  p.q = 1;
  EXPECT_THROW(omega_phi(p), DomainError);
  p = running();
  p.h = -1;
  EXPECT_THROW(irreducibility_threshold(p), DomainError);
  p = running();
  p.log_c2 = NAN;
  EXPECT_THROW(irreducibility_threshold(p), DomainError);
  p = running();
  p.d = 0;
  EXPECT_THROW(irreducibility_threshold(p), DomainError);
}

TEST(Threshold, RunningExample) {
  const BoundReport rep = irreducibility_threshold(running());
  EXPECT_EQ(rep.n, 1280);
  EXPECT_NEAR(rep.omega, 4138.19, 0.01);
  const double oracle = bisect_c(3, 1280, rep.omega);
  EXPECT_NEAR(rep.c_threshold, oracle, 0.01 * oracle);
  EXPECT_NEAR(rep.c_threshold, 1.54e4, 0.01 * 1.54e4);
  EXPECT_EQ(rep.threshold, std::max(rep.c_threshold, rep.omega));
  EXPECT_NEAR(rep.lemma.w_argument, -2.46e-5, 0.01 * 2.46e-5);
  // both conditions at 1.01 times the threshold
  const double x = rep.threshold * 1.01;
  EXPECT_GT(x * std::log(3.0) - 1280 * std::log(x), rep.omega * std::log(3.0));
  EXPECT_GT(x, rep.omega);
}

TEST(Threshold, BothCasesFailAboveThreshold) {
  for (BoundParams p : {running(), running(ExpBase::r)}) {
    const BoundReport rep = irreducibility_threshold(p);
    const auto start = static_cast<std::int64_t>(std::floor(rep.threshold)) + 1;
    for (std::int64_t deg = start; deg <= static_cast<std::int64_t>(rep.threshold + 100); ++deg) {
      ASSERT_FALSE(ineq1_holds(deg, p).holds) << deg;
      ASSERT_FALSE(ineq2_holds(deg, p).holds) << deg;
    }
    // and just below C case 1 is still possible
    EXPECT_TRUE(ineq1_holds(static_cast<std::int64_t>(rep.c_threshold) - 1, p).holds);
  }
}

TEST(Threshold, Monotone) {
  BoundParams p = running();
  double last_omega = -1, last_threshold = -1;
  for (int k = 0; k < 20; ++k) {
    p.h_G = Rational(5, 2) + Rational(k, 3);
    const BoundReport rep = irreducibility_threshold(p);
    EXPECT_GT(rep.omega, last_omega);
    EXPECT_GE(rep.threshold, last_threshold);
    last_omega = rep.omega;
    last_threshold = rep.threshold;
  }
}

TEST(Threshold, MatchesBisectionAcrossParameters) {
  for (std::uint64_t q : {2u, 3u, 5u, 9u}) {
    for (int d : {1, 2}) {
      for (int r : {2, 3}) {
        BoundParams p;
        p.q = q;
        p.d = d;
        p.r = r;
        p.h = 7;
        p.h_G = Rational(3, 2);
        const BoundReport rep = irreducibility_threshold(p);
        const double oracle = bisect_c(static_cast<double>(q), static_cast<double>(rep.n), rep.omega);
        EXPECT_NEAR(rep.c_threshold, oracle, 1e-6 * oracle) << q << " " << d << " " << r;
      }
    }
  }
}
