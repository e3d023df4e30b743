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

#include <algorithm>
#include <random>
#include <numeric>
#include <set>

#include "drinfeld/fq.hpp"
#include "drinfeld/poly.hpp"
#include "test_support.hpp"

using namespace drinfeld;
using namespace testing_support;

namespace {

const FiniteField& f3() {
  static const FiniteField F = FiniteField::prime(3);
  return F;
}

// Necklace count of monic irreducibles of degree n over F_q.
std::uint64_t necklace(std::uint64_t q, int n) {
  auto mobius = [](int m) {
    int res = 1;
    for (int p = 2; p * p <= m; ++p) {
      if (m % p == 0) {
        m /= p;
        if (m % p == 0) return 0;
        res = -res;
      }
    }
    if (m > 1) res = -res;
    return res;
  };
  long long total = 0;
  for (int d = 1; d <= n; ++d) {
    if (n % d) continue;
    long long pw = 1;
    for (int i = 0; i < n / d; ++i) pw *= static_cast<long long>(q);
    total += mobius(d) * pw;
  }
  return static_cast<std::uint64_t>(total / n);
}

}  // namespace

TEST(PolyArith, SpecExamplesOverF3) {
  const PolyRing A(f3());
  EXPECT_EQ(A.mul(Poly{1, 1}, Poly{2, 1}), (Poly{2, 0, 1}));
  auto [q, r] = A.divmod(Poly{1, 0, 1}, Poly{0, 1});
  EXPECT_EQ(q, (Poly{0, 1}));
  EXPECT_EQ(r, (Poly{1}));
  EXPECT_EQ(A.gcd(Poly{2, 0, 1}, Poly{1, 1}), (Poly{1, 1}));
}

TEST(PolyArith, DivisionByZeroThrows) {
  const PolyRing A(f3());
  EXPECT_THROW(A.divmod(Poly{1, 1}, Poly{}), DomainError);
}

TEST(PolyArith, DivmodReconstructsOnRandomPairs) {
  std::mt19937_64 rng(1);
  for (const FiniteField& F : {f3(), fq_make(3, 2).field(), FiniteField::prime(2), FiniteField::prime(7)}) {
    const PolyRing A(F);
    for (int t = 0; t < 1000; ++t) {
      const Poly f = random_poly(F, 9, rng);
      const Poly g = random_nonzero_poly(F, 5, rng);
      auto [s, r] = A.divmod(f, g);
      EXPECT_EQ(A.add(A.mul(s, g), r), f);
      EXPECT_LT(r.degree(), g.degree());
    }
  }
}

TEST(PolyArith, DegreeIsAdditive) {
  std::mt19937_64 rng(2);
  const PolyRing A(f3());
  for (int t = 0; t < 200; ++t) {
    const Poly f = random_nonzero_poly(f3(), 6, rng), g = random_nonzero_poly(f3(), 6, rng);
    EXPECT_EQ(A.mul(f, g).degree(), f.degree() + g.degree());
  }
}

TEST(PolyArith, GcdIsMonicAndDividesBoth) {
  std::mt19937_64 rng(3);
  const PolyRing A(f3());
  for (int t = 0; t < 200; ++t) {
    const Poly common = random_nonzero_poly(f3(), 2, rng);
    const Poly f = A.mul(common, random_nonzero_poly(f3(), 4, rng));
    const Poly g = A.mul(common, random_nonzero_poly(f3(), 4, rng));
    const Poly d = A.gcd(f, g);
    EXPECT_TRUE(A.is_monic(d));
    EXPECT_TRUE(A.rem(f, d).is_zero());
    EXPECT_TRUE(A.rem(g, d).is_zero());
    EXPECT_TRUE(A.rem(d, A.monic(common)).is_zero());
  }
}

TEST(Irreducibility, SpecExamples) {
  const PolyRing A(f3());
  EXPECT_TRUE(A.is_irreducible(Poly{1, 0, 1}));
  EXPECT_FALSE(A.is_irreducible(Poly{0, 1, 1}));
  EXPECT_TRUE(A.is_irreducible(Poly{0, 1}));
  EXPECT_FALSE(A.is_irreducible(Poly{2}));
  EXPECT_THROW(A.is_irreducible(Poly{}), DomainError);
}

TEST(Irreducibility, AgreesWithTrialDivision) {
  std::mt19937_64 rng(4);
  for (const FiniteField& F : {f3(), FiniteField::prime(2), fq_make(2, 2).field()}) {
    const PolyRing A(F);
    for (int t = 0; t < 300; ++t) {
      const Poly f = random_nonzero_poly(F, 6, rng);
      EXPECT_EQ(A.is_irreducible(f), irreducible_by_trial_division(F, f));
    }
  }
}

TEST(Irreducibility, CountsMatchNecklaceFormula) {
  for (const FiniteField& F : {f3(), FiniteField::prime(2), fq_make(3, 2).field()}) {
    const PolyRing A(F);
    for (int n = 1; n <= (F.size() > 3 ? 3 : 5); ++n) {
      const auto irr = A.irreducibles_of_degree(static_cast<std::size_t>(n));
      EXPECT_EQ(irr.size(), necklace(F.size(), n));
      EXPECT_TRUE(std::is_sorted(irr.begin(), irr.end()));
    }
  }
  // trial division oracle, degree <= 3 over F_3
  auto by_trial = irreducibles_by_trial_division(f3(), 3);
  std::vector<Poly> ours;
  for (int n = 1; n <= 3; ++n) {
    for (auto& g : PolyRing(f3()).irreducibles_of_degree(static_cast<std::size_t>(n))) ours.push_back(g);
  }
  std::set<std::vector<gf_t>> a, b;
  for (auto& g : by_trial) a.insert(g.coeffs());
  for (auto& g : ours) b.insert(g.coeffs());
  EXPECT_EQ(a, b);
}

TEST(Factorisation, ProductOfFactorsReconstructs) {
  std::mt19937_64 rng(5);
  for (const FiniteField& F : {f3(), FiniteField::prime(2), fq_make(3, 2).field(), FiniteField::prime(5)}) {
    const PolyRing A(F);
    for (int t = 0; t < 100; ++t) {
      Poly f = A.mul(random_nonzero_poly(F, 5, rng), random_nonzero_poly(F, 4, rng));
      f = A.mul(f, random_nonzero_poly(F, 2, rng));  // repeated factors are common here
      if (f.degree() < 1) continue;
      Poly prod = A.one();
      for (const auto& pf : A.factor(f, 17)) {
        EXPECT_TRUE(A.is_monic(pf.factor));
        EXPECT_TRUE(irreducible_by_trial_division(F, pf.factor));
        EXPECT_EQ(multiplicity(F, f, pf.factor), pf.multiplicity);
        prod = A.mul(prod, A.pow(pf.factor, static_cast<unsigned>(pf.multiplicity)));
      }
      EXPECT_EQ(prod, A.monic(f));
      int total = 0;
      for (int d : A.factor_degrees(f)) total += d;
      EXPECT_EQ(total, f.degree());
    }
  }
}

TEST(Roots, ProductOfKnownLinearFactors) {
  std::mt19937_64 rng(6);
  const FiniteField small = fq_make(3, 2).field();
  const FiniteField large = extend(FiniteField::prime(3), 9);  // above the exhaustive limit
  ASSERT_GT(large.size(), PolyRing::kExhaustiveRootLimit);
  for (const FiniteField& F : {small, large}) {
    const PolyRing A(F);
    for (int t = 0; t < 20; ++t) {
      std::set<gf_t> want;
      Poly f = A.one();
      for (int k = 0; k < 5; ++k) {
        const gf_t a = random_elem(F, rng);
        want.insert(a);
        f = A.mul(f, Poly{F.neg(a), 1});
      }
      f = A.mul(f, Poly{1, 0, 1, 1});  // extra factor with possibly no roots
      std::set<gf_t> brute;
      for (gf_t x : A.roots(f, 3)) brute.insert(x);
      for (gf_t a : want) EXPECT_TRUE(brute.count(a));
      for (gf_t x : brute) EXPECT_EQ(A.eval(f, x), 0u);
    }
  }
}

TEST(Roots, SpecExamplesInExtensions) {
  const FiniteField F = f3();
  // x^3 + x in F_9 -> {0, i, 2i}
  auto r = roots_in_extension(F, Poly{0, 1, 0, 1}, 2);
  EXPECT_EQ(r.roots, (std::vector<gf_t>{0, 3, 6}));
  EXPECT_EQ(r.field.mul(3, 3), r.field.from_int(-1));
  EXPECT_TRUE(roots_in_extension(F, Poly{1, 0, 1}, 1).roots.empty());
  EXPECT_EQ(roots_in_extension(F, Poly{0, 2, 0, 1}, 1).roots, (std::vector<gf_t>{0, 1, 2}));
  EXPECT_THROW(roots_in_extension(F, Poly{}, 1), DomainError);
}

TEST(Roots, DistinctRootCountMatchesEnumeration) {
  std::mt19937_64 rng(7);
  const FiniteField F = f3();
  const PolyRing A(F);
  for (int t = 0; t < 50; ++t) {
    const Poly f = A.mul(random_nonzero_poly(F, 3, rng), random_nonzero_poly(F, 3, rng));
    if (f.degree() < 1) continue;
    // splitting field degree divides lcm of factor degrees; take it from factor_degrees
    std::size_t n = 1;
    for (int d : A.factor_degrees(f)) n = std::lcm(n, static_cast<std::size_t>(d));
    const auto r = roots_in_extension(F, f, n);
    EXPECT_EQ(static_cast<int>(r.roots.size()), A.distinct_root_count(f));
  }
}
