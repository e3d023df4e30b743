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
#include <numeric>
#include <random>
#include <set>

#include "drinfeld/drinfeld.hpp"
#include "drinfeld/expr.hpp"
#include "test_support.hpp"

using namespace drinfeld;
using namespace testing_support;

namespace {

using KPoly = TwistedPoly<RationalField>;
using EPoly = TwistedPoly<FiniteField>;

const RationalField& f3t() {
  static const RationalField K(fq_make(3, 1));
  return K;
}
const FiniteField& f3() {
  static const FiniteField F = fq_make(3, 1).field();
  return F;
}
KPoly tw(const std::string& s) { return parse_twisted(f3t(), s); }
RationalFunc rf(const std::string& s) { return parse_rational(f3t(), s); }

DrinfeldModule<RationalField> module(std::initializer_list<std::string> g) {
  std::vector<RationalFunc> c;
  for (const auto& s : g) c.push_back(rf(s));
  const int r = static_cast<int>(c.size());
  return make_module(f3t(), r, std::move(c));
}

/// phi_T = tau^2 over F_9 (F_9 viewed over F_3, gamma(T) = 0).
DrinfeldModule<FiniteField> tau_squared_f9() {
  const FiniteField f9 = extend(f3(), 2);
  return make_module(f9, f3(), 0, 2, {0, 1});
}

/// Random finite-characteristic module over F_{q^4} with random gamma(T).
DrinfeldModule<FiniteField> random_finite_module(const FiniteField& fq, int rank, std::mt19937_64& rng) {
  const FiniteField L = extend(fq, 4);
  std::vector<gf_t> g;
  for (int i = 0; i < rank; ++i) g.push_back(i + 1 == rank ? random_nonzero(L, rng) : random_elem(L, rng));
  return make_module(L, fq, random_elem(L, rng), rank, std::move(g));
}

std::size_t splitting_degree_of(const FiniteField& L, const Poly& f) {
  const PolyRing R(L);
  std::size_t n = 1;
  for (int d : R.factor_degrees(f)) n = std::lcm(n, static_cast<std::size_t>(d));
  return n;
}

/// Whether the degree-n extension of L fits the table limit of 3^12 elements.
bool extension_fits(const FiniteField& L, std::size_t n) {
  std::uint64_t size = 1;
  for (std::size_t i = 0; i < n; ++i) {
    size *= L.size();
    if (size > 531441) return false;
  }
  return true;
}

}  // namespace

TEST(MakeModule, Examples) {
  const auto carlitz = module({"1"});
  EXPECT_EQ(carlitz.rank(), 1);
  EXPECT_EQ(carlitz.phi_T(), tw("T + t"));
  const auto running = module({"T^5", "T"});
  EXPECT_EQ(running.phi_T(), tw("T + T^5*t + T*t^2"));
  EXPECT_EQ(running.gamma_T(), f3t().t());
  EXPECT_TRUE(running.generic_characteristic());
  EXPECT_THROW(module({"1", "0"}), DomainError);
  EXPECT_THROW(make_module(f3t(), 2, {rf("1")}), DomainError);
  EXPECT_THROW(make_module(f3t(), 0, {}), DomainError);
}

TEST(MakeModule, FiniteCharacteristicChecks) {
  const FiniteField f9 = extend(f3(), 2);
  EXPECT_NO_THROW(make_module(f9, f3(), 0, 2, {0, 1}));
  EXPECT_THROW(make_module(f9, f3(), 0, 2, {1, 0}), DomainError);
  EXPECT_THROW(make_module(f9, f3(), 9, 1, {1}), DomainError);
  EXPECT_THROW(make_module(f3(), f9, 0, 1, {1}), DomainError);
  EXPECT_THROW(make_module(fq_make(3, 2).field(), f3(), 0, 1, {1}), DomainError);
}

TEST(PhiAt, Examples) {
  const auto carlitz = module({"1"});
  EXPECT_EQ(phi_at(carlitz, Poly{1}), KPoly::one(f3t()));
  EXPECT_TRUE(phi_at(carlitz, Poly{}).is_zero());
  EXPECT_EQ(phi_at(carlitz, Poly{0, 0, 1}), tw("T^2 + (T + T^3)*t + t^2"));
  const auto running = module({"T^5", "T"});
  EXPECT_EQ(phi_at(running, Poly{1, 0, 1}).degree(), 4);
}

TEST(PhiAt, HomomorphismLawsGeneric) {
  std::mt19937_64 rng(29);
  const RationalField& K = f3t();
  const auto carlitz = module({"1"});
  for (int i = 0; i < 30; ++i) {
    const Poly a = random_poly(f3(), 4, rng), b = random_poly(f3(), 4, rng);
    const PolyRing& A = carlitz.A();
    ASSERT_EQ(phi_at(carlitz, A.mul(a, b)), phi_at(carlitz, a) * phi_at(carlitz, b));
    ASSERT_EQ(phi_at(carlitz, A.add(a, b)), phi_at(carlitz, a) + phi_at(carlitz, b));
  }
  for (int i = 0; i < 20; ++i) {
    const int r = 1 + static_cast<int>(rng() % 2);
    const auto phi = random_generic_module(K, r, 1, rng);
    const Poly a = random_nonzero_poly(f3(), 2, rng), b = random_nonzero_poly(f3(), 1, rng);
    const PolyRing& A = phi.A();
    const KPoly pa = phi_at(phi, a);
    ASSERT_EQ(phi_at(phi, A.mul(a, b)), pa * phi_at(phi, b));
    ASSERT_EQ(phi_at(phi, A.add(a, b)), pa + phi_at(phi, b));
    ASSERT_EQ(pa.degree(), r * a.degree());
    ASSERT_EQ(d_part(pa), phi.gamma(a));
    // phi_a commutes with phi_T
    ASSERT_EQ(pa * phi.phi_T(), phi.phi_T() * pa);
  }
}

TEST(PhiAt, HomomorphismLawsFinite) {
  std::mt19937_64 rng(31);
  for (const auto& fq : {f3(), fq_make(2, 1).field(), fq_make(3, 2).field()}) {
    for (int i = 0; i < 40; ++i) {
      const int r = 1 + static_cast<int>(rng() % 3);
      const auto phi = random_finite_module(fq, r, rng);
      const Poly a = random_nonzero_poly(fq, 4, rng), b = random_nonzero_poly(fq, 4, rng);
      const PolyRing& A = phi.A();
      const EPoly pa = phi_at(phi, a);
      ASSERT_EQ(phi_at(phi, A.mul(a, b)), pa * phi_at(phi, b));
      ASSERT_EQ(phi_at(phi, A.add(a, b)), pa + phi_at(phi, b));
      ASSERT_EQ(pa.degree(), r * a.degree());
      ASSERT_EQ(d_part(pa), phi.gamma(a));
    }
  }
}

TEST(MorphismCheck, GeneratorSufficesOnRandomElements) {
  std::mt19937_64 rng(37);
  const auto phi = module({"T^5", "T"});
  const auto carlitz = module({"1"});
  for (int i = 0; i < 5; ++i) {
    const Poly a = random_nonzero_poly(f3(), 1, rng);
    const KPoly u = phi_at(phi, Poly{1, 1});
    EXPECT_EQ(u * phi_at(phi, a), phi_at(phi, a) * u);
  }
  EXPECT_TRUE(is_morphism(phi.phi_T(), phi, phi));
  EXPECT_FALSE(is_morphism(KPoly::one(f3t()), phi, module({"T^5", "T + 1"})));
  EXPECT_FALSE(is_morphism(tw("t"), carlitz, carlitz));
  EXPECT_THROW(is_morphism(tw("1"), carlitz, phi), DomainError);
}

TEST(Torsion, Examples) {
  const auto carlitz = module({"1"});
  const auto tp = torsion_poly(carlitz, Poly{0, 1});
  EXPECT_EQ(tp.poly, tw("T + t"));
  EXPECT_THROW(torsion_poly(carlitz, Poly{}), DomainError);

  const auto phi = tau_squared_f9();
  const DrinfeldModule<FiniteField> over_f3 = make_module(f3(), f3(), 0, 2, {0, 1});
  const auto t1 = torsion_poly(over_f3, Poly{2, 1});
  // x^9 - x
  EXPECT_EQ(dense_coefficients(t1), (std::vector<gf_t>{0, 2, 0, 0, 0, 0, 0, 0, 0, 1}));
  EXPECT_EQ(additive_roots(phi.field(), torsion_poly(phi, Poly{2, 1}).poly).size(), 9u);
}

TEST(Torsion, CardinalityAtGoodReductions) {
  // reductions of the running example and random rank-2/3 modules; a coprime to p
  std::mt19937_64 rng(41);
  const auto running = module({"T^5 + 2*T", "T"});
  const PolyRing A(f3());
  int checked = 0;
  for (const Poly& p : irreducibles_by_trial_division(f3(), 2)) {
    if (!has_good_reduction(running, p)) continue;
    const auto red = reduce_at_place(running, p);
    for (const Poly& a : irreducibles_by_trial_division(f3(), 1)) {
      if (a == p) continue;
      const Poly dense(dense_coefficients(torsion_poly(red, a)));
      const PolyRing R(red.field());
      EXPECT_EQ(R.distinct_root_count(dense), 9);
      const std::size_t n = splitting_degree_of(red.field(), dense);
      if (!extension_fits(red.field(), n)) continue;
      const auto roots = additive_roots(extend(red.field(), n), torsion_poly(red, a).poly);
      EXPECT_EQ(roots.size(), 9u);
      ++checked;
    }
  }
  EXPECT_GE(checked, 3);
}

namespace {

/// First (place, l) of degree <= 2 at which the running example's l-torsion
/// splits inside the table limit.
struct TorsionCase {
  DrinfeldModule<FiniteField> red;
  Poly ell;
  FiniteField E;
};

TorsionCase small_torsion_case(int min_ell_degree) {
  const auto running = module({"T^5 + 2*T", "T"});
  for (const Poly& p : irreducibles_by_trial_division(f3(), 2)) {
    if (!has_good_reduction(running, p)) continue;
    const auto red = reduce_at_place(running, p);
    for (const Poly& ell : irreducibles_by_trial_division(f3(), 2)) {
      if (ell == p || ell.degree() < min_ell_degree) continue;
      const Poly dense(dense_coefficients(torsion_poly(red, ell)));
      const std::size_t n = splitting_degree_of(red.field(), dense);
      if (extension_fits(red.field(), n)) return {red, ell, extend(red.field(), n)};
    }
  }
  throw std::runtime_error("no small torsion case");
}

}  // namespace

TEST(Torsion, StableUnderTheAction) {
  const auto tc = small_torsion_case(1);
  const EPoly pa(tc.E, phi_at(tc.red, tc.ell).coeffs());
  const auto roots = additive_roots(tc.E, pa);
  const std::uint64_t q = 3;
  std::uint64_t expect = 1;
  for (int i = 0; i < 2 * tc.ell.degree(); ++i) expect *= q;
  ASSERT_EQ(roots.size(), expect);
  const std::set<gf_t> rootset(roots.begin(), roots.end());
  std::mt19937_64 rng(43);
  for (int i = 0; i < 5; ++i) {
    const EPoly pb(tc.E, phi_at(tc.red, random_nonzero_poly(f3(), 3, rng)).coeffs());
    std::set<gf_t> image;
    for (gf_t x : roots) image.insert(q_poly_eval(pb, x));
    EXPECT_TRUE(std::includes(rootset.begin(), rootset.end(), image.begin(), image.end()));
  }
}

TEST(Isogeny, Degrees) {
  const auto carlitz = module({"1"});
  const auto f = make_isogeny(carlitz, carlitz, phi_at(carlitz, Poly{0, 1}));
  EXPECT_EQ(isogeny_degree(f), 3);
  const auto id = make_isogeny(carlitz, carlitz, KPoly::one(f3t()));
  EXPECT_EQ(isogeny_degree(id), 1);
  const auto running = module({"T^5", "T"});
  EXPECT_EQ(isogeny_degree(make_isogeny(running, running, phi_at(running, Poly{1, 0, 1}))), 81);
  // inseparable endomorphism in finite characteristic: tau of tau^2 over F_9
  const auto phi = tau_squared_f9();
  const auto frob = make_isogeny(phi, phi, EPoly::tau(phi.field()));
  EXPECT_EQ(isogeny_degree(frob), 1);
  EXPECT_THROW(make_isogeny(carlitz, carlitz, KPoly::zero(f3t())), DomainError);
  EXPECT_THROW(make_isogeny(carlitz, carlitz, tw("t")), DomainError);
}

TEST(Isogeny, DualExamples) {
  const auto carlitz = module({"1"});
  const Poly a{0, 1};
  const auto f = make_isogeny(carlitz, carlitz, phi_at(carlitz, a));
  const auto fhat = dual_isogeny(f, a);
  EXPECT_EQ(fhat.poly, KPoly::one(f3t()));

  const auto phi = tau_squared_f9();
  const auto g = make_isogeny(phi, phi, EPoly(phi.field(), {2, 1}));
  const Poly tm1{2, 1};
  const auto ghat = dual_isogeny(g, tm1);
  EXPECT_EQ(ghat.poly * g.poly, phi_at(phi, tm1));
  EXPECT_EQ(ghat.poly, EPoly(phi.field(), {1, 1}));
  EXPECT_EQ(isogeny_degree(g) * isogeny_degree(ghat), 9);
  // ker(tau - 1) = F_3 is not inside phi[T] = ker tau^2
  EXPECT_THROW(dual_isogeny(g, Poly{0, 1}), DomainError);
  EXPECT_THROW(dual_isogeny(g, Poly{}), DomainError);
}

TEST(Quotient, Examples) {
  const auto carlitz = module({"1"});
  const auto H = kernel_from_poly(carlitz, carlitz.phi_T());
  auto [psi, f] = quotient_by_kernel(carlitz, H);
  EXPECT_EQ(psi, carlitz);
  EXPECT_EQ(isogeny_degree(f), 3);

  const auto phi = tau_squared_f9();
  const auto Hp = kernel_from_points(phi, phi.field(), {1});
  EXPECT_EQ(Hp.kernel_poly, EPoly(phi.field(), {2, 1}));
  EXPECT_EQ(Hp.dimension(), 1);
  auto [psi2, f2] = quotient_by_kernel(phi, Hp);
  EXPECT_EQ(psi2.phi_T(), EPoly::tau(phi.field(), 2));
  EXPECT_EQ(isogeny_degree(f2), 3);

  EXPECT_THROW(quotient_by_poly(carlitz, tw("t")), DomainError);
  EXPECT_THROW(quotient_by_poly(carlitz, KPoly::zero(f3t())), DomainError);
  EXPECT_THROW(kernel_from_poly(carlitz, tw("t")), DomainError);
  EXPECT_THROW(kernel_from_poly(carlitz, tw("1 + t")), DomainError);
  EXPECT_THROW(quotient_by_kernel(module({"T^5", "T"}), H), DomainError);
}

TEST(Quotient, KernelFromPointsRejectsUnstableSpans) {
  const auto tc = small_torsion_case(2);
  const auto roots = additive_roots(tc.E, EPoly(tc.E, phi_at(tc.red, tc.ell).coeffs()));
  const std::size_t ell_deg = static_cast<std::size_t>(tc.ell.degree());
  bool rejected = false;
  for (gf_t x : roots) {
    if (x == 0) continue;
    const auto span = a_span(tc.red, tc.E, {x});
    // A/l = F_{3^deg l} acts, so F_3-dimensions are multiples of deg l
    EXPECT_EQ(span.size() % ell_deg, 0u);
    try {
      (void)kernel_from_points(tc.red, tc.E, {x});
    } catch (const DomainError&) {
      rejected = true;
    }
  }
  EXPECT_TRUE(rejected);
  // the full torsion is always stable and has dimension 2 deg l
  EXPECT_EQ(a_span(tc.red, tc.E, roots).size(), 2 * ell_deg);
}

TEST(Quotient, RationalRankTwoFamily) {
  // kernel spanned by alpha with phi_T(alpha) = lambda*alpha
  std::mt19937_64 rng(47);
  const RationalField& K = f3t();
  for (int i = 0; i < 10; ++i) {
    const RationalFunc alpha = random_nonzero_rational(K, 2, rng);
    const RationalFunc g1 = random_rational(K, 2, rng);
    const gf_t lambda = random_elem(f3(), rng);
    const RationalFunc lhs = K.sub(K.sub(K.mul(K.from_fq(lambda), alpha), K.mul(K.t(), alpha)), K.mul(g1, K.frobenius(alpha, 1)));
    const RationalFunc g2 = K.div(lhs, K.frobenius(alpha, 2));
    if (K.is_zero(g2)) continue;
    const auto phi = make_module(K, 2, {g1, g2});
    const KPoly u = span_polynomial(K, std::vector<RationalFunc>{alpha});
    EXPECT_TRUE(K.is_zero(q_poly_eval(u, alpha)));
    auto [psi, f] = quotient_by_kernel(phi, kernel_from_poly(phi, u));
    const Poly N{f3().neg(lambda), 1};
    const auto fhat = dual_isogeny(f, N);
    EXPECT_EQ(fhat.poly * f.poly, phi_at(phi, N));
    EXPECT_EQ(isogeny_degree(f) * isogeny_degree(fhat), 9);
  }
}

TEST(Reduction, Examples) {
  const auto carlitz_red = reduce_at_place(module({"1"}), Poly{0, 1});
  EXPECT_EQ(carlitz_red.phi_T(), EPoly::tau(carlitz_red.field()));
  EXPECT_EQ(carlitz_red.gamma_T(), 0u);
  const auto red = reduce_at_place(module({"T", "1"}), Poly{0, 1});
  EXPECT_EQ(red.phi_T(), EPoly::tau(red.field(), 2));
  EXPECT_FALSE(red.generic_characteristic());
  EXPECT_THROW(reduce_at_place(module({"1/T"}), Poly{0, 1}), DomainError);
  EXPECT_THROW(reduce_at_place(module({"1", "T"}), Poly{0, 1}), DomainError);
  EXPECT_FALSE(has_good_reduction(module({"1/T"}), Poly{0, 1}));
  EXPECT_FALSE(has_good_reduction(module({"1", "T"}), Poly{0, 1}));
  EXPECT_TRUE(has_good_reduction(module({"1/T", "1"}), Poly{1, 1}));
  // degree-2 place: the residue field is F_9 and gamma(T) is the class of T
  const auto red2 = reduce_at_place(module({"T^5 + 2*T", "T"}), Poly{1, 0, 1});
  EXPECT_EQ(red2.field().size(), 9u);
  EXPECT_EQ(red2.field().frobenius_q(), 3u);
  const FiniteField& L = red2.field();
  EXPECT_EQ(L.add(L.mul(red2.gamma_T(), red2.gamma_T()), 1), 0u);
}
