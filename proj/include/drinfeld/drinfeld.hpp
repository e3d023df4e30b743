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

#ifndef DRINFELD_DRINFELD_HPP
#define DRINFELD_DRINFELD_HPP

/**
 * @file drinfeld.hpp
 * @brief Drinfeld F_q[T]-modules, their torsion, isogenies and quotients.
 *
 * A module of rank r over an A-field C is fixed by
 *   phi_T = gamma(T) + g_1 tau + ... + g_r tau^r,   g_r != 0,
 * and phi_a for other a in A = F_q[T] follows by substituting phi_T into a.
 * Over F_q(T) the structure map gamma is the inclusion (generic
 * characteristic). Over a finite field gamma(T) is an arbitrary element,
 * which covers reductions at finite places.
 */

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "drinfeld/error.hpp"
#include "drinfeld/finite_field.hpp"
#include "drinfeld/fq.hpp"
#include "drinfeld/poly.hpp"
#include "drinfeld/ratfunc.hpp"
#include "drinfeld/twisted.hpp"

namespace drinfeld {

template <TwistField F>
class DrinfeldModule {
 public:
  using elem = typename F::element_type;

  DrinfeldModule() = default;

  /// Validating constructor; prefer make_module().
  DrinfeldModule(F field, FiniteField fq, elem gamma_t, std::vector<elem> coeffs, bool generic)
      : F_(std::move(field)), A_(std::move(fq)), gamma_t_(std::move(gamma_t)), g_(std::move(coeffs)), generic_(generic) {
    if (g_.empty()) throw DomainError("a Drinfeld module needs rank >= 1");
    if (F_.is_zero(g_.back())) throw DomainError("leading coefficient g_r must be nonzero");
    std::vector<elem> c;
    c.reserve(g_.size() + 1);
    c.push_back(gamma_t_);
    c.insert(c.end(), g_.begin(), g_.end());
    phi_t_ = TwistedPoly<F>(F_, std::move(c));
  }

  const F& field() const noexcept { return F_; }
  /// A = F_q[T].
  const PolyRing& A() const noexcept { return A_; }
  int rank() const noexcept { return static_cast<int>(g_.size()); }
  /// g_1, ..., g_r.
  const std::vector<elem>& coefficients() const noexcept { return g_; }
  const TwistedPoly<F>& phi_T() const noexcept { return phi_t_; }
  const elem& gamma_T() const noexcept { return gamma_t_; }
  bool generic_characteristic() const noexcept { return generic_; }
  std::uint64_t q() const { return A_.field().size(); }

  /// gamma(a) = a evaluated at gamma(T).
  elem gamma(const Poly& a) const {
    elem r = F_.zero();
    for (std::size_t i = a.coeffs().size(); i-- > 0;) r = F_.add(F_.mul(r, gamma_t_), F_.from_fq(a.coeff(i)));
    return r;
  }

  friend bool operator==(const DrinfeldModule& a, const DrinfeldModule& b) {
    return a.phi_t_ == b.phi_t_ && a.generic_ == b.generic_;
  }

 private:
  F F_;
  PolyRing A_;
  elem gamma_t_{};
  std::vector<elem> g_;
  bool generic_ = false;
  TwistedPoly<F> phi_t_;
};

/// Generic characteristic over F_q(T): phi_T = T + g_1 tau + ... + g_r tau^r.
inline DrinfeldModule<RationalField> make_module(const RationalField& K, int rank, std::vector<RationalFunc> coeffs) {
  if (rank < 1) throw DomainError("rank must be at least 1");
  if (static_cast<int>(coeffs.size()) != rank) throw DomainError("expected exactly rank coefficients g_1..g_r");
  return DrinfeldModule<RationalField>(K, K.fq().field(), K.t(), std::move(coeffs), true);
}

/// Finite characteristic over a finite field L containing F_q, with the
/// structure map T -> gamma_t.
inline DrinfeldModule<FiniteField> make_module(const FiniteField& L, const FiniteField& fq, gf_t gamma_t, int rank,
                                               std::vector<gf_t> coeffs) {
  if (rank < 1) throw DomainError("rank must be at least 1");
  if (static_cast<int>(coeffs.size()) != rank) throw DomainError("expected exactly rank coefficients g_1..g_r");
  if (!L.has_subfield(fq)) {
    throw DomainError("coefficient field does not contain F_q");
  }
  if (L.frobenius_q() != fq.size()) throw DomainError("coefficient field has the wrong designated q");
  if (!L.contains(gamma_t)) throw DomainError("gamma(T) outside the coefficient field");
  for (auto c : coeffs) {
    if (!L.contains(c)) throw DomainError("coefficient outside the coefficient field");
  }
  return DrinfeldModule<FiniteField>(L, fq, gamma_t, std::move(coeffs), false);
}

/// phi_a by Horner's rule in the twisted ring.
template <TwistField F>
TwistedPoly<F> phi_at(const DrinfeldModule<F>& phi, const Poly& a) {
  const F& f = phi.field();
  TwistedPoly<F> r = TwistedPoly<F>::zero(f);
  for (std::size_t i = a.coeffs().size(); i-- > 0;) {
    r = r * phi.phi_T() + TwistedPoly<F>::constant(f, f.from_fq(a.coeff(i)));
  }
  return r;
}

/// phi_a as the q-polynomial whose zeros are the a-torsion.
template <TwistField F>
QPolynomial<F> torsion_poly(const DrinfeldModule<F>& phi, const Poly& a) {
  if (a.is_zero()) throw DomainError("torsion of the zero element");
  return to_q_poly(phi_at(phi, a));
}

/// u phi_T = psi_T u. Testing T suffices because A is generated by T.
template <TwistField F>
bool is_morphism(const TwistedPoly<F>& u, const DrinfeldModule<F>& phi, const DrinfeldModule<F>& psi) {
  if (!(u.field() == phi.field()) || !(phi.field() == psi.field())) {
    throw DomainError("morphism and modules over different coefficient fields");
  }
  if (phi.rank() != psi.rank()) throw DomainError("morphisms are only considered between modules of equal rank");
  return u * phi.phi_T() == psi.phi_T() * u;
}

template <TwistField F>
struct Isogeny {
  DrinfeldModule<F> source;
  DrinfeldModule<F> target;
  TwistedPoly<F> poly;
};

template <TwistField F>
Isogeny<F> make_isogeny(DrinfeldModule<F> source, DrinfeldModule<F> target, TwistedPoly<F> poly) {
  if (poly.is_zero()) throw DomainError("the zero morphism is not an isogeny");
  if (!is_morphism(poly, source, target)) throw DomainError("polynomial does not intertwine the two modules");
  if (source.generic_characteristic() && source.field().is_zero(d_part(poly))) {
    throw InvariantError("inseparable morphism in generic characteristic");
  }
  return {std::move(source), std::move(target), std::move(poly)};
}

/// log_q of deg f = #ker f: deg_tau of the polynomial minus the index of its
/// lowest nonzero coefficient (zero in generic characteristic).
template <TwistField F>
int isogeny_degree_exponent(const Isogeny<F>& f) {
  if (f.poly.is_zero()) throw DomainError("the zero morphism has no degree");
  return f.poly.degree() - f.poly.valuation();
}

template <TwistField F>
boost::multiprecision::cpp_int isogeny_degree(const Isogeny<F>& f) {
  boost::multiprecision::cpp_int d = 1;
  const int k = isogeny_degree_exponent(f);
  for (int i = 0; i < k; ++i) d *= f.source.q();
  return d;
}

/// The isogeny fhat: target -> source with fhat * f = phi_a. Requires
/// ker f inside phi[a], i.e. f right-divides phi_a.
template <TwistField F>
Isogeny<F> dual_isogeny(const Isogeny<F>& f, const Poly& a) {
  if (a.is_zero()) throw DomainError("dual isogeny needs a nonzero a");
  auto [quot, rem] = right_divmod(phi_at(f.source, a), f.poly);
  if (!rem.is_zero()) throw DomainError("kernel of the isogeny is not contained in phi[a]");
  if (!is_morphism(quot, f.target, f.source)) throw InvariantError("dual isogeny fails to intertwine");
  return {f.target, f.source, std::move(quot)};
}

/// A finite A-submodule H of the torsion, represented by the monic additive
/// polynomial with zero set H. For finite coefficient fields the points of H
/// can be given explicitly in an extension E of the coefficient field.
template <TwistField F>
struct KernelSubmodule {
  DrinfeldModule<F> ambient;
  TwistedPoly<F> kernel_poly;
  std::optional<FiniteField> points_field;
  std::vector<gf_t> generators;

  /// log_q #H.
  int dimension() const { return kernel_poly.degree(); }
};

namespace detail {

template <TwistField F>
TwistedPoly<F> make_monic(const TwistedPoly<F>& u) {
  const F& f = u.field();
  const auto inv = f.inv(u.lead());
  std::vector<typename F::element_type> c;
  for (const auto& x : u.coeffs()) c.push_back(f.mul(inv, x));
  return TwistedPoly<F>(f, std::move(c));
}

}  // namespace detail

/// H from its additive polynomial. u must be separable and ker u stable
/// under phi_T, i.e. u right-divides u phi_T.
template <TwistField F>
KernelSubmodule<F> kernel_from_poly(const DrinfeldModule<F>& phi, const TwistedPoly<F>& u) {
  if (u.is_zero()) throw DomainError("kernel polynomial must be nonzero");
  if (!(u.field() == phi.field())) throw DomainError("kernel polynomial over a different coefficient field");
  if (phi.field().is_zero(d_part(u))) throw DomainError("kernel polynomial is not separable");
  TwistedPoly<F> m = detail::make_monic(u);
  auto [quot, rem] = right_divmod(m * phi.phi_T(), m);
  if (!rem.is_zero()) throw DomainError("kernel is not stable under the A-action");
  return {phi, std::move(m), std::nullopt, {}};
}

/// Monic additive polynomial vanishing exactly on the F_q-span of `points`
/// (built one basis vector at a time: P <- (tau - P(h)^(q-1)) P).
inline TwistedPoly<FiniteField> subspace_polynomial(const FiniteField& E, const std::vector<gf_t>& points,
                                                    std::vector<gf_t>* basis = nullptr) {
  auto P = TwistedPoly<FiniteField>::one(E);
  const std::uint64_t q = E.frobenius_q();
  for (gf_t h : points) {
    if (!E.contains(h)) throw DomainError("point outside the given field");
    const gf_t c = q_poly_eval(P, h);
    if (c == 0) continue;
    P = TwistedPoly<FiniteField>(E, {E.neg(E.pow(c, q - 1)), E.one()}) * P;
    if (basis) basis->push_back(h);
  }
  return P;
}

/// The same construction over any coefficient field: c^(q-1) is computed
/// as c^q / c.
template <TwistField F>
TwistedPoly<F> span_polynomial(const F& K, const std::vector<typename F::element_type>& points) {
  auto P = TwistedPoly<F>::one(K);
  for (const auto& h : points) {
    const auto c = q_poly_eval(P, h);
    if (K.is_zero(c)) continue;
    const auto c_qm1 = K.mul(K.frobenius(c, 1), K.inv(c));
    P = TwistedPoly<F>(K, {K.neg(c_qm1), K.one()}) * P;
  }
  return P;
}

/// H = F_q-span of the given points of E (E an extension of phi's field).
/// Throws if the span is not phi_T-stable or its polynomial is not defined
/// over the coefficient field.
inline KernelSubmodule<FiniteField> kernel_from_points(const DrinfeldModule<FiniteField>& phi, const FiniteField& E,
                                                       const std::vector<gf_t>& points) {
  const FiniteField& L = phi.field();
  if (!E.has_subfield(L)) throw DomainError("points field must contain the coefficient field");
  std::vector<gf_t> basis;
  auto P = subspace_polynomial(E, points, &basis);
  const TwistedPoly<FiniteField> phiE(E, phi.phi_T().coeffs());
  for (gf_t h : basis) {
    if (q_poly_eval(P, q_poly_eval(phiE, h)) != 0) throw DomainError("span of the points is not stable under phi_T");
  }
  for (gf_t c : P.coeffs()) {
    if (!L.contains(c)) throw DomainError("kernel polynomial is not defined over the coefficient field");
  }
  return {phi, TwistedPoly<FiniteField>(L, P.coeffs()), E, basis};
}

/// Smallest phi_T-stable F_q-subspace containing the points; returns an
/// F_q-basis of it.
inline std::vector<gf_t> a_span(const DrinfeldModule<FiniteField>& phi, const FiniteField& E, std::vector<gf_t> points) {
  const TwistedPoly<FiniteField> phiE(E, phi.phi_T().coeffs());
  std::vector<gf_t> basis;
  auto P = TwistedPoly<FiniteField>::one(E);
  const std::uint64_t q = E.frobenius_q();
  std::size_t next = 0;
  while (next < points.size()) {
    const gf_t h = points[next++];
    const gf_t c = q_poly_eval(P, h);
    if (c == 0) continue;
    P = TwistedPoly<FiniteField>(E, {E.neg(E.pow(c, q - 1)), E.one()}) * P;
    basis.push_back(h);
    points.push_back(q_poly_eval(phiE, h));
  }
  return basis;
}

/// psi_T := (u phi_T) right-divided by u, for any nonzero u. Throws when the
/// remainder is nonzero or when psi_T no longer has constant term gamma(T).
template <TwistField F>
std::pair<DrinfeldModule<F>, Isogeny<F>> quotient_by_poly(const DrinfeldModule<F>& phi, const TwistedPoly<F>& u) {
  if (u.is_zero()) throw DomainError("quotient by the zero polynomial");
  auto [quot, rem] = right_divmod(u * phi.phi_T(), u);
  if (!rem.is_zero()) throw DomainError("kernel is not stable under the A-action");
  const F& f = phi.field();
  if (!(d_part(quot) == phi.gamma_T())) {
    throw DomainError("quotient leaves the category: d_part(psi_T) differs from gamma(T)");
  }
  if (quot.degree() != phi.rank()) throw InvariantError("quotient changed the rank");
  std::vector<typename F::element_type> g(quot.coeffs().begin() + 1, quot.coeffs().end());
  DrinfeldModule<F> psi(f, phi.A().field(), phi.gamma_T(), std::move(g), phi.generic_characteristic());
  if (!is_morphism(u, phi, psi)) throw InvariantError("quotient isogeny fails to intertwine");
  Isogeny<F> iso{phi, psi, u};
  return {std::move(psi), std::move(iso)};
}

/// phi -> phi/H with kernel H; deg f = #H.
template <TwistField F>
std::pair<DrinfeldModule<F>, Isogeny<F>> quotient_by_kernel(const DrinfeldModule<F>& phi, const KernelSubmodule<F>& H) {
  if (!(H.ambient == phi)) throw DomainError("kernel submodule belongs to a different module");
  return quotient_by_poly(phi, H.kernel_poly);
}

/// Valuation of a nonzero polynomial at a monic irreducible p.
inline int poly_valuation(const PolyRing& A, Poly f, const Poly& p) {
  if (f.is_zero()) throw DomainError("valuation of zero");
  int v = 0;
  while (true) {
    auto [q, r] = A.divmod(f, p);
    if (!r.is_zero()) return v;
    f = std::move(q);
    ++v;
  }
}

/// Coefficientwise reduction modulo a monic irreducible p (good reduction of
/// full rank required). The result lives over A/p with gamma(T) = T mod p.
inline DrinfeldModule<FiniteField> reduce_at_place(const DrinfeldModule<RationalField>& phi, const Poly& p) {
  const RationalField& K = phi.field();
  const ResidueField R(K.fq(), p);
  const FiniteField& L = R.field();
  std::vector<gf_t> g;
  for (std::size_t i = 0; i < phi.coefficients().size(); ++i) {
    const RationalFunc& c = phi.coefficients()[i];
    const gf_t den = R.reduce(c.den);
    if (den == 0) throw DomainError("bad reduction: coefficient g" + std::to_string(i + 1) + " has a pole at the place");
    g.push_back(L.div(R.reduce(c.num), den));
  }
  if (g.back() == 0) throw DomainError("bad reduction: leading coefficient vanishes at the place (rank drop)");
  return make_module(L, K.fq().field(), R.t_image(), phi.rank(), std::move(g));
}

/// True when phi has good reduction of full rank at p.
inline bool has_good_reduction(const DrinfeldModule<RationalField>& phi, const Poly& p) {
  const PolyRing& A = phi.A();
  for (const auto& c : phi.coefficients()) {
    if (c.num.is_zero()) continue;
    if (A.rem(c.den, p).is_zero()) return false;
  }
  return !A.rem(phi.coefficients().back().num, p).is_zero();
}

}  // namespace drinfeld

#endif  // DRINFELD_DRINFELD_HPP
