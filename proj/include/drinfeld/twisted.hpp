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

#ifndef DRINFELD_TWISTED_HPP
#define DRINFELD_TWISTED_HPP

/**
 * @file twisted.hpp
 * @brief The twisted polynomial ring C{tau} with tau a = a^q tau.
 *
 * C is any coefficient field providing the operations of TwistField; the
 * library instantiates it with FiniteField (residue fields, F_{q^n}) and with
 * RationalField (F_q(T)). An element sum c_i tau^i acts on C as the additive
 * q-polynomial x -> sum c_i x^(q^i), and composition of q-polynomials is
 * multiplication in C{tau}.
 */

#include <algorithm>
#include <concepts>
#include <cstdint>
#include <unordered_set>
#include <utility>
#include <vector>

#include "drinfeld/error.hpp"
#include "drinfeld/finite_field.hpp"

namespace drinfeld {

template <class F>
concept TwistField = requires(const F& f, const typename F::element_type& a, std::uint64_t k) {
  { f.zero() } -> std::convertible_to<typename F::element_type>;
  { f.one() } -> std::convertible_to<typename F::element_type>;
  { f.add(a, a) } -> std::convertible_to<typename F::element_type>;
  { f.sub(a, a) } -> std::convertible_to<typename F::element_type>;
  { f.neg(a) } -> std::convertible_to<typename F::element_type>;
  { f.mul(a, a) } -> std::convertible_to<typename F::element_type>;
  { f.inv(a) } -> std::convertible_to<typename F::element_type>;
  { f.frobenius(a, k) } -> std::convertible_to<typename F::element_type>;
  { f.is_zero(a) } -> std::convertible_to<bool>;
  { f.frobenius_q() } -> std::convertible_to<std::uint64_t>;
  { f == f } -> std::convertible_to<bool>;
};

template <TwistField F>
class TwistedPoly {
 public:
  using field_type = F;
  using elem = typename F::element_type;

  TwistedPoly() = default;
  TwistedPoly(F field, std::vector<elem> coeffs) : F_(std::move(field)), c_(std::move(coeffs)) { trim(); }

  static TwistedPoly zero(const F& field) { return TwistedPoly(field, {}); }
  static TwistedPoly one(const F& field) { return TwistedPoly(field, {field.one()}); }
  static TwistedPoly constant(const F& field, elem a) { return TwistedPoly(field, {std::move(a)}); }
  /// a * tau^k
  static TwistedPoly monomial(const F& field, elem a, std::size_t k) {
    std::vector<elem> c(k + 1, field.zero());
    c[k] = std::move(a);
    return TwistedPoly(field, std::move(c));
  }
  static TwistedPoly tau(const F& field, std::size_t k = 1) { return monomial(field, field.one(), k); }

  const F& field() const noexcept { return F_; }
  const std::vector<elem>& coeffs() const noexcept { return c_; }
  /// tau-degree; -1 for zero.
  int degree() const noexcept { return static_cast<int>(c_.size()) - 1; }
  bool is_zero() const noexcept { return c_.empty(); }
  elem coeff(std::size_t i) const { return i < c_.size() ? c_[i] : F_.zero(); }
  elem lead() const { return c_.empty() ? F_.zero() : c_.back(); }
  /// Index of the lowest nonzero coefficient; -1 for zero.
  int valuation() const {
    for (std::size_t i = 0; i < c_.size(); ++i) {
      if (!F_.is_zero(c_[i])) return static_cast<int>(i);
    }
    return -1;
  }

  friend TwistedPoly operator+(const TwistedPoly& u, const TwistedPoly& v) {
    check_same(u, v);
    const F& f = u.F_;
    std::vector<elem> r(std::max(u.c_.size(), v.c_.size()), f.zero());
    for (std::size_t i = 0; i < r.size(); ++i) r[i] = f.add(u.coeff(i), v.coeff(i));
    return TwistedPoly(f, std::move(r));
  }
  friend TwistedPoly operator-(const TwistedPoly& u, const TwistedPoly& v) {
    check_same(u, v);
    const F& f = u.F_;
    std::vector<elem> r(std::max(u.c_.size(), v.c_.size()), f.zero());
    for (std::size_t i = 0; i < r.size(); ++i) r[i] = f.sub(u.coeff(i), v.coeff(i));
    return TwistedPoly(f, std::move(r));
  }
  friend TwistedPoly operator-(const TwistedPoly& u) {
    std::vector<elem> r(u.c_);
    for (auto& c : r) c = u.F_.neg(c);
    return TwistedPoly(u.F_, std::move(r));
  }
  /// (sum a_i tau^i)(sum b_j tau^j) = sum a_i b_j^(q^i) tau^(i+j).
  friend TwistedPoly operator*(const TwistedPoly& u, const TwistedPoly& v) {
    check_same(u, v);
    if (u.is_zero() || v.is_zero()) return zero(u.F_);
    const F& f = u.F_;
    std::vector<elem> r(u.c_.size() + v.c_.size() - 1, f.zero());
    std::vector<elem> twisted(v.c_);
    for (std::size_t i = 0; i < u.c_.size(); ++i) {
      if (i > 0) {
        for (auto& b : twisted) b = f.frobenius(b, 1);
      }
      if (f.is_zero(u.c_[i])) continue;
      for (std::size_t j = 0; j < twisted.size(); ++j) {
        if (f.is_zero(twisted[j])) continue;
        r[i + j] = f.add(r[i + j], f.mul(u.c_[i], twisted[j]));
      }
    }
    return TwistedPoly(f, std::move(r));
  }
  TwistedPoly& operator+=(const TwistedPoly& v) { return *this = *this + v; }
  TwistedPoly& operator-=(const TwistedPoly& v) { return *this = *this - v; }
  TwistedPoly& operator*=(const TwistedPoly& v) { return *this = *this * v; }

  friend bool operator==(const TwistedPoly& u, const TwistedPoly& v) {
    if (!(u.F_ == v.F_) || u.c_.size() != v.c_.size()) return false;
    for (std::size_t i = 0; i < u.c_.size(); ++i) {
      if (!(u.c_[i] == v.c_[i])) return false;
    }
    return true;
  }

  static void check_same(const TwistedPoly& u, const TwistedPoly& v) {
    if (!(u.F_ == v.F_)) throw DomainError("twisted polynomials over different coefficient fields");
  }

 private:
  void trim() {
    while (!c_.empty() && F_.is_zero(c_.back())) c_.pop_back();
  }

  F F_;
  std::vector<elem> c_;
};

/// Quotient and remainder of right division: u = quotient * v + remainder,
/// deg remainder < deg v. Needs only inverses, never q-th roots.
template <TwistField F>
std::pair<TwistedPoly<F>, TwistedPoly<F>> right_divmod(const TwistedPoly<F>& u, const TwistedPoly<F>& v) {
  TwistedPoly<F>::check_same(u, v);
  if (v.is_zero()) throw DomainError("twisted division by zero");
  const F& f = u.field();
  using elem = typename F::element_type;
  const int dv = v.degree();
  if (u.degree() < dv) return {TwistedPoly<F>::zero(f), u};
  std::vector<elem> r(u.coeffs());
  std::vector<elem> quot(static_cast<std::size_t>(u.degree() - dv + 1), f.zero());
  for (int k = u.degree(); k >= dv; --k) {
    const elem& top = r[static_cast<std::size_t>(k)];
    if (f.is_zero(top)) continue;
    const std::size_t shift = static_cast<std::size_t>(k - dv);
    // c tau^shift * v has leading coefficient c * lead(v)^(q^shift)
    const elem c = f.mul(top, f.inv(f.frobenius(v.lead(), shift)));
    quot[shift] = c;
    for (int j = 0; j <= dv; ++j) {
      const elem term = f.mul(c, f.frobenius(v.coeffs()[static_cast<std::size_t>(j)], shift));
      auto& slot = r[shift + static_cast<std::size_t>(j)];
      slot = f.sub(slot, term);
    }
  }
  r.resize(static_cast<std::size_t>(dv));
  return {TwistedPoly<F>(f, std::move(quot)), TwistedPoly<F>(f, std::move(r))};
}

/// The constant coefficient c_0 (the map "partial").
template <TwistField F>
typename F::element_type d_part(const TwistedPoly<F>& u) {
  return u.coeff(0);
}

/// A twisted polynomial viewed as the additive polynomial sum c_i x^(q^i).
template <TwistField F>
struct QPolynomial {
  TwistedPoly<F> poly;

  const F& field() const { return poly.field(); }
  /// Ordinary degree q^(deg_tau), as an exponent of q.
  int q_degree() const { return poly.degree(); }

  typename F::element_type operator()(const typename F::element_type& x) const {
    const F& f = poly.field();
    auto acc = f.zero();
    auto xp = x;
    for (std::size_t i = 0; i < poly.coeffs().size(); ++i) {
      if (i > 0) xp = f.frobenius(xp, 1);
      if (!f.is_zero(poly.coeffs()[i])) acc = f.add(acc, f.mul(poly.coeffs()[i], xp));
    }
    return acc;
  }
};

template <TwistField F>
QPolynomial<F> to_q_poly(const TwistedPoly<F>& u) {
  return {u};
}

template <TwistField F>
typename F::element_type q_poly_eval(const TwistedPoly<F>& u, const typename F::element_type& x) {
  return to_q_poly(u)(x);
}

/// Dense coefficient vector of the additive polynomial over a finite field:
/// entry q^i holds c_i. Intended for small degrees (tests, printing).
inline std::vector<gf_t> dense_coefficients(const QPolynomial<FiniteField>& qp) {
  const std::uint64_t q = qp.field().frobenius_q();
  const auto& c = qp.poly.coeffs();
  if (c.empty()) return {};
  std::uint64_t top = 1;
  for (std::size_t i = 1; i < c.size(); ++i) top *= q;
  std::vector<gf_t> out(top + 1, 0);
  std::uint64_t e = 1;
  for (std::size_t i = 0; i < c.size(); ++i) {
    out[e] = c[i];
    e *= q;
  }
  return out;
}

/// All roots of the additive polynomial u in the finite field E (u's
/// coefficients must lie in E), ascending by code. The roots form the kernel
/// of the F_p-linear map x -> u(x); it is computed by Gaussian elimination on
/// the F_p-coordinates.
inline std::vector<gf_t> additive_roots(const FiniteField& E, const TwistedPoly<FiniteField>& u) {
  if (u.is_zero()) throw DomainError("roots of the zero q-polynomial");
  for (auto c : u.coeffs()) {
    if (!E.contains(c)) throw DomainError("q-polynomial coefficient outside the root field");
  }
  const TwistedPoly<FiniteField> uE(E, u.coeffs());
  const std::uint32_t p = E.characteristic();
  const std::uint32_t n = E.degree();
  // column j = coordinates of u(p^j)
  std::vector<std::vector<std::uint32_t>> m(n, std::vector<std::uint32_t>(n, 0));
  std::uint64_t basis = 1;
  for (std::uint32_t j = 0; j < n; ++j) {
    const auto col = E.coordinates(q_poly_eval(uE, static_cast<gf_t>(basis)));
    for (std::uint32_t i = 0; i < n; ++i) m[i][j] = col[i];
    basis *= p;
  }
  auto inv_mod_p = [p](std::uint32_t a) { return static_cast<std::uint32_t>(detail::powmod(a, p - 2, p)); };
  std::vector<int> pivot_col;
  std::size_t row = 0;
  for (std::uint32_t col = 0; col < n && row < n; ++col) {
    std::size_t sel = row;
    while (sel < n && m[sel][col] == 0) ++sel;
    if (sel == n) continue;
    std::swap(m[sel], m[row]);
    const std::uint32_t iv = p == 2 ? 1 : inv_mod_p(m[row][col]);
    for (auto& v : m[row]) v = static_cast<std::uint32_t>(std::uint64_t{v} * iv % p);
    for (std::size_t r = 0; r < n; ++r) {
      if (r == row || m[r][col] == 0) continue;
      const std::uint64_t factor = m[r][col];
      for (std::uint32_t c = 0; c < n; ++c) {
        m[r][c] = static_cast<std::uint32_t>((m[r][c] + p - factor * m[row][c] % p) % p);
      }
    }
    pivot_col.push_back(static_cast<int>(col));
    ++row;
  }
  std::vector<bool> is_pivot(n, false);
  for (int c : pivot_col) is_pivot[static_cast<std::size_t>(c)] = true;
  // null space basis: one vector per free column
  std::vector<std::vector<std::uint32_t>> kernel;
  for (std::uint32_t free = 0; free < n; ++free) {
    if (is_pivot[free]) continue;
    std::vector<std::uint32_t> v(n, 0);
    v[free] = 1;
    for (std::size_t r = 0; r < pivot_col.size(); ++r) v[static_cast<std::size_t>(pivot_col[r])] = (p - m[r][free]) % p;
    kernel.push_back(std::move(v));
  }
  auto encode = [&](const std::vector<std::uint32_t>& v) {
    std::uint64_t code = 0;
    for (std::uint32_t i = n; i-- > 0;) code = code * p + v[i];
    return static_cast<gf_t>(code);
  };
  std::vector<gf_t> gens;
  for (auto& v : kernel) gens.push_back(encode(v));
  std::vector<gf_t> roots{0};
  for (gf_t g : gens) {
    const std::size_t before = roots.size();
    gf_t mult = g;
    for (std::uint32_t s = 1; s < p; ++s) {
      for (std::size_t i = 0; i < before; ++i) roots.push_back(E.add(roots[i], mult));
      mult = E.add(mult, g);
    }
  }
  std::sort(roots.begin(), roots.end());
  return roots;
}

}  // namespace drinfeld

#endif  // DRINFELD_TWISTED_HPP
