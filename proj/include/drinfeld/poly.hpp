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

#ifndef DRINFELD_POLY_HPP
#define DRINFELD_POLY_HPP

// Dense univariate polynomials over a FiniteField: Euclidean arithmetic,
// irreducibility, squarefree/distinct-degree/equal-degree factorisation and
// root finding.

#include <algorithm>
#include <cstdint>
#include <initializer_list>
#include <random>
#include <utility>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "drinfeld/error.hpp"
#include "drinfeld/finite_field.hpp"

namespace drinfeld {

/// Coefficients low to high, no trailing zeros. The zero polynomial is empty.
class Poly {
 public:
  Poly() = default;
  explicit Poly(std::vector<gf_t> coeffs) : c_(std::move(coeffs)) { trim(); }
  Poly(std::initializer_list<gf_t> coeffs) : c_(coeffs) { trim(); }

  /// -1 for the zero polynomial.
  int degree() const noexcept { return static_cast<int>(c_.size()) - 1; }
  bool is_zero() const noexcept { return c_.empty(); }
  gf_t coeff(std::size_t i) const noexcept { return i < c_.size() ? c_[i] : 0; }
  gf_t lead() const noexcept { return c_.empty() ? 0 : c_.back(); }
  const std::vector<gf_t>& coeffs() const noexcept { return c_; }

  void set_coeff(std::size_t i, gf_t v) {
    if (i >= c_.size()) {
      if (v == 0) return;
      c_.resize(i + 1, 0);
    }
    c_[i] = v;
    trim();
  }

  friend bool operator==(const Poly&, const Poly&) = default;
  /// Degree first, then coefficients from the top down.
  friend bool operator<(const Poly& a, const Poly& b) {
    if (a.c_.size() != b.c_.size()) return a.c_.size() < b.c_.size();
    return std::lexicographical_compare(a.c_.rbegin(), a.c_.rend(), b.c_.rbegin(), b.c_.rend());
  }

 private:
  void trim() {
    while (!c_.empty() && c_.back() == 0) c_.pop_back();
  }
  std::vector<gf_t> c_;
};

/// A monic irreducible factor with its multiplicity.
struct PolyFactor {
  Poly factor;
  int multiplicity = 1;
  friend bool operator==(const PolyFactor&, const PolyFactor&) = default;
};

class PolyRing {
 public:
  PolyRing() = default;
  explicit PolyRing(FiniteField field) : F_(std::move(field)) { F_.require_valid(); }

  const FiniteField& field() const noexcept { return F_; }

  Poly zero() const { return {}; }
  Poly one() const { return Poly{1}; }
  Poly x() const { return Poly{0, 1}; }
  Poly constant(gf_t c) const { return Poly{c}; }
  Poly monomial(gf_t c, std::size_t k) const {
    std::vector<gf_t> v(k + 1, 0);
    v[k] = c;
    return Poly(std::move(v));
  }

  Poly add(const Poly& f, const Poly& g) const {
    std::vector<gf_t> r(std::max(f.coeffs().size(), g.coeffs().size()));
    for (std::size_t i = 0; i < r.size(); ++i) r[i] = F_.add(f.coeff(i), g.coeff(i));
    return Poly(std::move(r));
  }
  Poly sub(const Poly& f, const Poly& g) const {
    std::vector<gf_t> r(std::max(f.coeffs().size(), g.coeffs().size()));
    for (std::size_t i = 0; i < r.size(); ++i) r[i] = F_.sub(f.coeff(i), g.coeff(i));
    return Poly(std::move(r));
  }
  Poly neg(const Poly& f) const {
    std::vector<gf_t> r(f.coeffs());
    for (auto& c : r) c = F_.neg(c);
    return Poly(std::move(r));
  }
  Poly scale(const Poly& f, gf_t s) const {
    if (s == 0) return {};
    std::vector<gf_t> r(f.coeffs());
    for (auto& c : r) c = F_.mul(c, s);
    return Poly(std::move(r));
  }
  Poly shift(const Poly& f, std::size_t k) const {
    if (f.is_zero()) return {};
    std::vector<gf_t> r(k, 0);
    r.insert(r.end(), f.coeffs().begin(), f.coeffs().end());
    return Poly(std::move(r));
  }
  Poly mul(const Poly& f, const Poly& g) const {
    if (f.is_zero() || g.is_zero()) return {};
    const auto& a = f.coeffs();
    const auto& b = g.coeffs();
    std::vector<gf_t> r(a.size() + b.size() - 1, 0);
    for (std::size_t i = 0; i < a.size(); ++i) {
      if (a[i] == 0) continue;
      for (std::size_t j = 0; j < b.size(); ++j) {
        if (b[j] == 0) continue;
        r[i + j] = F_.add(r[i + j], F_.mul(a[i], b[j]));
      }
    }
    return Poly(std::move(r));
  }

  /// (s, t) with f = s g + t and deg t < deg g.
  std::pair<Poly, Poly> divmod(const Poly& f, const Poly& g) const {
    if (g.is_zero()) throw DomainError("polynomial division by zero");
    if (f.degree() < g.degree()) return {Poly{}, f};
    std::vector<gf_t> r(f.coeffs());
    const auto& d = g.coeffs();
    const std::size_t dg = d.size() - 1;
    const gf_t inv_lead = F_.inv(d.back());
    std::vector<gf_t> q(r.size() - dg, 0);
    for (std::size_t k = r.size(); k-- > dg;) {
      const gf_t c = F_.mul(r[k], inv_lead);
      if (c == 0) continue;
      q[k - dg] = c;
      for (std::size_t j = 0; j <= dg; ++j) r[k - dg + j] = F_.sub(r[k - dg + j], F_.mul(c, d[j]));
    }
    r.resize(dg);
    return {Poly(std::move(q)), Poly(std::move(r))};
  }
  Poly rem(const Poly& f, const Poly& g) const { return divmod(f, g).second; }
  Poly quo(const Poly& f, const Poly& g) const { return divmod(f, g).first; }
  /// Exact quotient; throws if g does not divide f.
  Poly exact_div(const Poly& f, const Poly& g) const {
    auto [q, r] = divmod(f, g);
    if (!r.is_zero()) throw InvariantError("inexact polynomial division");
    return q;
  }

  Poly monic(const Poly& f) const {
    if (f.is_zero()) return f;
    return scale(f, F_.inv(f.lead()));
  }
  bool is_monic(const Poly& f) const { return f.lead() == 1; }

  /// Monic gcd; gcd(0, 0) = 0.
  Poly gcd(Poly f, Poly g) const {
    while (!g.is_zero()) {
      Poly r = rem(f, g);
      f = std::move(g);
      g = std::move(r);
    }
    return monic(f);
  }

  /// Inverse of f modulo m, when gcd(f, m) = 1.
  Poly inv_mod(const Poly& f, const Poly& m) const {
    Poly r0 = m, r1 = rem(f, m);
    Poly s0 = zero(), s1 = one();
    while (!r1.is_zero()) {
      auto [q, r] = divmod(r0, r1);
      Poly s = sub(s0, mul(q, s1));
      r0 = std::move(r1);
      r1 = std::move(r);
      s0 = std::move(s1);
      s1 = std::move(s);
    }
    if (r0.degree() != 0) throw DomainError("polynomial is not invertible modulo the given modulus");
    return scale(s0, F_.inv(r0.lead()));
  }

  Poly mul_mod(const Poly& f, const Poly& g, const Poly& m) const { return rem(mul(f, g), m); }

  template <class Exponent>
  Poly pow_mod(Poly base, Exponent e, const Poly& m) const {
    Poly r = rem(one(), m);
    base = rem(base, m);
    while (e != 0) {
      if ((e & 1) != 0) r = mul_mod(r, base, m);
      e >>= 1;
      if (e != 0) base = mul_mod(base, base, m);
    }
    return r;
  }
  Poly pow(const Poly& f, unsigned e) const {
    Poly r = one(), b = f;
    while (e) {
      if (e & 1) r = mul(r, b);
      e >>= 1;
      if (e) b = mul(b, b);
    }
    return r;
  }

  Poly derivative(const Poly& f) const {
    if (f.degree() < 1) return {};
    std::vector<gf_t> r(f.coeffs().size() - 1);
    for (std::size_t i = 1; i < f.coeffs().size(); ++i) r[i - 1] = F_.mul(F_.from_int(static_cast<long long>(i)), f.coeff(i));
    return Poly(std::move(r));
  }

  gf_t eval(const Poly& f, gf_t x) const {
    gf_t r = 0;
    for (std::size_t i = f.coeffs().size(); i-- > 0;) r = F_.add(F_.mul(r, x), f.coeff(i));
    return r;
  }

  /// f(g(x)).
  Poly compose(const Poly& f, const Poly& g) const {
    Poly r;
    for (std::size_t i = f.coeffs().size(); i-- > 0;) r = add(mul(r, g), constant(f.coeff(i)));
    return r;
  }

  /// x^(|F|^k) mod m, by k successive |F|-th powers.
  Poly frobenius_power_of_x(std::size_t k, const Poly& m) const {
    Poly h = rem(x(), m);
    for (std::size_t i = 0; i < k; ++i) h = pow_mod(h, std::uint64_t{F_.size()}, m);
    return h;
  }

  /// Irreducibility over the coefficient field. Constants are not irreducible.
  bool is_irreducible(const Poly& f) const {
    if (f.is_zero()) throw DomainError("irreducibility of the zero polynomial");
    const int n = f.degree();
    if (n < 1) return false;
    if (n == 1) return true;
    const Poly m = monic(f);
    const Poly xx = rem(x(), m);
    Poly h = xx;
    for (int i = 1; i <= n / 2; ++i) {
      h = pow_mod(h, std::uint64_t{F_.size()}, m);
      if (gcd(m, sub(h, xx)).degree() != 0) return false;
    }
    return true;
  }

  /// Monic polynomials of degree n in lexicographic order of (c_0, ..., c_{n-1}),
  /// c_0 most significant; returns the first irreducible one.
  Poly first_irreducible(std::size_t n) const {
    if (n == 0) throw DomainError("irreducible polynomials have degree >= 1");
    const std::uint64_t B = F_.size();
    std::uint64_t total = 1;
    for (std::size_t i = 0; i < n; ++i) total *= B;
    std::vector<gf_t> c(n + 1, 0);
    c[n] = 1;
    for (std::uint64_t idx = 0; idx < total; ++idx) {
      std::uint64_t t = idx;
      for (std::size_t j = n; j-- > 0;) {
        c[j] = static_cast<gf_t>(t % B);
        t /= B;
      }
      if (n > 1 && c[0] == 0) continue;
      Poly f(c);
      if (is_irreducible(f)) return f;
    }
    throw InvariantError("no irreducible polynomial found");
  }

  /// Monic irreducibles of degree n in ascending integer-code order.
  std::vector<Poly> irreducibles_of_degree(std::size_t n) const {
    const std::uint64_t B = F_.size();
    std::uint64_t total = 1;
    for (std::size_t i = 0; i < n; ++i) total *= B;
    std::vector<Poly> out;
    std::vector<gf_t> c(n + 1, 0);
    c[n] = 1;
    for (std::uint64_t idx = 0; idx < total; ++idx) {
      std::uint64_t t = idx;
      for (std::size_t j = 0; j < n; ++j) {
        c[j] = static_cast<gf_t>(t % B);
        t /= B;
      }
      Poly f(c);
      if (is_irreducible(f)) out.push_back(f);
    }
    return out;
  }

  /// Replaces each x^(pk) by x^k and takes p-th roots of the coefficients;
  /// f must have zero derivative.
  Poly pth_root(const Poly& f) const {
    const std::uint32_t p = F_.characteristic();
    std::vector<gf_t> r(f.coeffs().size() / p + 1, 0);
    for (std::size_t i = 0; i < f.coeffs().size(); ++i) {
      if (f.coeff(i) == 0) continue;
      if (i % p != 0) throw InvariantError("pth_root of a polynomial with nonzero derivative");
      r[i / p] = F_.pth_root(f.coeff(i));
    }
    return Poly(std::move(r));
  }

  /// Squarefree decomposition of a monic f: pairs (g_i, i) with f = prod g_i^i,
  /// the g_i squarefree and pairwise coprime.
  std::vector<std::pair<Poly, int>> squarefree(const Poly& f0) const {
    std::vector<std::pair<Poly, int>> out;
    if (f0.degree() < 1) return out;
    const Poly f = monic(f0);
    const std::uint32_t p = F_.characteristic();
    Poly c = gcd(f, derivative(f));
    Poly w = exact_div(f, c);
    int i = 1;
    while (w.degree() > 0) {
      Poly y = gcd(w, c);
      Poly fac = exact_div(w, y);
      if (fac.degree() > 0) out.emplace_back(fac, i);
      w = y;
      c = exact_div(c, y);
      ++i;
    }
    if (c.degree() > 0) {
      for (auto& [g, m] : squarefree(pth_root(c))) out.emplace_back(g, m * static_cast<int>(p));
    }
    return out;
  }

  /// Distinct-degree factorisation of a monic squarefree f: pairs (d, g_d)
  /// where g_d is the product of all irreducible factors of degree d.
  std::vector<std::pair<int, Poly>> distinct_degree(const Poly& f0) const {
    std::vector<std::pair<int, Poly>> out;
    Poly f = monic(f0);
    const Poly xx = x();
    Poly h = rem(xx, f);
    int d = 0;
    while (f.degree() >= 2 * (d + 1)) {
      ++d;
      h = pow_mod(h, std::uint64_t{F_.size()}, f);
      Poly g = gcd(f, sub(h, xx));
      if (g.degree() > 0) {
        out.emplace_back(d, g);
        f = exact_div(f, g);
        h = rem(h, f);
      }
    }
    if (f.degree() > 0) out.emplace_back(f.degree(), f);
    return out;
  }

  /// Splits a monic squarefree f whose irreducible factors all have degree d.
  std::vector<Poly> equal_degree(const Poly& f, int d, std::mt19937_64& rng) const {
    std::vector<Poly> out;
    split_equal_degree(monic(f), d, rng, out);
    std::sort(out.begin(), out.end());
    return out;
  }

  /// Full factorisation into monic irreducibles, sorted by (degree, code).
  std::vector<PolyFactor> factor(const Poly& f, std::uint64_t seed = 1) const {
    if (f.is_zero()) throw DomainError("factorisation of the zero polynomial");
    std::mt19937_64 rng(seed);
    std::vector<PolyFactor> out;
    for (auto& [g, m] : squarefree(f)) {
      for (auto& [d, gd] : distinct_degree(g)) {
        for (auto& irr : equal_degree(gd, d, rng)) out.push_back({irr, m});
      }
    }
    std::sort(out.begin(), out.end(), [](const PolyFactor& a, const PolyFactor& b) { return a.factor < b.factor; });
    return out;
  }

  /// Degrees of the irreducible factors, repeated by multiplicity, ascending.
  std::vector<int> factor_degrees(const Poly& f) const {
    std::vector<int> out;
    if (f.degree() < 1) return out;
    for (auto& [g, m] : squarefree(f)) {
      for (auto& [d, gd] : distinct_degree(g)) {
        const int count = gd.degree() / d;
        for (int k = 0; k < count * m; ++k) out.push_back(d);
      }
    }
    std::sort(out.begin(), out.end());
    return out;
  }

  /// Number of distinct roots over an algebraic closure: the degree of the
  /// radical, assembled from the squarefree parts.
  int distinct_root_count(const Poly& f) const {
    if (f.is_zero()) throw DomainError("root count of the zero polynomial");
    Poly rad = one();
    for (const auto& [g, m] : squarefree(f)) rad = mul(rad, exact_div(g, gcd(rad, g)));
    return rad.degree();
  }

  /// Distinct roots in the coefficient field, ascending by code. Exhaustive
  /// evaluation up to kExhaustiveRootLimit elements, gcd with x^|F| - x and
  /// equal-degree splitting above.
  static constexpr std::uint32_t kExhaustiveRootLimit = 6561;  // 3^8

  std::vector<gf_t> roots(const Poly& f, std::uint64_t seed = 1) const {
    if (f.is_zero()) throw DomainError("roots of the zero polynomial");
    std::vector<gf_t> out;
    if (f.degree() < 1) return out;
    if (F_.size() <= kExhaustiveRootLimit) {
      for (gf_t a = 0; a < F_.size(); ++a) {
        if (eval(f, a) == 0) out.push_back(a);
      }
      return out;
    }
    const Poly m = monic(f);
    Poly g = gcd(m, sub(pow_mod(x(), std::uint64_t{F_.size()}, m), x()));
    if (g.degree() < 1) return out;
    std::mt19937_64 rng(seed);
    for (auto& lin : equal_degree(g, 1, rng)) out.push_back(F_.neg(lin.coeff(0)));
    std::sort(out.begin(), out.end());
    return out;
  }

 private:
  void split_equal_degree(const Poly& f, int d, std::mt19937_64& rng, std::vector<Poly>& out) const {
    if (f.degree() <= d) {
      if (f.degree() > 0) out.push_back(f);
      return;
    }
    const std::uint64_t Q = F_.size();
    std::uniform_int_distribution<std::uint32_t> coeff(0, static_cast<std::uint32_t>(Q - 1));
    while (true) {
      std::vector<gf_t> a(static_cast<std::size_t>(f.degree()));
      for (auto& c : a) c = coeff(rng);
      Poly r(std::move(a));
      if (r.degree() < 1) continue;
      Poly b;
      if (F_.characteristic() == 2) {
        // trace of r from F_{Q^d} down to F_2
        const std::uint64_t steps = static_cast<std::uint64_t>(d) * F_.degree();
        Poly t = r;
        b = r;
        for (std::uint64_t i = 1; i < steps; ++i) {
          t = mul_mod(t, t, f);
          b = add(b, t);
        }
      } else {
        boost::multiprecision::cpp_int e = 1;
        for (int i = 0; i < d; ++i) e *= Q;
        e = (e - 1) / 2;
        b = sub(pow_mod(r, e, f), one());
      }
      Poly g = gcd(f, b);
      if (g.degree() > 0 && g.degree() < f.degree()) {
        split_equal_degree(g, d, rng, out);
        split_equal_degree(exact_div(f, g), d, rng, out);
        return;
      }
    }
  }

  FiniteField F_;
};

}  // namespace drinfeld

#endif  // DRINFELD_POLY_HPP
