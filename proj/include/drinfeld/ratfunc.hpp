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

#ifndef DRINFELD_RATFUNC_HPP
#define DRINFELD_RATFUNC_HPP

#include <cstdint>
#include <utility>
#include <vector>

#include "drinfeld/error.hpp"
#include "drinfeld/fq.hpp"
#include "drinfeld/poly.hpp"

namespace drinfeld {

/// num/den in canonical form: den monic, gcd(num, den) = 1; zero is 0/1.
/// Only RationalField constructs non-trivial values, so equality is structural.
struct RationalFunc {
  Poly num;
  Poly den{1};
  friend bool operator==(const RationalFunc&, const RationalFunc&) = default;
};

/// F = F_q(T) as a coefficient field of twisted polynomials.
class RationalField {
 public:
  using element_type = RationalFunc;

  RationalField() = default;
  explicit RationalField(const FqContext& fq) : fq_(fq), A_(fq.field()) {}

  const FqContext& fq() const { return fq_; }
  const PolyRing& poly_ring() const { return A_; }
  std::uint64_t frobenius_q() const { return fq_.q(); }

  RationalFunc make(Poly num, Poly den) const {
    if (den.is_zero()) throw DomainError("rational function with zero denominator");
    if (num.is_zero()) return {};
    Poly g = A_.gcd(num, den);
    if (g.degree() > 0) {
      num = A_.exact_div(num, g);
      den = A_.exact_div(den, g);
    }
    const gf_t lc = den.lead();
    if (lc != 1) {
      const gf_t inv = A_.field().inv(lc);
      num = A_.scale(num, inv);
      den = A_.scale(den, inv);
    }
    return {std::move(num), std::move(den)};
  }
  RationalFunc from_poly(Poly f) const { return {std::move(f), A_.one()}; }
  RationalFunc t() const { return from_poly(A_.x()); }

  RationalFunc zero() const { return {}; }
  RationalFunc one() const { return from_poly(A_.one()); }
  bool is_zero(const RationalFunc& a) const { return a.num.is_zero(); }
  bool equal(const RationalFunc& a, const RationalFunc& b) const { return a == b; }
  RationalFunc from_int(long long n) const { return from_poly(A_.constant(A_.field().from_int(n))); }
  RationalFunc from_fq(gf_t c) const { return from_poly(A_.constant(c)); }

  RationalFunc add(const RationalFunc& a, const RationalFunc& b) const {
    if (is_zero(a)) return b;
    if (is_zero(b)) return a;
    if (a.den == b.den) return make(A_.add(a.num, b.num), a.den);
    return make(A_.add(A_.mul(a.num, b.den), A_.mul(b.num, a.den)), A_.mul(a.den, b.den));
  }
  RationalFunc neg(const RationalFunc& a) const { return {A_.neg(a.num), a.den}; }
  RationalFunc sub(const RationalFunc& a, const RationalFunc& b) const { return add(a, neg(b)); }
  RationalFunc mul(const RationalFunc& a, const RationalFunc& b) const {
    if (is_zero(a) || is_zero(b)) return {};
    if (a.den.degree() == 0 && b.den.degree() == 0) return {A_.mul(a.num, b.num), A_.one()};
    return make(A_.mul(a.num, b.num), A_.mul(a.den, b.den));
  }
  RationalFunc inv(const RationalFunc& a) const {
    if (is_zero(a)) throw DomainError("inverse of the zero rational function");
    return make(a.den, a.num);
  }
  RationalFunc div(const RationalFunc& a, const RationalFunc& b) const { return mul(a, inv(b)); }

  /// a^(q^k). Coefficients lie in F_q, so this only spreads exponents:
  /// f(T)^(q^k) = f(T^(q^k)). Reducedness and monicity are preserved.
  RationalFunc frobenius(const RationalFunc& a, std::uint64_t k = 1) const {
    if (k == 0 || is_zero(a)) return a;
    std::uint64_t step = 1;
    for (std::uint64_t i = 0; i < k; ++i) step *= fq_.q();
    return {spread(a.num, step), spread(a.den, step)};
  }

  bool is_polynomial(const RationalFunc& a) const { return a.den.degree() == 0; }

 private:
  Poly spread(const Poly& f, std::uint64_t step) const {
    if (f.degree() <= 0) return f;
    std::vector<gf_t> c(static_cast<std::size_t>(f.degree()) * step + 1, 0);
    for (std::size_t i = 0; i < f.coeffs().size(); ++i) c[i * step] = f.coeff(i);
    return Poly(std::move(c));
  }

  FqContext fq_;
  PolyRing A_;
};

inline bool operator==(const RationalField& a, const RationalField& b) { return a.fq().field() == b.fq().field(); }

}  // namespace drinfeld

#endif  // DRINFELD_RATFUNC_HPP
