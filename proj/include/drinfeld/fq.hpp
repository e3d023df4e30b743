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

#ifndef DRINFELD_FQ_HPP
#define DRINFELD_FQ_HPP

// The constant field F_q, its extensions F_{q^n}, and residue fields A/l of
// A = F_q[T]. Every field built here sits in a tower over F_q, so elements of
// F_q keep their codes in all of them.

#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include "drinfeld/error.hpp"
#include "drinfeld/finite_field.hpp"
#include "drinfeld/poly.hpp"

namespace drinfeld {

class FqContext {
 public:
  FqContext() = default;

  std::uint32_t p() const { return p_; }
  std::uint32_t e() const { return e_; }
  std::uint64_t q() const { return q_; }
  /// F_q with designated q.
  const FiniteField& field() const { return field_; }
  /// Defining modulus of F_q over F_p (generator symbol z); empty when e = 1.
  const Poly& defining_modulus() const { return modulus_; }
  /// Code of z, the class of the generator; only meaningful when e > 1.
  gf_t z() const { return field_.adjoined(); }
  PolyRing poly_ring() const { return PolyRing(field_); }

  friend FqContext fq_make(long long p, long long e);

 private:
  std::uint32_t p_ = 0;
  std::uint32_t e_ = 0;
  std::uint64_t q_ = 0;
  FiniteField field_;
  Poly modulus_;
};

/// F_q with q = p^e. For e > 1 the defining modulus is the lexicographically
/// first monic irreducible of degree e over F_p.
inline FqContext fq_make(long long p, long long e) {
  if (e < 1) throw DomainError("extension degree e must be at least 1");
  if (p < 2 || !detail::is_prime_u64(static_cast<std::uint64_t>(p))) {
    throw DomainError(std::to_string(p) + " is not prime");
  }
  std::uint64_t q = 1;
  for (long long i = 0; i < e; ++i) {
    q *= static_cast<std::uint64_t>(p);
    if (q > kMaxFieldSize) throw DomainError("q too large for table arithmetic");
  }
  FqContext ctx;
  ctx.p_ = static_cast<std::uint32_t>(p);
  ctx.e_ = static_cast<std::uint32_t>(e);
  ctx.q_ = q;
  FiniteField fp = FiniteField::prime(ctx.p_);
  if (e == 1) {
    ctx.field_ = fp;
  } else {
    ctx.modulus_ = PolyRing(fp).first_irreducible(static_cast<std::size_t>(e));
    ctx.field_ = FiniteField::extension(fp, ctx.modulus_.coeffs()).with_frobenius_q(q);
  }
  return ctx;
}

/// base[y]/(m) with m the lexicographically first monic irreducible of
/// degree n over base; n = 1 returns base itself.
inline FiniteField extend(const FiniteField& base, std::size_t n) {
  if (n == 0) throw DomainError("extension degree must be at least 1");
  if (n == 1) return base;
  std::uint64_t total = 1;
  for (std::size_t i = 0; i < n; ++i) {
    total *= base.size();
    if (total > kMaxFieldSize) throw DomainError("extension field too large for table arithmetic");
  }
  Poly m = PolyRing(base).first_irreducible(n);
  return FiniteField::extension(base, m.coeffs());
}

/// The residue field A/l for a monic irreducible l in F_q[T], with the
/// reduction map A -> A/l. An element of A/l is coded by the coefficients of
/// its reduced representative, so lift() and reduce() are digit conversions.
class ResidueField {
 public:
  ResidueField() = default;
  ResidueField(const FqContext& fq, Poly modulus) : A_(fq.field()), modulus_(std::move(modulus)) {
    if (modulus_.is_zero() || !A_.is_monic(modulus_)) throw DomainError("residue modulus must be monic");
    if (!A_.is_irreducible(modulus_)) throw DomainError("residue modulus must be irreducible");
    field_ = modulus_.degree() == 1 ? fq.field() : FiniteField::extension(fq.field(), modulus_.coeffs());
  }

  const FiniteField& field() const { return field_; }
  const Poly& modulus() const { return modulus_; }
  int degree() const { return modulus_.degree(); }
  std::uint64_t size() const { return field_.size(); }

  gf_t reduce(const Poly& f) const {
    const Poly r = A_.rem(f, modulus_);
    if (degree() == 1) return r.coeff(0);
    std::uint64_t code = 0;
    const std::uint64_t q = A_.field().size();
    for (int i = r.degree(); i >= 0; --i) code = code * q + r.coeff(static_cast<std::size_t>(i));
    return static_cast<gf_t>(code);
  }
  /// Representative of degree < deg l.
  Poly lift(gf_t a) const {
    const std::uint64_t q = A_.field().size();
    std::vector<gf_t> c;
    for (int i = 0; i < degree(); ++i) {
      c.push_back(static_cast<gf_t>(a % q));
      a = static_cast<gf_t>(a / q);
    }
    return Poly(std::move(c));
  }
  /// Image of T.
  gf_t t_image() const { return reduce(A_.x()); }

 private:
  PolyRing A_;
  Poly modulus_;
  FiniteField field_;
};

/// Roots of f (coefficients in `field`) lying in the degree-n extension of
/// `field`, ascending by code.
struct ExtensionRoots {
  FiniteField field;
  std::vector<gf_t> roots;
};

inline ExtensionRoots roots_in_extension(const FiniteField& field, const Poly& f, std::size_t n, std::uint64_t seed = 1) {
  if (f.is_zero()) throw DomainError("roots of the zero polynomial");
  FiniteField ext = extend(field, n);
  return {ext, PolyRing(ext).roots(f, seed)};
}

}  // namespace drinfeld

#endif  // DRINFELD_FQ_HPP
