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

#ifndef DRINFELD_FINITE_FIELD_HPP
#define DRINFELD_FINITE_FIELD_HPP

/**
 * @file finite_field.hpp
 * @brief Table-driven arithmetic in small finite fields and their towers.
 *
 * A field is either a prime field F_p or an extension B[y]/(m(y)) of a
 * previously built field B by a monic irreducible m. Elements are plain
 * integers: an element c_0 + c_1 y + ... + c_{n-1} y^{n-1} of B[y]/(m) is
 * encoded as c_0 + c_1 |B| + ... + c_{n-1} |B|^{n-1}. Two consequences are
 * used throughout the library:
 *
 * - every field of a tower embeds into the fields above it as a prefix of the
 *   integers (an element of B has the same code in B[y]/(m));
 * - the base-p digits of a code are its coordinates over F_p, and field
 *   addition is digitwise addition mod p.
 *
 * Multiplication goes through exp/log tables and addition through Zech
 * logarithms, so every operation is O(1) after construction. Construction
 * costs O(|F| n^2) operations in the base field, which bounds the field
 * size to kMaxFieldSize.
 *
 * Each handle also carries a designated prime power q, the size of the
 * constant field F_q of A = F_q[T]. frobenius() raises to that q.
 */

#include <cstdint>
#include <memory>
#include <string>
#include <utility>
#include <vector>

#include "drinfeld/error.hpp"

namespace drinfeld {

/// Integer code of a finite field element (see file comment).
using gf_t = std::uint32_t;

/// Largest field the table representation is built for.
inline constexpr std::uint64_t kMaxFieldSize = std::uint64_t{1} << 22;

namespace detail {

inline bool is_prime_u64(std::uint64_t n) {
  if (n < 2) return false;
  if (n % 2 == 0) return n == 2;
  for (std::uint64_t d = 3; d * d <= n; d += 2) {
    if (n % d == 0) return false;
  }
  return true;
}

/// Distinct prime factors of n, ascending.
inline std::vector<std::uint64_t> prime_factors(std::uint64_t n) {
  std::vector<std::uint64_t> out;
  for (std::uint64_t d = 2; d * d <= n; ++d) {
    if (n % d == 0) {
      out.push_back(d);
      while (n % d == 0) n /= d;
    }
  }
  if (n > 1) out.push_back(n);
  return out;
}

__extension__ typedef unsigned __int128 u128;

inline std::uint64_t mulmod(std::uint64_t a, std::uint64_t b, std::uint64_t m) {
  return static_cast<std::uint64_t>((static_cast<u128>(a) * b) % m);
}

inline std::uint64_t powmod(std::uint64_t a, std::uint64_t e, std::uint64_t m) {
  if (m == 1) return 0;
  std::uint64_t r = 1;
  a %= m;
  while (e) {
    if (e & 1) r = mulmod(r, a, m);
    a = mulmod(a, a, m);
    e >>= 1;
  }
  return r;
}

}  // namespace detail

class FiniteField {
  struct Impl {
    std::uint32_t p = 0;
    std::uint32_t degree = 0;  // over F_p
    std::uint32_t size = 0;
    std::shared_ptr<const Impl> base;  // null for a prime field
    std::vector<gf_t> modulus;         // monic over base, low to high
    std::vector<gf_t> exp;             // g^k for 0 <= k < 2(size-1)
    std::vector<std::uint32_t> log;
    std::vector<std::uint32_t> zech;   // log(1 + g^k), or kNone
    std::uint32_t neg_one_log = 0;
  };
  static constexpr std::uint32_t kNone = 0xffffffffu;

 public:
  using element_type = gf_t;

  FiniteField() = default;

  /// The prime field F_p. Its designated q defaults to p.
  static FiniteField prime(std::uint32_t p) {
    if (!detail::is_prime_u64(p)) throw DomainError(std::to_string(p) + " is not prime");
    if (p > kMaxFieldSize) throw DomainError("prime too large for table arithmetic");
    auto impl = std::make_shared<Impl>();
    impl->p = p;
    impl->degree = 1;
    impl->size = p;
    std::uint32_t g = 1;
    if (p > 2) {
      const auto factors = detail::prime_factors(p - 1);
      for (g = 2; g < p; ++g) {
        bool primitive = true;
        for (auto f : factors) {
          if (detail::powmod(g, (p - 1) / f, p) == 1) {
            primitive = false;
            break;
          }
        }
        if (primitive) break;
      }
    }
    std::vector<gf_t> cycle(p - 1);
    std::uint64_t cur = 1;
    for (std::uint32_t k = 0; k + 1 < p; ++k) {
      cycle[k] = static_cast<gf_t>(cur);
      cur = cur * g % p;
    }
    finish_tables(*impl, cycle);
    return FiniteField(std::move(impl), p);
  }

  /// base[y]/(modulus). The modulus is monic, given low to high, and must be
  /// irreducible over base; a reducible modulus is detected because no
  /// primitive element exists. The designated q is inherited from base.
  static FiniteField extension(const FiniteField& base, std::vector<gf_t> modulus) {
    base.require_valid();
    if (modulus.size() < 2 || modulus.back() != 1) throw DomainError("extension modulus must be monic of degree >= 1");
    const std::uint64_t bsize = base.size();
    const std::size_t n = modulus.size() - 1;
    std::uint64_t total = 1;
    for (std::size_t i = 0; i < n; ++i) {
      total *= bsize;
      if (total > kMaxFieldSize) throw DomainError("extension field too large for table arithmetic");
    }
    for (auto c : modulus) {
      if (c >= bsize) throw DomainError("modulus coefficient outside the base field");
    }
    auto impl = std::make_shared<Impl>();
    impl->p = base.characteristic();
    impl->degree = base.degree() * static_cast<std::uint32_t>(n);
    impl->size = static_cast<std::uint32_t>(total);
    impl->base = base.impl_;
    impl->modulus = modulus;

    using Vec = std::vector<gf_t>;
    auto decode = [&](std::uint64_t code) {
      Vec v(n);
      for (std::size_t i = 0; i < n; ++i) {
        v[i] = static_cast<gf_t>(code % bsize);
        code /= bsize;
      }
      return v;
    };
    auto encode = [&](const Vec& v) {
      std::uint64_t code = 0;
      for (std::size_t i = n; i-- > 0;) code = code * bsize + v[i];
      return static_cast<gf_t>(code);
    };
    auto mul = [&](const Vec& a, const Vec& b) {
      Vec prod(2 * n - 1, 0);
      for (std::size_t i = 0; i < n; ++i) {
        if (a[i] == 0) continue;
        for (std::size_t j = 0; j < n; ++j) {
          prod[i + j] = base.add(prod[i + j], base.mul(a[i], b[j]));
        }
      }
      for (std::size_t k = prod.size(); k-- > n;) {
        const gf_t c = prod[k];
        if (c == 0) continue;
        for (std::size_t j = 0; j < n; ++j) {
          prod[k - n + j] = base.sub(prod[k - n + j], base.mul(c, modulus[j]));
        }
      }
      prod.resize(n);
      return prod;
    };
    auto power = [&](Vec a, std::uint64_t e) {
      Vec r(n, 0);
      r[0] = 1;
      while (e) {
        if (e & 1) r = mul(r, a);
        a = mul(a, a);
        e >>= 1;
      }
      return r;
    };

    const std::uint64_t order = total - 1;
    const auto factors = detail::prime_factors(order);
    Vec one(n, 0);
    one[0] = 1;
    Vec gen;
    for (std::uint64_t cand = 1; cand < total; ++cand) {
      Vec v = decode(cand);
      if (order == 1) {
        gen = v;
        break;
      }
      bool primitive = power(v, order) == one;
      for (auto f : factors) {
        if (!primitive) break;
        if (power(v, order / f) == one) primitive = false;
      }
      if (primitive) {
        gen = v;
        break;
      }
    }
    if (gen.empty()) throw DomainError("extension modulus is not irreducible");

    std::vector<gf_t> cycle(order);
    Vec cur = one;
    for (std::uint64_t k = 0; k < order; ++k) {
      cycle[k] = encode(cur);
      cur = mul(cur, gen);
    }
    finish_tables(*impl, cycle);
    return FiniteField(std::move(impl), base.frob_q_);
  }

  /// Same field with a different designated q (the size of a subfield).
  FiniteField with_frobenius_q(std::uint64_t q) const {
    FiniteField f = *this;
    f.frob_q_ = q;
    return f;
  }

  bool valid() const noexcept { return impl_ != nullptr; }
  std::uint32_t characteristic() const { return impl_->p; }
  std::uint32_t degree() const { return impl_->degree; }
  std::uint32_t size() const { return impl_->size; }
  std::uint64_t frobenius_q() const { return frob_q_; }
  bool is_prime_field() const { return impl_->base == nullptr; }

  /// The field this one was built over; a prime field is its own base.
  FiniteField base() const {
    if (!impl_->base) return *this;
    return FiniteField(impl_->base, frob_q_);
  }
  /// Degree over base().
  std::uint32_t relative_degree() const {
    return impl_->base ? static_cast<std::uint32_t>(impl_->modulus.size() - 1) : 1;
  }
  const std::vector<gf_t>& modulus() const { return impl_->modulus; }

  /// Code of the adjoined root y (the base size), or the primitive root for F_p.
  gf_t adjoined() const { return impl_->base ? impl_->base->size : impl_->exp[1 % impl_->exp.size()]; }
  gf_t primitive_element() const { return impl_->exp[impl_->size > 2 ? 1 : 0]; }

  gf_t zero() const noexcept { return 0; }
  gf_t one() const noexcept { return 1; }
  bool is_zero(gf_t a) const noexcept { return a == 0; }
  bool equal(gf_t a, gf_t b) const noexcept { return a == b; }
  bool contains(gf_t a) const noexcept { return a < impl_->size; }

  gf_t from_int(long long n) const {
    const long long p = impl_->p;
    long long r = n % p;
    if (r < 0) r += p;
    return static_cast<gf_t>(r);
  }
  /// Embedding of the constant field F_q; codes are shared along a tower.
  gf_t from_fq(gf_t a) const noexcept { return a; }

  gf_t add(gf_t a, gf_t b) const noexcept {
    if (a == 0) return b;
    if (b == 0) return a;
    const std::uint32_t order = impl_->size - 1;
    const std::uint32_t la = impl_->log[a];
    const std::uint32_t lb = impl_->log[b];
    const std::uint32_t k = lb >= la ? lb - la : lb + order - la;
    const std::uint32_t z = impl_->zech[k];
    if (z == kNone) return 0;
    return impl_->exp[la + z];
  }
  gf_t neg(gf_t a) const noexcept {
    if (a == 0) return 0;
    return impl_->exp[impl_->log[a] + impl_->neg_one_log];
  }
  gf_t sub(gf_t a, gf_t b) const noexcept { return add(a, neg(b)); }
  gf_t mul(gf_t a, gf_t b) const noexcept {
    if (a == 0 || b == 0) return 0;
    return impl_->exp[impl_->log[a] + impl_->log[b]];
  }
  gf_t inv(gf_t a) const {
    if (a == 0) throw DomainError("inverse of zero");
    const std::uint32_t order = impl_->size - 1;
    return impl_->exp[(order - impl_->log[a]) % order];
  }
  gf_t div(gf_t a, gf_t b) const { return mul(a, inv(b)); }
  gf_t pow(gf_t a, std::uint64_t e) const noexcept {
    if (e == 0) return 1;
    if (a == 0) return 0;
    const std::uint64_t order = impl_->size - 1;
    return impl_->exp[detail::mulmod(impl_->log[a], e % order, order)];
  }
  /// a^(q^k) for the designated q.
  gf_t frobenius(gf_t a, std::uint64_t k = 1) const noexcept {
    if (a == 0) return 0;
    const std::uint64_t order = impl_->size - 1;
    const std::uint64_t e = detail::powmod(frob_q_ % order, k, order);
    return impl_->exp[detail::mulmod(impl_->log[a], e == 0 ? order : e, order)];
  }
  /// The unique b with b^p = a.
  gf_t pth_root(gf_t a) const noexcept { return pow(a, impl_->size / impl_->p); }
  /// Discrete log to the table generator; a must be nonzero.
  std::uint32_t log(gf_t a) const { return impl_->log[a]; }

  /// Coordinates over F_p (base-p digits), lowest first.
  std::vector<std::uint32_t> coordinates(gf_t a) const {
    std::vector<std::uint32_t> d(impl_->degree);
    for (auto& x : d) {
      x = a % impl_->p;
      a /= impl_->p;
    }
    return d;
  }

  /// Structural equality of the tower and equality of the designated q.
  friend bool operator==(const FiniteField& a, const FiniteField& b) {
    return a.frob_q_ == b.frob_q_ && same_structure(a.impl_.get(), b.impl_.get());
  }
  friend bool operator!=(const FiniteField& a, const FiniteField& b) { return !(a == b); }

  /// True if every element of sub is represented with the same code here.
  bool has_subfield(const FiniteField& sub) const {
    for (const Impl* cur = impl_.get(); cur; cur = cur->base.get()) {
      if (same_structure(cur, sub.impl_.get())) return true;
    }
    return false;
  }

  void require_valid() const {
    if (!impl_) throw InvariantError("use of an uninitialised finite field");
  }

 private:
  FiniteField(std::shared_ptr<const Impl> impl, std::uint64_t q) : impl_(std::move(impl)), frob_q_(q) {}

  static bool same_structure(const Impl* a, const Impl* b) {
    while (true) {
      if (a == b) return true;
      if (!a || !b) return false;
      if (a->p != b->p || a->size != b->size || a->modulus != b->modulus) return false;
      a = a->base.get();
      b = b->base.get();
    }
  }

  static void finish_tables(Impl& impl, const std::vector<gf_t>& cycle) {
    const std::uint32_t order = impl.size - 1;
    impl.exp.resize(2 * static_cast<std::size_t>(order));
    impl.log.assign(impl.size, 0);
    for (std::uint32_t k = 0; k < order; ++k) {
      impl.exp[k] = cycle[k];
      impl.exp[k + order] = cycle[k];
      impl.log[cycle[k]] = k;
    }
    const std::uint32_t p = impl.p;
    impl.zech.assign(order, kNone);
    for (std::uint32_t k = 0; k < order; ++k) {
      const gf_t v = cycle[k];
      const gf_t w = v - v % p + (v % p + 1) % p;
      if (w != 0) impl.zech[k] = impl.log[w];
    }
    impl.neg_one_log = p == 2 ? 0 : order / 2;
  }

  std::shared_ptr<const Impl> impl_;
  std::uint64_t frob_q_ = 0;
};

}  // namespace drinfeld

#endif  // DRINFELD_FINITE_FIELD_HPP
