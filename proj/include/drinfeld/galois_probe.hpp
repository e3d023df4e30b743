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

#ifndef DRINFELD_GALOIS_PROBE_HPP
#define DRINFELD_GALOIS_PROBE_HPP

// Frobenius action on l-torsion of reductions, and a one-sided
// irreducibility certificate built from characteristic polynomials.

#include <cstdint>
#include <limits>
#include <numeric>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "drinfeld/drinfeld.hpp"
#include "drinfeld/error.hpp"
#include "drinfeld/finite_field.hpp"
#include "drinfeld/fq.hpp"
#include "drinfeld/poly.hpp"
#include "drinfeld/twisted.hpp"

namespace drinfeld {

struct ProbeOptions {
  /// Largest splitting field searched for torsion points (3^12 by default).
  std::uint64_t max_field_size = 531441;
};

/// l-torsion of the reduction at p, with an A/l-basis and a coordinate map.
struct TorsionBasis {
  Poly place;
  Poly ell;
  DrinfeldModule<FiniteField> reduced;
  ResidueField scalars;        // A/l
  FiniteField split_field;     // contains A/p
  int split_degree = 1;        // [split_field : A/p]
  std::vector<gf_t> roots;     // ascending by code
  std::vector<gf_t> basis;     // r elements
  std::vector<TwistedPoly<FiniteField>> scalar_action;  // phi_c over split_field, c in A/l by code
  std::vector<std::uint32_t> coord_index;               // field code -> packed coordinates, or npos

  static constexpr std::uint32_t npos = std::numeric_limits<std::uint32_t>::max();

  /// Coordinates of a torsion point over A/l, first basis element first.
  std::vector<gf_t> coordinates(gf_t x) const {
    if (x >= coord_index.size() || coord_index[x] == npos) throw DomainError("point is not in the torsion module");
    std::uint32_t idx = coord_index[x];
    const std::uint32_t s = static_cast<std::uint32_t>(scalars.size());
    std::vector<gf_t> v(basis.size());
    for (auto& c : v) {
      c = idx % s;
      idx /= s;
    }
    return v;
  }

  /// sum_i phi_{v_i}(b_i).
  gf_t combine(const std::vector<gf_t>& v) const {
    gf_t acc = 0;
    for (std::size_t i = 0; i < basis.size(); ++i) acc = split_field.add(acc, q_poly_eval(scalar_action[v[i]], basis[i]));
    return acc;
  }
};

namespace detail {

inline void require_probe_inputs(const DrinfeldModule<RationalField>& phi, const Poly& p, const Poly& ell) {
  const PolyRing& A = phi.A();
  for (const Poly* f : {&p, &ell}) {
    if (f->is_zero() || !A.is_monic(*f) || !A.is_irreducible(*f)) throw DomainError("places and l must be monic irreducible");
  }
  if (p == ell) throw DomainError("l must differ from the place p");
  if (!has_good_reduction(phi, p)) throw DomainError("bad reduction at the place");
}

inline std::uint64_t lcm_u64(std::uint64_t a, std::uint64_t b) { return a / std::gcd(a, b) * b; }

}  // namespace detail

/// Splitting degree over L of an additive polynomial: lcm of the degrees of
/// its irreducible factors when it is small enough to factor densely, else
/// found by searching extensions.
inline int splitting_degree(const FiniteField& L, const TwistedPoly<FiniteField>& u, std::uint64_t expected_roots,
                            const ProbeOptions& opt) {
  const auto dense = dense_coefficients(to_q_poly(u));
  if (dense.size() <= 730) {
    std::uint64_t n = 1;
    for (int d : PolyRing(L).factor_degrees(Poly(dense))) n = detail::lcm_u64(n, static_cast<std::uint64_t>(d));
    return static_cast<int>(n);
  }
  std::uint64_t size = L.size();
  for (int n = 1;; ++n) {
    if (n > 1) size *= L.size();
    if (size > opt.max_field_size) break;
    const FiniteField E = extend(L, static_cast<std::size_t>(n));
    if (additive_roots(E, TwistedPoly<FiniteField>(E, u.coeffs())).size() == expected_roots) return n;
  }
  return -1;
}

/// Torsion points of the reduction at p killed by l, in the smallest
/// extension of A/p containing all of them, with a greedily chosen basis.
inline TorsionBasis torsion_basis_mod_p(const DrinfeldModule<RationalField>& phi, const Poly& p, const Poly& ell,
                                        const ProbeOptions& opt = {}) {
  detail::require_probe_inputs(phi, p, ell);
  TorsionBasis tb;
  tb.place = p;
  tb.ell = ell;
  tb.reduced = reduce_at_place(phi, p);
  tb.scalars = ResidueField(phi.field().fq(), ell);
  const FiniteField& L = tb.reduced.field();
  const int r = phi.rank();

  std::uint64_t expected = 1;
  for (int i = 0; i < r * ell.degree(); ++i) expected *= phi.q();

  const auto phi_ell = phi_at(tb.reduced, ell);
  const int n = splitting_degree(L, phi_ell, expected, opt);
  std::uint64_t size = 1;
  for (int i = 0; i < n && n > 0; ++i) {
    size *= L.size();
    if (size > opt.max_field_size) break;
  }
  if (n < 1 || size > opt.max_field_size) {
    throw DomainError("splitting field of the l-torsion exceeds the configured size limit");
  }
  tb.split_degree = n;
  tb.split_field = extend(L, static_cast<std::size_t>(n));
  const FiniteField& E = tb.split_field;
  tb.roots = additive_roots(E, TwistedPoly<FiniteField>(E, phi_ell.coeffs()));
  if (tb.roots.size() != expected) throw InvariantError("torsion count differs from q^(r deg l)");

  const std::uint32_t s = static_cast<std::uint32_t>(tb.scalars.size());
  const TwistedPoly<FiniteField> phi_t_E(E, tb.reduced.phi_T().coeffs());
  for (gf_t c = 0; c < s; ++c) {
    const Poly a = tb.scalars.lift(c);
    TwistedPoly<FiniteField> acc = TwistedPoly<FiniteField>::zero(E);
    for (std::size_t i = a.coeffs().size(); i-- > 0;) {
      acc = acc * phi_t_E + TwistedPoly<FiniteField>::constant(E, a.coeff(i));
    }
    tb.scalar_action.push_back(std::move(acc));
  }

  tb.coord_index.assign(E.size(), TorsionBasis::npos);
  tb.coord_index[0] = 0;
  std::vector<gf_t> members{0};
  std::uint32_t stride = 1;
  for (gf_t x : tb.roots) {
    if (tb.coord_index[x] != TorsionBasis::npos) continue;
    if (static_cast<int>(tb.basis.size()) == r) throw InvariantError("torsion module has more than r generators");
    tb.basis.push_back(x);
    const std::size_t old = members.size();
    for (gf_t c = 1; c < s; ++c) {
      const gf_t y = q_poly_eval(tb.scalar_action[c], x);
      for (std::size_t i = 0; i < old; ++i) {
        const gf_t z = E.add(members[i], y);
        if (tb.coord_index[z] != TorsionBasis::npos) throw InvariantError("torsion span is not free");
        tb.coord_index[z] = tb.coord_index[members[i]] + c * stride;
        members.push_back(z);
      }
    }
    stride *= s;
  }
  if (static_cast<int>(tb.basis.size()) != r || members.size() != tb.roots.size()) {
    throw InvariantError("torsion module is not free of rank r");
  }
  return tb;
}

using Matrix = std::vector<std::vector<gf_t>>;

/// Frobenius data over the field Fl = A/l.
struct FrobeniusData {
  FiniteField scalars;
  Matrix matrix;              // column j: coordinates of Frob(b_j)
  Poly char_poly;             // det(X I - M), monic of degree r
  std::vector<int> factor_degrees;  // ascending, with multiplicity
};

/// det(X I - M) by cofactor expansion (r is small).
inline Poly characteristic_polynomial(const FiniteField& F, const Matrix& m) {
  const std::size_t r = m.size();
  for (const auto& row : m) {
    if (row.size() != r) throw DomainError("matrix must be square");
  }
  const PolyRing R(F);
  std::vector<std::vector<Poly>> a(r, std::vector<Poly>(r));
  for (std::size_t i = 0; i < r; ++i) {
    for (std::size_t j = 0; j < r; ++j) {
      a[i][j] = R.constant(F.neg(m[i][j]));
      if (i == j) a[i][j] = R.add(a[i][j], R.x());
    }
  }
  auto det = [&](auto&& self, const std::vector<std::size_t>& rows, const std::vector<std::size_t>& cols) -> Poly {
    if (rows.empty()) return R.one();
    Poly acc = R.zero();
    std::vector<std::size_t> sub_rows(rows.begin() + 1, rows.end());
    for (std::size_t k = 0; k < cols.size(); ++k) {
      const Poly& e = a[rows[0]][cols[k]];
      if (e.is_zero()) continue;
      std::vector<std::size_t> sub_cols;
      for (std::size_t t = 0; t < cols.size(); ++t) {
        if (t != k) sub_cols.push_back(cols[t]);
      }
      Poly term = R.mul(e, self(self, sub_rows, sub_cols));
      acc = k % 2 == 0 ? R.add(acc, term) : R.sub(acc, term);
    }
    return acc;
  };
  std::vector<std::size_t> idx(r);
  std::iota(idx.begin(), idx.end(), std::size_t{0});
  return det(det, idx, idx);
}

inline FrobeniusData frobenius_data(const FiniteField& F, Matrix m) {
  FrobeniusData fd;
  fd.scalars = F;
  fd.char_poly = characteristic_polynomial(F, m);
  fd.matrix = std::move(m);
  fd.factor_degrees = PolyRing(F).factor_degrees(fd.char_poly);
  return fd;
}

/// Matrix of x -> x^(q^deg p) on the torsion of an existing basis, checked
/// on every torsion point.
inline FrobeniusData frobenius_matrix(const TorsionBasis& tb) {
  const FiniteField& E = tb.split_field;
  const FiniteField& Fl = tb.scalars.field();
  const std::size_t r = tb.basis.size();
  const std::uint64_t k = static_cast<std::uint64_t>(tb.place.degree());
  Matrix m(r, std::vector<gf_t>(r, 0));
  for (std::size_t j = 0; j < r; ++j) {
    const auto col = tb.coordinates(E.frobenius(tb.basis[j], k));
    for (std::size_t i = 0; i < r; ++i) m[i][j] = col[i];
  }
  for (gf_t x : tb.roots) {
    const auto v = tb.coordinates(x);
    std::vector<gf_t> mv(r, 0);
    for (std::size_t i = 0; i < r; ++i) {
      for (std::size_t j = 0; j < r; ++j) mv[i] = Fl.add(mv[i], Fl.mul(m[i][j], v[j]));
    }
    if (tb.combine(mv) != E.frobenius(x, k)) throw InvariantError("Frobenius matrix disagrees with the action on a torsion point");
  }
  FrobeniusData fd = frobenius_data(Fl, std::move(m));
  if (fd.char_poly.coeff(0) == 0) throw InvariantError("Frobenius matrix is singular");
  return fd;
}

inline FrobeniusData frobenius_matrix(const DrinfeldModule<RationalField>& phi, const Poly& p, const Poly& ell,
                                      const ProbeOptions& opt = {}) {
  return frobenius_matrix(torsion_basis_mod_p(phi, p, ell, opt));
}

/// Subset sums of the factor degrees lying in {1, ..., r-1}.
inline std::set<int> invariant_dim_set(const std::vector<int>& factor_degrees, int r) {
  std::set<int> sums{0};
  for (int d : factor_degrees) {
    std::set<int> next = sums;
    for (int s : sums) next.insert(s + d);
    sums = std::move(next);
  }
  std::set<int> out;
  for (int s : sums) {
    if (s >= 1 && s <= r - 1) out.insert(s);
  }
  return out;
}

inline std::set<int> invariant_dim_set(const FrobeniusData& fd) {
  return invariant_dim_set(fd.factor_degrees, static_cast<int>(fd.matrix.size()));
}

enum class VerdictStatus { certified_irreducible, inconclusive };

inline const char* to_string(VerdictStatus s) {
  return s == VerdictStatus::certified_irreducible ? "certified-irreducible" : "inconclusive";
}

struct PlaceTrace {
  Poly place;
  FrobeniusData data;
  std::set<int> dims;
  std::set<int> surviving;  // intersection up to and including this place
};

struct Verdict {
  VerdictStatus status = VerdictStatus::inconclusive;
  int rank = 0;
  std::set<int> surviving;
  std::vector<PlaceTrace> trace;
};

/// Intersects the possible invariant dimensions over the given places.
inline Verdict certify_from_data(int r, std::vector<std::pair<Poly, FrobeniusData>> per_place) {
  if (per_place.empty()) throw DomainError("certification needs at least one place");
  if (r < 1) throw DomainError("rank must be at least 1");
  Verdict v;
  v.rank = r;
  for (int k = 1; k < r; ++k) v.surviving.insert(k);
  for (auto& [place, fd] : per_place) {
    PlaceTrace t;
    t.place = std::move(place);
    t.dims = invariant_dim_set(fd.factor_degrees, r);
    std::set<int> keep;
    for (int k : v.surviving) {
      if (t.dims.count(k)) keep.insert(k);
    }
    v.surviving = std::move(keep);
    t.surviving = v.surviving;
    t.data = std::move(fd);
    v.trace.push_back(std::move(t));
  }
  v.status = v.surviving.empty() ? VerdictStatus::certified_irreducible : VerdictStatus::inconclusive;
  return v;
}

/// Every place must have good reduction and differ from l.
inline Verdict certify_irreducible(const DrinfeldModule<RationalField>& phi, const Poly& ell, const std::vector<Poly>& places,
                                   const ProbeOptions& opt = {}) {
  if (places.empty()) throw DomainError("certification needs at least one place");
  std::vector<std::pair<Poly, FrobeniusData>> data;
  for (const auto& p : places) data.emplace_back(p, frobenius_matrix(phi, p, ell, opt));
  return certify_from_data(phi.rank(), std::move(data));
}

}  // namespace drinfeld

#endif  // DRINFELD_GALOIS_PROBE_HPP
