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

#ifndef DRINFELD_HEIGHTS_HPP
#define DRINFELD_HEIGHTS_HPP

/**
 * @file heights.hpp
 * @brief Places of F_q(T) and exact heights of Drinfeld modules.
 *
 * With logarithms to base q, a place nu of degree deg(nu) contributes
 * log|x|_nu = -deg(nu) v_nu(x). Heights use the positive part of that
 * quantity:
 *
 *   h(g)     = 1/d sum_nu n_nu max(0, -deg(nu) v_nu(g))
 *   h(phi)   = max_i h(g_i)
 *   h_G(phi) = 1/d sum_nu n_nu max(0, max_i -deg(nu) v_nu(g_i) / (q^i - 1))
 *
 * so both are exact rationals. Over F_q(T) (d = 1, n_nu = 1) the places are
 * found by factoring the coefficients; for a proper extension K the caller
 * supplies the per-place data as a table.
 */

#include <algorithm>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "drinfeld/drinfeld.hpp"
#include "drinfeld/error.hpp"
#include "drinfeld/expr.hpp"
#include "drinfeld/poly.hpp"
#include "drinfeld/ratfunc.hpp"

namespace drinfeld {

using Rational = boost::multiprecision::cpp_rational;

/// A place of F_q(T): a monic irreducible p of A, or infinity.
struct Place {
  bool infinite = false;
  Poly prime;  // empty for infinity

  static Place at_infinity() { return {true, {}}; }
  static Place finite(Poly p) { return {false, std::move(p)}; }

  int degree() const { return infinite ? 1 : prime.degree(); }

  friend bool operator==(const Place&, const Place&) = default;
  /// Finite places by (degree, coefficients), infinity last.
  friend bool operator<(const Place& a, const Place& b) {
    if (a.infinite != b.infinite) return b.infinite;
    return a.prime < b.prime;
  }
};

struct PlaceValuation {
  Place place;
  int valuation = 0;
};

/// Places with nonzero valuation, plus infinity always; finite places first.
inline std::vector<PlaceValuation> valuations_of(const RationalField& K, const RationalFunc& x) {
  if (K.is_zero(x)) throw DomainError("valuations of zero");
  const PolyRing& A = K.poly_ring();
  std::map<Place, int> v;
  for (const auto& f : A.factor(x.num)) v[Place::finite(f.factor)] += f.multiplicity;
  for (const auto& f : A.factor(x.den)) v[Place::finite(f.factor)] -= f.multiplicity;
  std::vector<PlaceValuation> out;
  for (auto& [pl, val] : v) {
    if (val != 0) out.push_back({pl, val});
  }
  out.push_back({Place::at_infinity(), x.den.degree() - x.num.degree()});
  return out;
}

/// Valuation at a single place.
inline int valuation_at(const RationalField& K, const RationalFunc& x, const Place& place) {
  if (K.is_zero(x)) throw DomainError("valuation of zero");
  if (place.infinite) return x.den.degree() - x.num.degree();
  const PolyRing& A = K.poly_ring();
  auto count = [&](Poly f) {
    int n = 0;
    while (true) {
      auto [q, r] = A.divmod(f, place.prime);
      if (!r.is_zero()) return n;
      f = std::move(q);
      ++n;
    }
  };
  return count(x.num) - count(x.den);
}

/// One row of per-place data: for d = 1 generated from the coefficients,
/// for d > 1 read from a user table and taken on trust.
struct HeightDatum {
  std::string label;
  int degree = 1;
  int local_degree = 1;  // n_nu
  std::vector<std::optional<int>> valuations;  // v_nu(g_i); nullopt for g_i = 0
};

struct PlaceContribution {
  std::string label;
  int degree = 1;
  int local_degree = 1;
  std::vector<std::optional<int>> valuations;
  std::vector<Rational> naive_terms;  // n_nu max(0, -deg v(g_i)) per coefficient
  Rational graded_term;               // n_nu max(0, max_i ...)
  Rational graded_term_unclamped;     // n_nu max_i ...
};

struct HeightReport {
  std::uint64_t q = 0;
  int rank = 0;
  int d = 1;
  bool from_table = false;
  Rational naive;
  Rational graded;
  /// Sum without the clamp at 0, reported for comparison only.
  Rational graded_unclamped;
  std::vector<Rational> coefficient_heights;
  std::vector<PlaceContribution> places;
  /// (q^r - 1) h_G - h, nonnegative.
  Rational slack;
};

namespace detail {

inline Rational q_power_minus_one(std::uint64_t q, int i) {
  boost::multiprecision::cpp_int v = 1;
  for (int k = 0; k < i; ++k) v *= q;
  return Rational(v - 1);
}

}  // namespace detail

/// Heights from explicit per-place rows.
inline HeightReport heights_from_data(std::uint64_t q, int rank, int d, const std::vector<HeightDatum>& rows,
                                      bool from_table) {
  if (d < 1) throw DomainError("extension degree d must be at least 1");
  if (rank < 1) throw DomainError("rank must be at least 1");
  HeightReport rep;
  rep.q = q;
  rep.rank = rank;
  rep.d = d;
  rep.from_table = from_table;
  rep.coefficient_heights.assign(static_cast<std::size_t>(rank), Rational(0));
  for (const auto& row : rows) {
    if (static_cast<int>(row.valuations.size()) != rank) throw DomainError("height row '" + row.label + "' has the wrong number of valuations");
    if (row.degree < 1 || row.local_degree < 1) throw DomainError("height row '" + row.label + "' has a nonpositive degree");
    PlaceContribution pc;
    pc.label = row.label;
    pc.degree = row.degree;
    pc.local_degree = row.local_degree;
    pc.valuations = row.valuations;
    std::optional<Rational> best;
    for (int i = 0; i < rank; ++i) {
      const auto& v = row.valuations[static_cast<std::size_t>(i)];
      Rational term = 0;
      if (v) {
        const Rational local = Rational(-row.degree) * *v;
        term = row.local_degree * std::max(Rational(0), local);
        const Rational graded = local / detail::q_power_minus_one(q, i + 1);
        if (!best || graded > *best) best = graded;
      }
      pc.naive_terms.push_back(term);
      rep.coefficient_heights[static_cast<std::size_t>(i)] += term;
    }
    if (best) {
      pc.graded_term_unclamped = row.local_degree * *best;
      pc.graded_term = row.local_degree * std::max(Rational(0), *best);
    }
    rep.graded += pc.graded_term;
    rep.graded_unclamped += pc.graded_term_unclamped;
    rep.places.push_back(std::move(pc));
  }
  for (auto& h : rep.coefficient_heights) {
    h /= d;
    rep.naive = std::max(rep.naive, h);
  }
  rep.graded /= d;
  rep.graded_unclamped /= d;
  rep.slack = detail::q_power_minus_one(q, rank) * rep.graded - rep.naive;
  return rep;
}

/// Per-place rows for a module over F_q(T): every place where some g_i has
/// nonzero valuation, and infinity. `label` renders a finite place.
template <class Labeler>
std::vector<HeightDatum> height_data(const DrinfeldModule<RationalField>& phi, Labeler&& label) {
  const RationalField& K = phi.field();
  std::map<Place, std::vector<std::optional<int>>> table;
  const int r = phi.rank();
  auto row = [&](const Place& pl) -> std::vector<std::optional<int>>& {
    auto it = table.find(pl);
    if (it != table.end()) return it->second;
    std::vector<std::optional<int>> init(static_cast<std::size_t>(r));
    for (int i = 0; i < r; ++i) {
      if (!K.is_zero(phi.coefficients()[static_cast<std::size_t>(i)])) init[static_cast<std::size_t>(i)] = 0;
    }
    return table.emplace(pl, std::move(init)).first->second;
  };
  row(Place::at_infinity());
  for (int i = 0; i < r; ++i) {
    const auto& g = phi.coefficients()[static_cast<std::size_t>(i)];
    if (K.is_zero(g)) continue;
    for (const auto& pv : valuations_of(K, g)) row(pv.place)[static_cast<std::size_t>(i)] = pv.valuation;
  }
  std::vector<HeightDatum> out;
  for (auto& [pl, vals] : table) {
    out.push_back({pl.infinite ? std::string("inf") : label(pl.prime), pl.degree(), 1, vals});
  }
  return out;
}

inline HeightReport height_report(const DrinfeldModule<RationalField>& phi) {
  const FqContext& fq = phi.field().fq();
  auto rows = height_data(phi, [&](const Poly& p) { return format_poly(fq, p).text; });
  return heights_from_data(phi.q(), phi.rank(), 1, rows, false);
}

/// h(phi) = max_i h(g_i) with h(0) = 0.
inline Rational naive_height(const DrinfeldModule<RationalField>& phi) {
  // h(n/d) = max(deg n, deg d) over F_q(T); no factorisation needed.
  Rational best = 0;
  for (const auto& g : phi.coefficients()) {
    if (g.num.is_zero()) continue;
    best = std::max(best, Rational(std::max(g.num.degree(), g.den.degree())));
  }
  return best;
}

inline Rational graded_height(const DrinfeldModule<RationalField>& phi) { return height_report(phi).graded; }

/// Weil height of a single nonzero rational function.
inline Rational coefficient_height(const RationalFunc& g) {
  if (g.num.is_zero()) return 0;
  return Rational(std::max(g.num.degree(), g.den.degree()));
}

/// (q^r - 1) h_G(phi) - h(phi); nonnegative for every module.
inline Rational check_height_ineq(const DrinfeldModule<RationalField>& phi) {
  const HeightReport rep = height_report(phi);
  if (rep.naive != naive_height(phi)) throw InvariantError("naive height disagrees between the two routes");
  return rep.slack;
}

/// deg N + q/(q-1) - q^r/(q^r-1) = deg N + 1/(q-1) - 1/(q^r-1).
inline Rational bp_drift_bound(int r, std::uint64_t q, int deg_n) {
  if (r < 1) throw DomainError("rank must be at least 1");
  if (deg_n < 0) throw DomainError("deg N must be nonnegative");
  if (q < 2) throw DomainError("q must be at least 2");
  return Rational(deg_n) + Rational(1) / detail::q_power_minus_one(q, 1) - Rational(1) / detail::q_power_minus_one(q, r);
}

}  // namespace drinfeld

#endif  // DRINFELD_HEIGHTS_HPP
