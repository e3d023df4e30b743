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

#ifndef DRINFELD_BOUNDS_HPP
#define DRINFELD_BOUNDS_HPP

/**
 * @file bounds.hpp
 * @brief Explicit degree thresholds for irreducibility of mod-l torsion.
 *
 * For a rank-r module over a degree-d extension of F_q(T) with naive height
 * h and graded height h_G, a reducible mod-l representation forces one of
 *
 *   (1)  deg l - N log deg l <= log c2 + N (log d + r + log[h_G + 1 + q/(q-1) - q^r/(q^r-1)])
 *   (2)  deg l <= log c2 + N log(d h)
 *
 * with N = 10(d+1)^7 and all logarithms to base q. Omega is the larger of
 * the two right-hand sides, C solves q^x / x^N = q^Omega through W_{-1},
 * and deg l > max(C, Omega) rules both cases out.
 *
 * c2 enters only through log_q c2, a user parameter. Arguments of log_q are
 * clamped below at 1; that can only enlarge the right-hand sides.
 */

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <string>

#include "drinfeld/error.hpp"
#include "drinfeld/heights.hpp"
#include "drinfeld/lambert.hpp"

namespace drinfeld {

/// Which integer feeds the exponent 10(x+1)^7.
enum class ExpBase { d, r };

inline const char* to_string(ExpBase e) { return e == ExpBase::d ? "d" : "r"; }

struct BoundParams {
  std::uint64_t q = 0;
  int d = 1;
  int r = 2;
  Rational h = 0;    // naive height
  Rational h_G = 0;  // graded height
  double log_c2 = 0.0;
  ExpBase exp_base = ExpBase::d;
};

inline void validate(const BoundParams& p) {
  if (p.q < 2) throw DomainError("q must be at least 2");
  if (p.d < 1) throw DomainError("d must be at least 1");
  if (p.r < 2) throw DomainError("bounds need rank r >= 2; rank 1 representations are always irreducible");
  if (p.h < 0 || p.h_G < 0) throw DomainError("heights must be nonnegative");
  if (!std::isfinite(p.log_c2)) throw DomainError("log_c2 must be finite");
}

/// N_d = 10 (d+1)^7.
inline std::int64_t n_d(int d) {
  if (d < 0) throw DomainError("d must be nonnegative");
  std::int64_t v = 10;
  for (int i = 0; i < 7; ++i) {
    if (v > INT64_MAX / (d + 1)) throw DomainError("N_d overflows 64 bits");
    v *= d + 1;
  }
  return v;
}

/// The exponent in use: N_d or N_r depending on exp_base.
inline std::int64_t exponent_n(const BoundParams& p) { return n_d(p.exp_base == ExpBase::d ? p.d : p.r); }

inline double log_base(double x, std::uint64_t q) { return std::log(x) / std::log(static_cast<double>(q)); }

/// log_q(max(1, x)).
inline double clamped_log(const Rational& x, std::uint64_t q) {
  if (x <= 1) return 0.0;
  return log_base(static_cast<double>(x), q);
}

/// log_q of the isogeny degree bound c2 (d h)^N, with d h clamped at 1.
inline double dd_log_degree_bound(const BoundParams& p, const Rational& h) {
  validate(p);
  return p.log_c2 + static_cast<double>(exponent_n(p)) * clamped_log(Rational(p.d) * h, p.q);
}

/// The exact rational h_G + 1 + q/(q-1) - q^r/(q^r-1).
inline Rational ineq1_log_argument(const BoundParams& p) {
  return p.h_G + 1 + Rational(1) / detail::q_power_minus_one(p.q, 1) - Rational(1) / detail::q_power_minus_one(p.q, p.r);
}

inline double ineq1_rhs(const BoundParams& p) {
  validate(p);
  const double n = static_cast<double>(exponent_n(p));
  return p.log_c2 + n * (log_base(p.d, p.q) + p.r + clamped_log(ineq1_log_argument(p), p.q));
}

/// log c2 + N log_q(d h), the reading used by the derivation.
inline double ineq2_rhs(const BoundParams& p) { return dd_log_degree_bound(p, p.h); }

/// log c2 + N (log_q d) h, the other possible bracketing of the log term.
/// Reported for comparison only.
inline double ineq2_rhs_literal(const BoundParams& p) {
  validate(p);
  return p.log_c2 + static_cast<double>(exponent_n(p)) * log_base(p.d, p.q) * static_cast<double>(p.h);
}

struct InequalityEval {
  double lhs = 0.0;
  double rhs = 0.0;
  /// lhs <= rhs: this case of reducibility is not excluded.
  bool holds = false;
};

inline InequalityEval ineq1_holds(std::int64_t deg_ell, const BoundParams& p) {
  if (deg_ell < 1) throw DomainError("deg l must be at least 1");
  InequalityEval e;
  const double x = static_cast<double>(deg_ell);
  e.lhs = x - static_cast<double>(exponent_n(p)) * log_base(x, p.q);
  e.rhs = ineq1_rhs(p);
  e.holds = e.lhs <= e.rhs;
  return e;
}

inline InequalityEval ineq2_holds(std::int64_t deg_ell, const BoundParams& p) {
  if (deg_ell < 1) throw DomainError("deg l must be at least 1");
  InequalityEval e;
  e.lhs = static_cast<double>(deg_ell);
  e.rhs = ineq2_rhs(p);
  e.holds = e.lhs <= e.rhs;
  return e;
}

inline double omega_phi(const BoundParams& p) { return std::max(ineq1_rhs(p), ineq2_rhs(p)); }

struct BoundReport {
  BoundParams params;
  std::int64_t n = 0;
  double ineq1_rhs = 0.0;
  double ineq2_rhs = 0.0;
  double ineq2_rhs_literal = 0.0;
  double omega = 0.0;
  LemmaThreshold lemma;
  double c_threshold = 0.0;
  double threshold = 0.0;
};

/// C = x* for a = q, b = N, c = q^Omega (the hypothesis is checked in log
/// space), and threshold = max(C, Omega). A failing hypothesis is reported
/// as a DomainError, never clamped.
inline BoundReport irreducibility_threshold(const BoundParams& p) {
  validate(p);
  BoundReport rep;
  rep.params = p;
  rep.n = exponent_n(p);
  rep.ineq1_rhs = ineq1_rhs(p);
  rep.ineq2_rhs = ineq2_rhs(p);
  rep.ineq2_rhs_literal = ineq2_rhs_literal(p);
  rep.omega = std::max(rep.ineq1_rhs, rep.ineq2_rhs);
  const double ln_q = std::log(static_cast<double>(p.q));
  rep.lemma = lemma_threshold_log(static_cast<double>(p.q), static_cast<double>(rep.n), rep.omega * ln_q);
  rep.c_threshold = rep.lemma.x_star;
  rep.threshold = std::max(rep.c_threshold, rep.omega);
  return rep;
}

}  // namespace drinfeld

#endif  // DRINFELD_BOUNDS_HPP
