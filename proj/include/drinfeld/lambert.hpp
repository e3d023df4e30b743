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

#ifndef DRINFELD_LAMBERT_HPP
#define DRINFELD_LAMBERT_HPP

// Lower real branch W_{-1} of the Lambert W function and the threshold
// beyond which a^x / x^b exceeds c.

#include <algorithm>
#include <cmath>
#include <string>
#include <limits>
#include <numbers>

#include "drinfeld/error.hpp"

namespace drinfeld {

/// W_{-1}(z) for -1/e <= z < 0: the solution y <= -1 of y e^y = z.
///
/// Starts from the branch-point series (z near -1/e) or the asymptotic
/// expansion (z near 0), then runs Halley steps inside a bracket [lo, hi]
/// on which y e^y - z changes sign; any step leaving the bracket is replaced
/// by bisection.
inline double lambert_w_m1(double z) {
  constexpr double inv_e = 1.0 / std::numbers::e;
  if (!(z < 0.0) || z < -inv_e * (1.0 + 4 * std::numeric_limits<double>::epsilon())) {
    throw DomainError("W_{-1} is defined on [-1/e, 0)");
  }
  // y e^y is decreasing on (-inf, -1]
  const double p2 = 2.0 * (1.0 + std::numbers::e * z);
  if (p2 <= 0.0) return -1.0;

  double y;
  if (z < -0.25) {
    const double p = -std::sqrt(p2);
    y = -1.0 + p - p * p / 3.0 + 11.0 / 72.0 * p * p * p;
  } else {
    const double l1 = std::log(-z);
    const double l2 = std::log(-l1);
    y = l1 - l2 + l2 / l1;
  }

  double hi = -1.0;
  double lo = std::min(-2.0, 2.0 * y);
  while (lo * std::exp(lo) <= z) lo *= 2.0;  // need f(lo) > 0
  y = std::clamp(y, lo, hi);

  auto f = [z](double w) { return w * std::exp(w) - z; };
  for (int iter = 0; iter < 100; ++iter) {
    const double ew = std::exp(y);
    const double fy = y * ew - z;
    if (fy == 0.0) return y;
    if (fy > 0.0) {
      lo = y;
    } else {
      hi = y;
    }
    const double d1 = ew * (y + 1.0);
    const double d2 = ew * (y + 2.0);
    double next = y;
    const double denom = d1 - fy * d2 / (2.0 * d1);
    if (d1 != 0.0 && denom != 0.0 && std::isfinite(denom)) next = y - fy / denom;
    if (!(next > lo && next < hi)) next = 0.5 * (lo + hi);
    if (std::abs(next - y) <= 4.0 * std::numeric_limits<double>::epsilon() * std::abs(y)) return next;
    y = next;
    if (hi - lo <= 2.0 * std::numeric_limits<double>::epsilon() * std::abs(lo)) break;
  }
  // bracket collapsed: pick the endpoint with the smaller residual
  return std::abs(f(lo)) < std::abs(f(hi)) ? lo : hi;
}

/// Solution of the threshold problem for a^x / x^b > c.
struct LemmaThreshold {
  double x_star = 0.0;
  double w_argument = 0.0;  // -ln a / (c^(1/b) b)
  double w_value = 0.0;
  double hypothesis = 0.0;  // c^(1/b) b / ln a, must be >= e
};

/// For a > 1, b > 0, c > 0 with c^(1/b) b / ln a >= e, every x above
///   x* = -b W_{-1}(-ln a / (c^(1/b) b)) / ln a
/// satisfies a^x / x^b > c, and x* >= b / ln a. c is passed as ln c so that
/// c = q^Omega with Omega in the thousands stays representable.
inline LemmaThreshold lemma_threshold_log(double a, double b, double ln_c) {
  if (!(a > 1.0)) throw DomainError("threshold needs a > 1");
  if (!(b > 0.0)) throw DomainError("threshold needs b > 0");
  if (!std::isfinite(ln_c)) throw DomainError("threshold needs a finite c");
  const double ln_a = std::log(a);
  // ln of c^(1/b) b / ln a
  const double ln_hyp = ln_c / b + std::log(b) - std::log(ln_a);
  LemmaThreshold out;
  out.hypothesis = std::exp(ln_hyp);
  if (ln_hyp < 1.0) {
    throw DomainError("lemma hypothesis c^(1/b) * b / ln a >= e fails (value " + std::to_string(out.hypothesis) + ")");
  }
  out.w_argument = -std::exp(-ln_hyp);
  out.w_value = lambert_w_m1(out.w_argument);
  out.x_star = -b * out.w_value / ln_a;
  return out;
}

inline LemmaThreshold lemma_threshold(double a, double b, double c) {
  if (!(c > 0.0)) throw DomainError("threshold needs c > 0");
  return lemma_threshold_log(a, b, std::log(c));
}

}  // namespace drinfeld

#endif  // DRINFELD_LAMBERT_HPP
