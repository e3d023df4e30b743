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

#ifndef DRINFELD_EXPR_HPP
#define DRINFELD_EXPR_HPP

// Text syntax for elements of F_q, A = F_q[T], F_q(T) and F_q(T){tau}.
//
//   expr  := term (('+' | '-') term)*
//   term  := unary (('*' | '/') unary)*
//   unary := ('+' | '-') unary | power
//   power := atom ('^' integer)?
//   atom  := integer | 'T' | 'z' | 't' | '(' expr ')'
//
// Integers are read modulo p, z is the generator of F_q over F_p (only when
// e > 1) and t is tau. Division is right multiplication by the inverse of a
// tau-free element. Every printed value parses back to itself.

#include <cctype>
#include <cstdint>
#include <functional>
#include <string>
#include <string_view>
#include <vector>

#include "drinfeld/error.hpp"
#include "drinfeld/fq.hpp"
#include "drinfeld/poly.hpp"
#include "drinfeld/ratfunc.hpp"
#include "drinfeld/twisted.hpp"

namespace drinfeld {

/// Position of the first character of a parsed string inside a larger
/// source, 1-based; zero means unknown.
struct SourcePos {
  std::size_t line = 0;
  std::size_t column = 0;
};

namespace detail {

class ExprParser {
 public:
  using TP = TwistedPoly<RationalField>;

  ExprParser(const RationalField& K, std::string_view text, SourcePos pos) : K_(K), s_(text), pos_(pos) {}

  TP parse() {
    skip_ws();
    if (i_ == s_.size()) fail("empty expression");
    TP v = expr();
    skip_ws();
    if (i_ != s_.size()) fail(std::string("unexpected '") + s_[i_] + "'");
    return v;
  }

 private:
  static constexpr std::uint64_t kMaxExponent = 1u << 20;

  [[noreturn]] void fail(const std::string& msg) const { fail_at(msg, i_); }
  [[noreturn]] void fail_at(const std::string& msg, std::size_t at) const {
    const std::size_t col = pos_.column ? pos_.column + at : 0;
    std::string where = "offset " + std::to_string(at);
    if (pos_.line) where = "line " + std::to_string(pos_.line) + ", column " + std::to_string(col) + " (" + where + ")";
    throw ParseError("parse error at " + where + ": " + msg, at, pos_.line, col);
  }

  void skip_ws() {
    while (i_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[i_]))) ++i_;
  }
  bool eat(char c) {
    skip_ws();
    if (i_ < s_.size() && s_[i_] == c) {
      ++i_;
      return true;
    }
    return false;
  }

  TP expr() {
    TP v = term();
    while (true) {
      if (eat('+')) {
        v = v + term();
      } else if (eat('-')) {
        v = v - term();
      } else {
        return v;
      }
    }
  }

  TP term() {
    TP v = unary();
    while (true) {
      if (eat('*')) {
        v = v * unary();
      } else if (eat('/')) {
        skip_ws();
        const std::size_t at = i_;
        TP d = unary();
        if (d.degree() > 0) fail_at("division by an expression involving t", at);
        if (d.is_zero()) fail_at("division by zero", at);
        v = v * TP::constant(K_, K_.inv(d.coeff(0)));
      } else {
        return v;
      }
    }
  }

  TP unary() {
    if (eat('-')) return -unary();
    if (eat('+')) return unary();
    return power();
  }

  TP power() {
    TP base = atom();
    if (!eat('^')) return base;
    skip_ws();
    if (i_ >= s_.size() || !std::isdigit(static_cast<unsigned char>(s_[i_]))) fail("expected a nonnegative integer exponent");
    const std::size_t at = i_;
    std::uint64_t e = 0;
    while (i_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[i_]))) {
      e = e * 10 + static_cast<std::uint64_t>(s_[i_] - '0');
      if (e > kMaxExponent) fail_at("exponent too large", at);
      ++i_;
    }
    TP r = TP::one(K_);
    while (e) {
      if (e & 1) r = r * base;
      e >>= 1;
      if (e) base = base * base;
    }
    return r;
  }

  TP atom() {
    skip_ws();
    if (i_ == s_.size()) fail("unexpected end of expression");
    const char c = s_[i_];
    if (std::isdigit(static_cast<unsigned char>(c))) {
      const std::uint32_t p = K_.fq().p();
      std::uint64_t v = 0;
      while (i_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[i_]))) {
        v = (v * 10 + static_cast<std::uint64_t>(s_[i_] - '0')) % p;
        ++i_;
      }
      return TP::constant(K_, K_.from_int(static_cast<long long>(v)));
    }
    if (c == 'T') {
      ++i_;
      return TP::constant(K_, K_.t());
    }
    if (c == 'z') {
      if (K_.fq().e() == 1) fail("'z' is only available when e > 1");
      ++i_;
      return TP::constant(K_, K_.from_fq(K_.fq().z()));
    }
    if (c == 't') {
      ++i_;
      return TP::tau(K_);
    }
    if (c == '(') {
      ++i_;
      TP v = expr();
      if (!eat(')')) fail("expected ')'");
      return v;
    }
    fail(std::string("unexpected '") + c + "'");
  }

  const RationalField& K_;
  std::string_view s_;
  SourcePos pos_;
  std::size_t i_ = 0;
};

}  // namespace detail

inline TwistedPoly<RationalField> parse_twisted(const RationalField& K, std::string_view text, SourcePos pos = {}) {
  return detail::ExprParser(K, text, pos).parse();
}

inline RationalFunc parse_rational(const RationalField& K, std::string_view text, SourcePos pos = {}) {
  auto v = parse_twisted(K, text, pos);
  if (v.degree() > 0) throw ParseError("expected an element of F_q(T), found t", 0, pos.line, pos.column);
  return v.coeff(0);
}

inline Poly parse_poly(const FqContext& fq, std::string_view text, SourcePos pos = {}) {
  const RationalField K(fq);
  RationalFunc f = parse_rational(K, text, pos);
  if (!K.is_polynomial(f)) throw ParseError("expected a polynomial in T", 0, pos.line, pos.column);
  return f.num;
}

inline gf_t parse_fq(const FqContext& fq, std::string_view text, SourcePos pos = {}) {
  Poly f = parse_poly(fq, text, pos);
  if (f.degree() > 0) throw ParseError("expected a constant", 0, pos.line, pos.column);
  return f.coeff(0);
}

/// A printed value and whether it needs parentheses as a factor.
struct Printed {
  std::string text;
  bool compound = false;
};

/// Sum of c_k * var^k, highest power first.
inline Printed format_univariate(const Poly& f, const std::string& var, const std::function<Printed(gf_t)>& coeff) {
  if (f.is_zero()) return {"0", false};
  std::vector<std::string> terms;
  for (int k = f.degree(); k >= 0; --k) {
    const gf_t c = f.coeff(static_cast<std::size_t>(k));
    if (c == 0) continue;
    const std::string mono = k == 0 ? "" : (k == 1 ? var : var + "^" + std::to_string(k));
    if (mono.empty()) {
      terms.push_back(coeff(c).text);
    } else if (c == 1) {
      terms.push_back(mono);
    } else {
      const Printed pc = coeff(c);
      terms.push_back((pc.compound ? "(" + pc.text + ")" : pc.text) + "*" + mono);
    }
  }
  std::string s;
  for (std::size_t i = 0; i < terms.size(); ++i) s += (i ? " + " : "") + terms[i];
  const bool lone_constant = terms.size() == 1 && f.degree() == 0;
  return {s, terms.size() > 1 || (lone_constant && coeff(f.lead()).compound)};
}

inline Printed format_fq(const FqContext& fq, gf_t a) {
  if (fq.e() == 1) return {std::to_string(a), false};
  std::vector<gf_t> digits;
  for (gf_t x = a; x; x /= fq.p()) digits.push_back(x % fq.p());
  return format_univariate(Poly(digits), "z", [](gf_t c) { return Printed{std::to_string(c), false}; });
}

inline Printed format_poly(const FqContext& fq, const Poly& f, const std::string& var = "T") {
  return format_univariate(f, var, [&](gf_t c) { return format_fq(fq, c); });
}

namespace detail {

/// Whether a polynomial prints as a single atom (safe as a divisor).
inline bool prints_atomic(const FqContext& fq, const Poly& f) {
  int terms = 0;
  for (auto c : f.coeffs()) terms += c != 0;
  if (terms != 1) return false;
  const gf_t lc = f.lead();
  return f.degree() == 0 ? !format_fq(fq, lc).compound && fq.e() == 1 : lc == 1;
}

}  // namespace detail

inline Printed format_rational(const FqContext& fq, const RationalFunc& x) {
  Printed n = format_poly(fq, x.num);
  if (x.den.degree() == 0) return n;
  const Printed d = format_poly(fq, x.den);
  std::string s = n.compound ? "(" + n.text + ")" : n.text;
  s += " / ";
  s += detail::prints_atomic(fq, x.den) ? d.text : "(" + d.text + ")";
  return {s, true};
}

/// c0 + c1*t + c2*t^2 + ..., lowest power first.
inline std::string format_twisted(const RationalField& K, const TwistedPoly<RationalField>& u) {
  if (u.is_zero()) return "0";
  std::string s;
  for (std::size_t k = 0; k < u.coeffs().size(); ++k) {
    const RationalFunc& c = u.coeffs()[k];
    if (K.is_zero(c)) continue;
    std::string term;
    const std::string mono = k == 0 ? "" : (k == 1 ? "t" : "t^" + std::to_string(k));
    const Printed pc = format_rational(K.fq(), c);
    if (mono.empty()) {
      term = pc.text;
    } else if (c == K.one()) {
      term = mono;
    } else {
      term = (pc.compound ? "(" + pc.text + ")" : pc.text) + "*" + mono;
    }
    s += (s.empty() ? "" : " + ") + term;
  }
  return s;
}

}  // namespace drinfeld

#endif  // DRINFELD_EXPR_HPP
