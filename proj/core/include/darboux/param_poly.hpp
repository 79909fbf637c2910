// Copyright 2026 The darboux authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <map>
#include <string>

#include "darboux/rational.hpp"

namespace darboux {

/// Exponent pair (i, j) of a^i b^j.
struct ParamExp {
  int a = 0;
  int b = 0;

  int degree() const { return a + b; }
  bool operator==(const ParamExp& o) const = default;
};

/// Graded-lex "less" on parameter exponents arranged so that map iteration
/// yields the canonical descending order (higher degree first, a before b).
struct ParamExpDesc {
  bool operator()(const ParamExp& l, const ParamExp& r) const {
    if (l.degree() != r.degree()) return l.degree() > r.degree();
    if (l.a != r.a) return l.a > r.a;
    return l.b > r.b;
  }
};

/// Element of Q[a, b]: a polynomial in the two parameter symbols with
/// rational coefficients. This is the coefficient domain of the symbolic
/// mode; plain rationals embed as constants. Zero coefficients are never
/// stored.
class ParamPoly {
 public:
  using TermMap = std::map<ParamExp, Rat, ParamExpDesc>;

  ParamPoly() = default;
  ParamPoly(const Rat& c) {  // NOLINT: implicit embedding of constants
    if (!c.is_zero()) terms_[{0, 0}] = c;
  }
  ParamPoly(long n) : ParamPoly(Rat(n)) {}  // NOLINT

  static ParamPoly symbol_a() { return monomial(1, 0, Rat(1)); }
  static ParamPoly symbol_b() { return monomial(0, 1, Rat(1)); }
  static ParamPoly monomial(int ea, int eb, const Rat& c);

  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const;
  /// The embedded rational value; requires is_constant().
  Rat constant_value() const;
  int degree() const;
  bool uses_a() const;
  bool uses_b() const;

  ParamPoly operator-() const;
  ParamPoly operator+(const ParamPoly& o) const;
  ParamPoly operator-(const ParamPoly& o) const;
  ParamPoly operator*(const ParamPoly& o) const;
  ParamPoly& operator+=(const ParamPoly& o);
  ParamPoly scaled(const Rat& c) const;

  bool operator==(const ParamPoly& o) const { return terms_ == o.terms_; }
  bool operator!=(const ParamPoly& o) const { return !(*this == o); }
  /// Canonical total order (degree, then term-wise); used for set keys and
  /// deterministic output only.
  bool operator<(const ParamPoly& o) const;

  /// Substitutes polynomial values for the symbols: this(a := va, b := vb).
  ParamPoly substituted(const ParamPoly& va, const ParamPoly& vb) const;
  Rat eval(const Rat& a, const Rat& b) const;

  const TermMap& terms() const { return terms_; }

  /// Canonical text, e.g. "2*a^2*b - a + 1/3". Descending graded-lex order,
  /// reduced fractions.
  std::string str() const;

 private:
  TermMap terms_;
};

inline ParamPoly operator*(const Rat& c, const ParamPoly& p) {
  return p.scaled(c);
}

}  // namespace darboux
