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

#include <array>
#include <map>
#include <string>
#include <vector>

#include "darboux/param_poly.hpp"
#include "darboux/rational.hpp"

namespace darboux {

/// Monomials above this total degree raise DegreeOverflowError instead of
/// being truncated. Configurable at runtime; default 16.
int max_total_degree();
void set_max_total_degree(int bound);

/// Exponent triple of x^ex y^ey z^ez.
struct Monomial {
  int x = 0;
  int y = 0;
  int z = 0;

  int degree() const { return x + y + z; }
  bool operator==(const Monomial& o) const = default;
};

/// Compares monomials in graded lexicographic order with x > y > z.
/// Returns +1 if l is greater, -1 if smaller, 0 if equal.
int grlex_cmp(const Monomial& l, const Monomial& r);

/// "Less" comparator arranged so that std::map iteration yields descending
/// graded-lex order: the leading (highest) monomial comes first.
struct GrlexDesc {
  bool operator()(const Monomial& l, const Monomial& r) const {
    return grlex_cmp(l, r) > 0;
  }
};

using Mat3 = std::array<std::array<Rat, 3>, 3>;

/// Sparse polynomial in the phase variables (x, y, z) with coefficients in
/// Q[a, b]. Terms are kept in the canonical descending graded-lex order and
/// zero coefficients are pruned eagerly, so two polynomials are equal iff
/// their term maps are identical.
class Poly {
 public:
  using TermMap = std::map<Monomial, ParamPoly, GrlexDesc>;

  Poly() = default;
  explicit Poly(const ParamPoly& c);
  explicit Poly(const Rat& c) : Poly(ParamPoly(c)) {}
  explicit Poly(long n) : Poly(ParamPoly(Rat(n))) {}

  /// x, y or z for axis 0, 1, 2.
  static Poly variable(int axis);
  static Poly term(ParamPoly c, Monomial m);

  bool is_zero() const { return terms_.empty(); }
  /// Max term degree; -1 for the zero polynomial.
  int degree() const;
  bool is_param_free() const;
  std::size_t term_count() const { return terms_.size(); }

  Poly operator-() const;
  Poly operator+(const Poly& o) const;
  Poly operator-(const Poly& o) const;
  Poly operator*(const Poly& o) const;
  Poly& operator+=(const Poly& o);
  Poly scaled(const ParamPoly& c) const;
  Poly pow(int e) const;

  bool operator==(const Poly& o) const { return terms_ == o.terms_; }
  bool operator!=(const Poly& o) const { return !(*this == o); }

  /// Formal partial derivative with respect to axis 0 (x), 1 (y) or 2 (z).
  Poly partial(int axis) const;

  /// Splits into homogeneous parts, ascending degree, empty degrees omitted.
  /// The parts sum back to the polynomial.
  std::vector<std::pair<int, Poly>> homogeneous_components() const;
  Poly homogeneous_component(int deg) const;

  /// p(Mx): substitutes each variable by the corresponding row of M applied
  /// to (x, y, z), expanded to canonical form.
  Poly compose_linear(const Mat3& m) const;

  /// Coefficient-wise substitution of the parameter symbols.
  Poly substituted_params(const ParamPoly& va, const ParamPoly& vb) const;

  /// Exact evaluation at a rational point; requires is_param_free().
  Rat eval(const std::array<Rat, 3>& at) const;

  Monomial leading_monomial() const;
  const ParamPoly& leading_coeff() const;
  /// Scales so the leading coefficient is 1. Requires a constant (parameter
  /// free) leading coefficient.
  Poly monic() const;

  const TermMap& terms() const { return terms_; }

  /// Canonical text form: descending graded-lex, reduced fractions, explicit
  /// signs, e.g. "x^2 - 2*y*z + 1/3".
  std::string str() const;

 private:
  void add_term(const Monomial& m, const ParamPoly& c);

  TermMap terms_;
};

/// Total order on polynomials for deterministic output: by degree, then by
/// leading monomials/coefficients term-wise. Returns <0, 0, >0.
int compare_canonical(const Poly& l, const Poly& r);

/// All monomials of total degree <= maxDegree in canonical descending
/// graded-lex order (the coordinate order used by coeff_vector).
std::vector<Monomial> monomial_basis(int max_degree);

/// The homogeneous slice: monomials of total degree exactly `degree`,
/// descending graded-lex.
std::vector<Monomial> homogeneous_basis(int degree);

/// Coordinates of p in the monomial_basis(degree_bound) ordering.
/// Throws DegreeOverflowError if degree(p) > degree_bound. Round-trips
/// exactly with from_coeff_vector.
std::vector<ParamPoly> coeff_vector(const Poly& p, int degree_bound);
Poly from_coeff_vector(const std::vector<ParamPoly>& coords, int degree_bound);

inline Poly operator*(const ParamPoly& c, const Poly& p) { return p.scaled(c); }
inline Poly operator*(const Rat& c, const Poly& p) {
  return p.scaled(ParamPoly(c));
}

}  // namespace darboux
