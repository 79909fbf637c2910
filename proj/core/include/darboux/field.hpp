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
#include <optional>
#include <string>

#include "darboux/poly.hpp"

namespace darboux {

/// Sign of the quadratic term in the third component of the builtin family.
enum class FieldSign { negative, positive };

/// Polynomial vector field on R^3: one component polynomial per coordinate,
/// possibly depending on the parameter symbols a, b.
class Field {
 public:
  Field() = default;
  explicit Field(std::array<Poly, 3> components)
      : comps_(std::move(components)) {}

  const Poly& component(int axis) const { return comps_.at(axis); }
  const std::array<Poly, 3>& components() const { return comps_; }

  int degree() const;
  bool is_param_free() const;
  bool uses_a() const;
  bool uses_b() const;
  /// Parameter symbols appearing in the components, in order.
  std::string parameters() const;

  bool operator==(const Field& o) const { return comps_ == o.comps_; }

  /// 3x3 coefficient matrix of the degree-1 part.
  std::array<std::array<ParamPoly, 3>, 3> linear_matrix() const;
  bool linear_part_is_diagonal() const;
  /// Components of the given homogeneous degree only.
  Field homogeneous_part(int deg) const;

  /// Marks fields produced by d2_field; lets the search apply the
  /// even-degree restriction that is specific to that family.
  bool is_builtin_d2() const { return builtin_sign_.has_value(); }
  std::optional<FieldSign> builtin_sign() const { return builtin_sign_; }

 private:
  friend Field d2_field(FieldSign sign);
  friend Field substitute_params(const Field& x, const ParamPoly& va,
                                 const ParamPoly& vb);

  std::array<Poly, 3> comps_;
  std::optional<FieldSign> builtin_sign_;
};

/// The builtin quadratic family (a x + y z, b y + x z, z -+ x y) with
/// symbolic parameters a, b. The negative sign selects the third component
/// z - x y.
Field d2_field(FieldSign sign);

/// Lie derivative of f along X: sum_i X_i * df/dx_i, exact.
Poly lie_derivative(const Field& x, const Poly& f);

/// Evaluates the parameters; `values` must cover every symbol used.
Field specialize(const Field& x, const std::map<char, Rat>& values);

/// Coefficient-wise parameter substitution (used for symbolic loci like
/// b := a).
Field substitute_params(const Field& x, const ParamPoly& va,
                        const ParamPoly& vb);

/// Entry (i, j) = dX_i/dx_j, kept symbolic.
std::array<std::array<Poly, 3>, 3> jacobian(const Field& x);

/// Canonical text form "dx = ...\ndy = ...\ndz = ...". Round-trips through
/// parse_field.
std::string render_field(const Field& x);

}  // namespace darboux
