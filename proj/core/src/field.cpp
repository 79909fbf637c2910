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

#include "darboux/field.hpp"

#include "darboux/errors.hpp"

namespace darboux {

int Field::degree() const {
  int d = -1;
  for (const auto& c : comps_) d = std::max(d, c.degree());
  return d;
}

bool Field::is_param_free() const {
  for (const auto& c : comps_)
    if (!c.is_param_free()) return false;
  return true;
}

bool Field::uses_a() const {
  for (const auto& c : comps_)
    for (const auto& [m, coeff] : c.terms())
      if (coeff.uses_a()) return true;
  return false;
}

bool Field::uses_b() const {
  for (const auto& c : comps_)
    for (const auto& [m, coeff] : c.terms())
      if (coeff.uses_b()) return true;
  return false;
}

std::string Field::parameters() const {
  std::string s;
  if (uses_a()) s += 'a';
  if (uses_b()) s += 'b';
  return s;
}

std::array<std::array<ParamPoly, 3>, 3> Field::linear_matrix() const {
  std::array<std::array<ParamPoly, 3>, 3> m;
  const Monomial vars[3] = {{1, 0, 0}, {0, 1, 0}, {0, 0, 1}};
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) {
      auto it = comps_[i].terms().find(vars[j]);
      if (it != comps_[i].terms().end()) m[i][j] = it->second;
    }
  return m;
}

bool Field::linear_part_is_diagonal() const {
  auto m = linear_matrix();
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j)
      if (i != j && !m[i][j].is_zero()) return false;
  return true;
}

Field Field::homogeneous_part(int deg) const {
  std::array<Poly, 3> parts;
  for (int i = 0; i < 3; ++i) parts[i] = comps_[i].homogeneous_component(deg);
  return Field(parts);
}

Field d2_field(FieldSign sign) {
  const Poly x = Poly::variable(0), y = Poly::variable(1), z = Poly::variable(2);
  const ParamPoly a = ParamPoly::symbol_a(), b = ParamPoly::symbol_b();
  Poly xy = x * y;
  Field f({a * x + y * z,  //
           b * y + x * z,  //
           sign == FieldSign::negative ? z - xy : z + xy});
  f.builtin_sign_ = sign;
  return f;
}

Poly lie_derivative(const Field& x, const Poly& f) {
  Poly out;
  for (int i = 0; i < 3; ++i) out += x.component(i) * f.partial(i);
  return out;
}

Field specialize(const Field& x, const std::map<char, Rat>& values) {
  auto lookup = [&](char sym, bool used) -> ParamPoly {
    auto it = values.find(sym);
    if (it != values.end()) return ParamPoly(it->second);
    if (used)
      throw Error(std::string("missing value for parameter '") + sym + "'");
    return sym == 'a' ? ParamPoly::symbol_a() : ParamPoly::symbol_b();
  };
  Field out = substitute_params(x, lookup('a', x.uses_a()), lookup('b', x.uses_b()));
  return out;
}

Field substitute_params(const Field& x, const ParamPoly& va,
                        const ParamPoly& vb) {
  std::array<Poly, 3> comps;
  for (int i = 0; i < 3; ++i)
    comps[i] = x.component(i).substituted_params(va, vb);
  Field out(comps);
  // Substitution never touches the quadratic part, so the builtin tag and
  // the structural facts that come with it survive.
  out.builtin_sign_ = x.builtin_sign_;
  return out;
}

std::array<std::array<Poly, 3>, 3> jacobian(const Field& x) {
  std::array<std::array<Poly, 3>, 3> j;
  for (int i = 0; i < 3; ++i)
    for (int k = 0; k < 3; ++k) j[i][k] = x.component(i).partial(k);
  return j;
}

std::string render_field(const Field& x) {
  return "dx = " + x.component(0).str() + ";\n" +  //
         "dy = " + x.component(1).str() + ";\n" +  //
         "dz = " + x.component(2).str() + ";\n";
}

}  // namespace darboux
