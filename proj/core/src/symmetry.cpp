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

#include "darboux/symmetry.hpp"

#include <algorithm>

#include "darboux/errors.hpp"

namespace darboux {

namespace {

Mat3 diag(long a, long b, long c) {
  Mat3 m{};
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) m[i][j] = Rat(0);
  m[0][0] = Rat(a);
  m[1][1] = Rat(b);
  m[2][2] = Rat(c);
  return m;
}

}  // namespace

GroupElement GroupElement::operator*(const GroupElement& o) const {
  GroupElement r;
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) {
      Rat sum(0);
      for (int k = 0; k < 3; ++k) sum += matrix[i][k] * o.matrix[k][j];
      r.matrix[i][j] = sum;
    }
  return r;
}

bool GroupElement::is_identity() const {
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j)
      if (matrix[i][j] != Rat(i == j ? 1 : 0)) return false;
  return true;
}

SymmetryGroup::SymmetryGroup(std::vector<GroupElement> elements)
    : elements_(std::move(elements)) {
  bool has_identity = false;
  for (const auto& e : elements_) has_identity |= e.is_identity();
  if (!has_identity) throw Error("symmetry group must contain the identity");
  for (const auto& e : elements_)
    for (const auto& f : elements_) {
      GroupElement p = e * f;
      if (std::find(elements_.begin(), elements_.end(), p) == elements_.end())
        throw Error("symmetry group is not closed under products");
    }
}

SymmetryGroup d2_group() {
  return SymmetryGroup({
      {diag(1, 1, 1)},
      {diag(-1, -1, 1)},
      {diag(-1, 1, -1)},
      {diag(1, -1, -1)},
  });
}

SymmetryGroup trivial_group() { return SymmetryGroup({{diag(1, 1, 1)}}); }

bool is_equivariant(const Field& x, const SymmetryGroup& g) {
  for (const auto& e : g.elements()) {
    for (int i = 0; i < 3; ++i) {
      // (X_i o g)(p) must equal the i-th row of g applied to X(p).
      Poly lhs = x.component(i).compose_linear(e.matrix);
      Poly rhs;
      for (int j = 0; j < 3; ++j)
        rhs += x.component(j).scaled(ParamPoly(e.matrix[i][j]));
      if (lhs != rhs) return false;
    }
  }
  return true;
}

Poly pullback(const Poly& f, const GroupElement& g) {
  return f.compose_linear(g.matrix);
}

Poly symmetrized_cofactor(const Poly& k, const SymmetryGroup& g) {
  if (k.degree() > 1)
    throw Error("cofactor symmetrization expects degree <= 1");
  Poly sum;
  for (const auto& e : g.elements()) sum += pullback(k, e);
  return sum;
}

std::pair<Poly, Poly> orbit_product(const Poly& f, const Poly& k,
                                    const Field& x, const SymmetryGroup& g) {
  if (lie_derivative(x, f) != k * f)
    throw Error("orbit_product input is not a verified pair");
  Poly prod(Rat(1));
  Poly cof;
  for (const auto& e : g.elements()) {
    prod = prod * pullback(f, e);
    cof += pullback(k, e);
  }
  return {prod, cof};
}

}  // namespace darboux
