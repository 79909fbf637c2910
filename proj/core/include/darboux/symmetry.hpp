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

#include <utility>
#include <vector>

#include "darboux/field.hpp"
#include "darboux/poly.hpp"

namespace darboux {

/// One linear symmetry, stored as an explicit 3x3 rational matrix.
struct GroupElement {
  Mat3 matrix;

  bool operator==(const GroupElement& o) const { return matrix == o.matrix; }
  GroupElement operator*(const GroupElement& o) const;
  bool is_identity() const;
};

/// A finite matrix group, listed exhaustively (these groups are small
/// enough that enumeration beats generator bookkeeping).
class SymmetryGroup {
 public:
  explicit SymmetryGroup(std::vector<GroupElement> elements);

  const std::vector<GroupElement>& elements() const { return elements_; }
  std::size_t size() const { return elements_.size(); }

 private:
  std::vector<GroupElement> elements_;
};

/// The four diagonal sign matrices with an even number of -1 entries:
/// diag(1,1,1), diag(-1,-1,1), diag(-1,1,-1), diag(1,-1,-1).
SymmetryGroup d2_group();

/// The trivial group {identity}.
SymmetryGroup trivial_group();

/// True iff X(gx) = g X(x) holds as a polynomial identity for every g.
bool is_equivariant(const Field& x, const SymmetryGroup& g);

/// f composed with g, expanded to canonical form.
Poly pullback(const Poly& f, const GroupElement& g);

/// sum_{g in G} k(gx). For a degree-<=1 cofactor and the sign-matrix group
/// this collapses to a constant: the linear terms cancel in +- pairs.
Poly symmetrized_cofactor(const Poly& k, const SymmetryGroup& g);

/// Given a verified pair L_X f = k f of an equivariant field, returns
/// (prod_g f(gx), sum_g k(gx)) -- again a verified pair, now with constant
/// cofactor. Throws if the input pair does not verify.
std::pair<Poly, Poly> orbit_product(const Poly& f, const Poly& k,
                                    const Field& x, const SymmetryGroup& g);

}  // namespace darboux
