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

#include <optional>
#include <utility>
#include <vector>

#include "darboux/param_poly.hpp"
#include "darboux/rational.hpp"

namespace darboux {

using RatRow = std::vector<Rat>;
using RatMatrix = std::vector<RatRow>;
using ParamMatrix = std::vector<std::vector<ParamPoly>>;

/// Exact kernel basis of M (rows x cols), computed by fraction-free
/// elimination: rows are cleared to integers and updated by two-row
/// cross-multiplication with content normalization, so no fractions appear
/// until back-substitution. The returned basis is in reduced row echelon
/// form over the given column order (deterministic: leading coordinate of
/// each vector is 1, earlier coordinates zero), empty for a trivial kernel.
std::vector<RatRow> nullspace(const RatMatrix& m);

/// Same, for matrices over Q[a, b]. Entries that are non-constant in the
/// parameters require a specialization (a, b); constant matrices may omit it.
std::vector<RatRow> nullspace(
    const ParamMatrix& m,
    const std::optional<std::pair<Rat, Rat>>& specialization = std::nullopt);

int rank(const RatMatrix& m);

/// Solves sum_i columns[i]*x[i] = target exactly; nullopt when target is
/// outside the span.
std::optional<RatRow> solve_linear_combination(
    const std::vector<RatRow>& columns, const RatRow& target);

/// Rational spectrum data of a monic cubic t^3 + c2 t^2 + c1 t + c0 over Q.
/// `rational` lists rational roots with multiplicity. When the residual
/// factor is an irreducible quadratic, quadratic_pair_sum holds the (always
/// rational) sum of its conjugate root pair; when the cubic itself is
/// irreducible, cubic_triple_sum = -c2 is the sum of the Galois orbit.
struct CubicSpectrum {
  std::vector<Rat> rational;
  std::optional<Rat> quadratic_pair_sum;
  std::optional<Rat> cubic_triple_sum;
};

CubicSpectrum rational_cubic_spectrum(const Rat& c2, const Rat& c1,
                                      const Rat& c0);

}  // namespace darboux
