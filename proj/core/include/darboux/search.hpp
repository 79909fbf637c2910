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
#include <optional>
#include <string>
#include <vector>

#include "darboux/field.hpp"
#include "darboux/linalg.hpp"
#include "darboux/poly.hpp"

namespace darboux {

/// An invariant-surface polynomial f together with its cofactor k
/// (L_X f = k f holds exactly), plus search provenance. A zero cofactor
/// means f is a first integral.
struct DarbouxResult {
  Poly f;                          // normalized: leading coefficient 1
  Poly cofactor;                   // constant in the main pipeline
  int degree = 0;
  std::string parameter_condition = "none";  // "a=1", "b=1", "a=b", "none"
  bool generator = false;
  bool first_integral = false;
};

/// Minimal generating description of a found set: no generator is a product
/// of others nor a same-cofactor combination of others; `closure_notes`
/// records how each discarded member decomposes.
struct GeneratorSet {
  std::vector<DarbouxResult> generators;
  std::vector<std::string> closure_notes;
};

/// The two linear maps the degree-graded analysis is built on: the
/// degree-preserving action of the linear part of the field on each
/// homogeneous slice, and the degree-raising action of its quadratic part.
struct CascadeOperators {
  Field linear;
  Field quadratic;

  static CascadeOperators split(const Field& x);

  /// Matrix of the slice-preserving operator on homogeneous degree j
  /// (rows and columns over homogeneous_basis(j)).
  ParamMatrix a_matrix(int j) const;
  /// Matrix of the degree-raising operator from slice j to slice j + 1.
  ParamMatrix n_matrix(int j) const;
};

/// Matrix of the degree-raising operator of X from the degree-j slice to the
/// degree-(j+1) slice, in the canonical monomial bases.
ParamMatrix build_N_matrix(const Field& x, int j);

/// Every constant cofactor of an invariant polynomial of degree <=
/// degree_bound lies in this set: on the lowest nonvanishing homogeneous
/// layer the defining equation forces the cofactor to be an eigenvalue of
/// the (diagonal) slice operator, i.e. of the form l1*e1 + l2*e2 + l3*e3
/// over exponent triples of total degree <= degree_bound. Requires a
/// diagonal linear part (possibly symbolic).
std::vector<ParamPoly> candidate_cofactors(const Field& x, int degree_bound);

/// Specialized candidate set for a parameter-free field. Falls back to the
/// rational eigenvalues of the slice operators (computed exactly from the
/// linear part's characteristic cubic) when the linear part is not diagonal.
std::vector<Rat> candidate_cofactors_specialized(const Field& x,
                                                 int degree_bound);

/// All solutions f of L_X f = c0 f whose top homogeneous layer has degree
/// exactly d, obtained from one stacked exact linear system over the whole
/// degree-<=d coefficient vector. Returns a canonical reduced basis of
/// normalized representatives; empty when there is no solution. For the
/// builtin family only even d can yield solutions.
std::vector<Poly> cascade_solve(const Field& x, int d, const Rat& c0,
                                const std::map<char, Rat>& params = {});

/// True iff L_X f - k f is identically zero. Works with free parameter
/// symbols: the identity must hold in Q[a,b][x,y,z].
bool verify_darboux(const Field& x, const Poly& f, const Poly& k);

/// If L_X f = k f for some constant-in-(x,y,z) cofactor k, returns k
/// (possibly parameter dependent); nullopt otherwise. Requires f with a
/// parameter-free leading coefficient.
std::optional<Poly> extract_constant_cofactor(const Field& x, const Poly& f);

/// The full search: for every admissible top degree d <= degree_bound and
/// every candidate cofactor, solves the stacked system, deduplicates up to
/// scalar multiples, verifies each result exactly, and marks generators.
/// Results are sorted canonically (degree, leading monomial, cofactor).
std::vector<DarbouxResult> find_darboux(const Field& x, int degree_bound,
                                        const std::map<char, Rat>& params = {});

/// Marks each result as generator or derived: a result is derived when it
/// is an exact linear combination of products of lower (already kept)
/// generators whose cofactors add up to its own. Returns the generator set
/// with decomposition notes; also updates the `generator` flags in place.
GeneratorSet reduce_to_generators(std::vector<DarbouxResult>& results,
                                  const Field& x);

/// One row of the symbolic case analysis produced by parameter_sweep.
struct SweepRow {
  std::string condition;  // "none", "a=1", "b=1", "a=b" or "unclassified"
  Poly polynomial;
  Poly cofactor;     // symbolic, under the stated condition
  bool verified = false;        // exact identity re-checked symbolically
  bool first_integral = false;  // cofactor vanishes on every support point
  int support_count = 0;
};

/// Runs the search at every grid point, pools the generator polynomials,
/// matches each one's support against the candidate loci {all, a=1, b=1,
/// a=b} (most general first) and re-verifies the winning condition
/// symbolically, with the cofactor extracted by exact division. Loci that
/// match no candidate are emitted as "unclassified", never guessed.
std::vector<SweepRow> parameter_sweep(
    const Field& x, int degree_bound,
    const std::vector<std::pair<Rat, Rat>>& grid);

}  // namespace darboux
