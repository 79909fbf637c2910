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

#include "darboux/linalg.hpp"

#include <gmpxx.h>

#include <algorithm>
#include <cmath>
#include <cstddef>

#include "darboux/errors.hpp"

namespace darboux {

namespace {

struct Echelon {
  std::vector<std::vector<mpz_class>> rows;  // echelon rows, integer entries
  std::vector<std::pair<std::size_t, std::size_t>> pivots;  // (col, row index)
  std::size_t cols = 0;
};

// Clears a rational row to integers by scaling with the lcm of denominators,
// then strips the gcd content. Row scaling never changes the kernel.
std::vector<mpz_class> integer_row(const RatRow& row) {
  mpz_class lcm_den(1);
  for (const Rat& v : row) {
    if (v.is_zero()) continue;
    mpz_class den = v.denominator();
    mpz_lcm(lcm_den.get_mpz_t(), lcm_den.get_mpz_t(), den.get_mpz_t());
  }
  std::vector<mpz_class> out(row.size());
  mpz_class content(0);
  for (std::size_t i = 0; i < row.size(); ++i) {
    if (row[i].is_zero()) continue;
    out[i] = row[i].numerator() * (lcm_den / row[i].denominator());
    mpz_gcd(content.get_mpz_t(), content.get_mpz_t(), out[i].get_mpz_t());
  }
  if (content > 1)
    for (auto& v : out)
      if (v != 0) v /= content;
  return out;
}

void strip_content(std::vector<mpz_class>& row) {
  mpz_class content(0);
  for (const auto& v : row) {
    if (v == 0) continue;
    mpz_gcd(content.get_mpz_t(), content.get_mpz_t(), v.get_mpz_t());
    if (content == 1) return;
  }
  if (content > 1)
    for (auto& v : row)
      if (v != 0) v /= content;
}

std::size_t nonzero_count(const std::vector<mpz_class>& row) {
  std::size_t n = 0;
  for (const auto& v : row)
    if (v != 0) ++n;
  return n;
}

// Forward elimination to row echelon form. Fraction-free: the update is
// row_i = row_i * p - row_pivot * m with integer entries throughout, and
// each updated row has its content stripped to keep growth in check. Rows
// untouched by a pivot column are skipped, which preserves the sparsity of
// the graded cascade matrices.
Echelon eliminate(const RatMatrix& m) {
  Echelon e;
  if (m.empty()) return e;
  e.cols = m[0].size();
  for (const auto& row : m) {
    if (row.size() != e.cols) throw Error("ragged matrix");
    e.rows.push_back(integer_row(row));
  }

  std::vector<bool> used(e.rows.size(), false);
  for (std::size_t col = 0; col < e.cols; ++col) {
    std::size_t best = e.rows.size();
    std::size_t best_nnz = 0;
    for (std::size_t i = 0; i < e.rows.size(); ++i) {
      if (used[i] || e.rows[i][col] == 0) continue;
      std::size_t nnz = nonzero_count(e.rows[i]);
      if (best == e.rows.size() || nnz < best_nnz) {
        best = i;
        best_nnz = nnz;
      }
    }
    if (best == e.rows.size()) continue;  // free column
    used[best] = true;
    e.pivots.emplace_back(col, best);
    const auto& prow = e.rows[best];
    const mpz_class p = prow[col];
    for (std::size_t i = 0; i < e.rows.size(); ++i) {
      if (used[i] || e.rows[i][col] == 0) continue;
      auto& row = e.rows[i];
      const mpz_class mult = row[col];
      for (std::size_t k = col; k < e.cols; ++k) {
        row[k] = row[k] * p - prow[k] * mult;
      }
      strip_content(row);
    }
  }
  return e;
}

RatRow normalize_leading(RatRow v) {
  for (const Rat& c : v) {
    if (!c.is_zero()) {
      Rat inv = Rat(1) / c;
      for (auto& x : v) x = x * inv;
      return v;
    }
  }
  return v;
}

}  // namespace

std::vector<RatRow> nullspace(const RatMatrix& m) {
  if (m.empty()) return {};
  Echelon e = eliminate(m);
  std::vector<bool> is_pivot(e.cols, false);
  for (const auto& [col, row] : e.pivots) is_pivot[col] = true;

  // Pivots sorted by column so back-substitution runs right to left.
  auto pivots = e.pivots;
  std::sort(pivots.begin(), pivots.end());

  std::vector<RatRow> basis;
  for (std::size_t fc = 0; fc < e.cols; ++fc) {
    if (is_pivot[fc]) continue;
    RatRow v(e.cols, Rat(0));
    v[fc] = Rat(1);
    for (auto it = pivots.rbegin(); it != pivots.rend(); ++it) {
      const auto& [pc, pr] = *it;
      if (pc > fc) continue;  // columns beyond fc are free-zero or pivots already set
      const auto& row = e.rows[pr];
      Rat acc(0);
      for (std::size_t k = pc + 1; k < e.cols; ++k) {
        if (row[k] == 0 || v[k].is_zero()) continue;
        acc += Rat(mpq_class(row[k])) * v[k];
      }
      v[pc] = -acc / Rat(mpq_class(row[pc]));
    }
    basis.push_back(std::move(v));
  }

  // Reduce the basis itself to RREF over the same column order so output is
  // canonical regardless of pivot choices above.
  for (std::size_t i = 0; i < basis.size(); ++i) {
    basis[i] = normalize_leading(basis[i]);
    std::size_t lead = 0;
    while (lead < e.cols && basis[i][lead].is_zero()) ++lead;
    for (std::size_t j = 0; j < basis.size(); ++j) {
      if (j == i || lead == e.cols) continue;
      if (basis[j][lead].is_zero()) continue;
      Rat f = basis[j][lead];
      for (std::size_t k = 0; k < e.cols; ++k)
        basis[j][k] = basis[j][k] - f * basis[i][k];
    }
  }
  std::sort(basis.begin(), basis.end(), [&](const RatRow& a, const RatRow& b) {
    for (std::size_t k = 0; k < a.size(); ++k) {
      bool az = a[k].is_zero(), bz = b[k].is_zero();
      if (az != bz) return !az;  // earlier leading coordinate first
      if (!az && a[k] != b[k]) return a[k] < b[k];
    }
    return false;
  });
  return basis;
}

std::vector<RatRow> nullspace(
    const ParamMatrix& m,
    const std::optional<std::pair<Rat, Rat>>& specialization) {
  RatMatrix r(m.size());
  for (std::size_t i = 0; i < m.size(); ++i) {
    r[i].reserve(m[i].size());
    for (const ParamPoly& e : m[i]) {
      if (e.is_constant()) {
        r[i].push_back(e.constant_value());
      } else if (specialization) {
        r[i].push_back(e.eval(specialization->first, specialization->second));
      } else {
        throw Error(
            "matrix entries depend on parameters; a specialization is "
            "required");
      }
    }
  }
  return nullspace(r);
}

int rank(const RatMatrix& m) {
  if (m.empty()) return 0;
  return static_cast<int>(eliminate(m).pivots.size());
}

std::optional<RatRow> solve_linear_combination(
    const std::vector<RatRow>& columns, const RatRow& target) {
  if (columns.empty()) {
    for (const Rat& v : target)
      if (!v.is_zero()) return std::nullopt;
    return RatRow{};
  }
  const std::size_t n = target.size();
  for (const auto& c : columns)
    if (c.size() != n) throw Error("column length mismatch");

  // Kernel of [columns | -target]: any kernel vector with a nonzero last
  // coordinate yields the combination after rescaling.
  RatMatrix m(n, RatRow(columns.size() + 1, Rat(0)));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < columns.size(); ++j) m[i][j] = columns[j][i];
    m[i][columns.size()] = -target[i];
  }
  for (const auto& v : nullspace(m)) {
    const Rat& last = v.back();
    if (last.is_zero()) continue;
    RatRow coeffs(columns.size());
    for (std::size_t j = 0; j < columns.size(); ++j) coeffs[j] = v[j] / last;
    return coeffs;
  }
  return std::nullopt;
}

namespace {

// Exact rational roots of a monic quadratic t^2 + p t + q via the square
// test on the discriminant.
std::vector<Rat> rational_quadratic_roots(const Rat& p, const Rat& q) {
  Rat disc = p * p - Rat(4) * q;
  if (disc.sign() < 0) return {};
  mpz_class num = disc.numerator(), den = disc.denominator();
  if (mpz_perfect_square_p(num.get_mpz_t()) == 0 ||
      mpz_perfect_square_p(den.get_mpz_t()) == 0)
    return {};
  mpz_class snum, sden;
  mpz_sqrt(snum.get_mpz_t(), num.get_mpz_t());
  mpz_sqrt(sden.get_mpz_t(), den.get_mpz_t());
  Rat root(mpq_class(mpq_class(snum) / mpq_class(sden)));
  Rat half(1, 2);
  return {(-p + root) * half, (-p - root) * half};
}

Rat eval_cubic(const Rat& c2, const Rat& c1, const Rat& c0, const Rat& t) {
  return ((t + c2) * t + c1) * t + c0;
}

// Reconstructs a rational from a double by continued fractions, bounded
// denominator. Candidates are verified exactly by the caller.
std::optional<Rat> reconstruct_rational(double x, long max_den) {
  if (!std::isfinite(x)) return std::nullopt;
  double val = x;
  long p0 = 0, q0 = 1, p1 = 1, q1 = 0;
  for (int iter = 0; iter < 64; ++iter) {
    double fl = std::floor(val);
    if (fl > 9e17 || fl < -9e17) return std::nullopt;
    long a = static_cast<long>(fl);
    long p2 = a * p1 + p0, q2 = a * q1 + q0;
    if (q2 > max_den || q2 < 0) break;
    p0 = p1; q0 = q1; p1 = p2; q1 = q2;
    double frac = val - fl;
    if (frac < 1e-14) break;
    val = 1.0 / frac;
  }
  if (q1 <= 0) return std::nullopt;
  return Rat(p1, q1);
}

}  // namespace

CubicSpectrum rational_cubic_spectrum(const Rat& c2, const Rat& c1,
                                      const Rat& c0) {
  CubicSpectrum out;
  Rat p2 = c2, p1 = c1, p0 = c0;

  // Pull out rational roots one at a time, deflating exactly.
  while (true) {
    std::optional<Rat> root;
    if (p0.is_zero()) {
      root = Rat(0);
    } else {
      // Numeric roots of the cubic, then exact verification of a rational
      // reconstruction. Rational roots p/q of the integer-cleared cubic have
      // bounded q, so the continued-fraction bound below is generous.
      double a2 = p2.to_double(), a1 = p1.to_double(), a0 = p0.to_double();
      std::vector<double> guesses;
      // Depressed-cubic closed form for the real root(s).
      double sh = a2 / 3.0;
      double pp = a1 - a2 * a2 / 3.0;
      double qq = 2.0 * a2 * a2 * a2 / 27.0 - a2 * a1 / 3.0 + a0;
      double disc = qq * qq / 4.0 + pp * pp * pp / 27.0;
      if (disc >= 0) {
        double s = std::sqrt(disc);
        double u = std::cbrt(-qq / 2.0 + s), v = std::cbrt(-qq / 2.0 - s);
        guesses.push_back(u + v - sh);
      } else {
        double r = std::sqrt(-pp * pp * pp / 27.0);
        double phi = std::acos(-qq / (2.0 * r));
        double mag = 2.0 * std::sqrt(-pp / 3.0);
        for (int k = 0; k < 3; ++k)
          guesses.push_back(mag * std::cos((phi + 2.0 * M_PI * k) / 3.0) - sh);
      }
      for (double g : guesses) {
        // Newton polish for sharper reconstruction.
        for (int it = 0; it < 30; ++it) {
          double f = ((g + a2) * g + a1) * g + a0;
          double df = (3.0 * g + 2.0 * a2) * g + a1;
          if (df == 0.0) break;
          double step = f / df;
          g -= step;
          if (std::abs(step) < 1e-15 * (1.0 + std::abs(g))) break;
        }
        auto cand = reconstruct_rational(g, 1000000000L);
        if (cand && eval_cubic(p2, p1, p0, *cand).is_zero()) {
          root = cand;
          break;
        }
      }
    }
    if (!root) break;
    out.rational.push_back(*root);
    // Exact synthetic division by (t - root).
    Rat b1 = p2 + *root;
    Rat b0 = p1 + *root * b1;
    // Remaining factor is the quadratic t^2 + b1 t + b0.
    auto qroots = rational_quadratic_roots(b1, b0);
    if (!qroots.empty()) {
      out.rational.push_back(qroots[0]);
      out.rational.push_back(qroots[1]);
    } else {
      out.quadratic_pair_sum = -b1;
    }
    std::sort(out.rational.begin(), out.rational.end());
    return out;
  }

  out.cubic_triple_sum = -c2;
  return out;
}

}  // namespace darboux
