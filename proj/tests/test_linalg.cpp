#include "doctest.h"

#include <random>

#include "darboux/linalg.hpp"

using darboux::ParamPoly;
using darboux::Rat;
using darboux::RatMatrix;
using darboux::RatRow;

TEST_SUITE_BEGIN("linalg");

namespace {

// Independent oracle: textbook Gauss-Jordan over rationals, dense, with
// plain division. Returns the kernel dimension.
int kernel_dim_oracle(RatMatrix m) {
  if (m.empty()) return 0;
  std::size_t rows = m.size(), cols = m[0].size();
  std::size_t rank = 0;
  for (std::size_t c = 0; c < cols && rank < rows; ++c) {
    std::size_t piv = rank;
    while (piv < rows && m[piv][c].is_zero()) ++piv;
    if (piv == rows) continue;
    std::swap(m[piv], m[rank]);
    Rat inv = Rat(1) / m[rank][c];
    for (auto& e : m[rank]) e = e * inv;
    for (std::size_t r = 0; r < rows; ++r) {
      if (r == rank || m[r][c].is_zero()) continue;
      Rat f = m[r][c];
      for (std::size_t k = 0; k < cols; ++k) m[r][k] = m[r][k] - f * m[rank][k];
    }
    ++rank;
  }
  return static_cast<int>(cols) - static_cast<int>(rank);
}

RatMatrix random_matrix(std::mt19937& rng, std::size_t rows, std::size_t cols) {
  RatMatrix m(rows, RatRow(cols, Rat(0)));
  for (auto& row : m)
    for (auto& e : row) {
      long num = static_cast<long>(rng() % 11) - 5;
      long den = 1 + static_cast<long>(rng() % 4);
      // sprinkle zeros to get interesting ranks
      if (rng() % 3 == 0) num = 0;
      e = Rat(num, den);
    }
  return m;
}

}  // namespace

TEST_CASE("trivial kernels") {
  RatMatrix id3 = {{Rat(1), Rat(0), Rat(0)},
                   {Rat(0), Rat(1), Rat(0)},
                   {Rat(0), Rat(0), Rat(1)}};
  CHECK(darboux::nullspace(id3).empty());

  RatMatrix zero2 = {{Rat(0), Rat(0)}, {Rat(0), Rat(0)}};
  auto basis = darboux::nullspace(zero2);
  REQUIRE(basis.size() == 2);
  CHECK(basis[0] == RatRow{Rat(1), Rat(0)});
  CHECK(basis[1] == RatRow{Rat(0), Rat(1)});
}

TEST_CASE("kernel vectors satisfy M v = 0 exactly, dimension matches oracle") {
  std::mt19937 rng(987654);
  for (int trial = 0; trial < 120; ++trial) {
    std::size_t rows = 1 + rng() % 20, cols = 1 + rng() % 20;
    RatMatrix m = random_matrix(rng, rows, cols);
    auto basis = darboux::nullspace(m);
    CHECK(static_cast<int>(basis.size()) == kernel_dim_oracle(m));
    for (const auto& v : basis) {
      for (std::size_t r = 0; r < rows; ++r) {
        Rat dot(0);
        for (std::size_t c = 0; c < cols; ++c) dot += m[r][c] * v[c];
        CHECK(dot.is_zero());
      }
    }
  }
}

TEST_CASE("kernel output is canonical (reduced, leading ones)") {
  RatMatrix m = {{Rat(1), Rat(2), Rat(3), Rat(4)}};
  auto basis = darboux::nullspace(m);
  REQUIRE(basis.size() == 3);
  for (std::size_t i = 0; i < basis.size(); ++i) {
    // leading entry 1, zero above/below in other vectors' leading slots
    std::size_t lead = 0;
    while (basis[i][lead].is_zero()) ++lead;
    CHECK(basis[i][lead] == Rat(1));
    for (std::size_t j = 0; j < basis.size(); ++j)
      if (j != i) CHECK(basis[j][lead].is_zero());
  }
}

TEST_CASE("parameter matrices specialize before elimination") {
  using darboux::ParamMatrix;
  ParamPoly a = ParamPoly::symbol_a(), b = ParamPoly::symbol_b();
  ParamMatrix m = {{a, b}, {ParamPoly(Rat(2)), ParamPoly(Rat(1))}};
  // at (a, b) = (2, 1) the rows are dependent -> one-dimensional kernel
  auto basis = darboux::nullspace(m, std::make_pair(Rat(2), Rat(1)));
  REQUIRE(basis.size() == 1);
  CHECK_THROWS_AS(darboux::nullspace(m, std::nullopt), darboux::Error);
  // constant matrices don't need a specialization
  ParamMatrix c = {{ParamPoly(Rat(1)), ParamPoly(Rat(1))}};
  CHECK(darboux::nullspace(c).size() == 1);
}

TEST_CASE("rank") {
  RatMatrix m = {{Rat(1), Rat(2)}, {Rat(2), Rat(4)}, {Rat(0), Rat(1)}};
  CHECK(darboux::rank(m) == 2);
  CHECK(darboux::rank({{Rat(0), Rat(0)}}) == 0);
}

TEST_CASE("solve_linear_combination") {
  RatRow c1 = {Rat(1), Rat(0), Rat(1)};
  RatRow c2 = {Rat(0), Rat(1), Rat(1)};
  auto sol = darboux::solve_linear_combination({c1, c2},
                                               {Rat(2), Rat(3), Rat(5)});
  REQUIRE(sol.has_value());
  CHECK((*sol)[0] == Rat(2));
  CHECK((*sol)[1] == Rat(3));
  CHECK_FALSE(darboux::solve_linear_combination({c1, c2},
                                                {Rat(1), Rat(0), Rat(0)})
                  .has_value());
  // empty column set spans only zero
  CHECK(darboux::solve_linear_combination({}, {Rat(0), Rat(0)}).has_value());
  CHECK_FALSE(darboux::solve_linear_combination({}, {Rat(1)}).has_value());
}

TEST_CASE("cubic rational spectrum") {
  using darboux::rational_cubic_spectrum;
  // (t-1)(t-2)(t+3) = t^3 - 7t + 6
  auto s = rational_cubic_spectrum(Rat(0), Rat(-7), Rat(6));
  REQUIRE(s.rational.size() == 3);
  CHECK(s.rational[0] == Rat(-3));
  CHECK(s.rational[1] == Rat(1));
  CHECK(s.rational[2] == Rat(2));
  CHECK_FALSE(s.quadratic_pair_sum.has_value());

  // (t+20)(t^2+11t-270): one rational root, irreducible quadratic
  auto l = rational_cubic_spectrum(Rat(31), Rat(-50), Rat(-5400));
  REQUIRE(l.rational.size() == 1);
  CHECK(l.rational[0] == Rat(-20));
  REQUIRE(l.quadratic_pair_sum.has_value());
  CHECK(*l.quadratic_pair_sum == Rat(-11));

  // t^3 - 2: irreducible over Q
  auto c = rational_cubic_spectrum(Rat(0), Rat(0), Rat(-2));
  CHECK(c.rational.empty());
  REQUIRE(c.cubic_triple_sum.has_value());
  CHECK(*c.cubic_triple_sum == Rat(0));

  // triple root (t-1)^3 = t^3 - 3t^2 + 3t - 1
  auto t = rational_cubic_spectrum(Rat(-3), Rat(3), Rat(-1));
  REQUIRE(t.rational.size() == 3);
  CHECK(t.rational[0] == Rat(1));
  CHECK(t.rational[2] == Rat(1));

  // rational roots with fractions: (t-1/2)(t+1/3)(t-5)
  // = t^3 - 31/6 t^2 + 2/3 t + 5/6
  auto f = rational_cubic_spectrum(Rat(-31, 6), Rat(2, 3), Rat(5, 6));
  REQUIRE(f.rational.size() == 3);
  CHECK(f.rational[0] == Rat(-1, 3));
  CHECK(f.rational[1] == Rat(1, 2));
  CHECK(f.rational[2] == Rat(5));
}

TEST_SUITE_END();
