#include "doctest.h"

#include <random>

#include "darboux/field.hpp"

using darboux::Field;
using darboux::FieldSign;
using darboux::Monomial;
using darboux::ParamPoly;
using darboux::Poly;
using darboux::Rat;

TEST_SUITE_BEGIN("field");

namespace {

const Poly x = Poly::variable(0);
const Poly y = Poly::variable(1);
const Poly z = Poly::variable(2);
const ParamPoly a = ParamPoly::symbol_a();
const ParamPoly b = ParamPoly::symbol_b();

Field with_a(const Field& f, const Rat& v) {
  return darboux::substitute_params(f, ParamPoly(v), ParamPoly::symbol_b());
}

Poly random_poly(std::mt19937& rng) {
  Poly p;
  int terms = static_cast<int>(rng() % 5);
  for (int t = 0; t < terms; ++t) {
    int ex = static_cast<int>(rng() % 4);
    int ey = static_cast<int>(rng() % (4 - ex));
    int ez = static_cast<int>(rng() % (4 - ex - ey));
    long c = static_cast<long>(rng() % 19) - 9;
    p += Poly::term(ParamPoly(Rat(c)), Monomial{ex, ey, ez});
  }
  return p;
}

}  // namespace

TEST_CASE("builtin family") {
  Field neg = darboux::d2_field(FieldSign::negative);
  CHECK(neg.component(0) == a * x + y * z);
  CHECK(neg.component(1) == b * y + x * z);
  CHECK(neg.component(2) == z - x * y);
  CHECK(neg.is_builtin_d2());
  CHECK(neg.parameters() == "ab");

  Field pos = darboux::d2_field(FieldSign::positive);
  CHECK(pos.component(2) == z + x * y);
  CHECK(pos.component(0) == a * x + y * z);
}

TEST_CASE("lie derivative matches the catalog cofactors") {
  // a = 1, b free: x^2 + z^2 has cofactor 2
  Field neg_a1 = with_a(darboux::d2_field(FieldSign::negative), Rat(1));
  CHECK(darboux::lie_derivative(neg_a1, x * x + z * z) ==
        Rat(2) * (x * x + z * z));

  CHECK(darboux::lie_derivative(neg_a1, Poly(Rat(5))).is_zero());

  // a = b symbolic: x^2 - y^2 has cofactor 2a
  Field diag = darboux::substitute_params(
      darboux::d2_field(FieldSign::negative), a, a);
  CHECK(darboux::lie_derivative(diag, x * x - y * y) ==
        (Rat(2) * a) * (x * x - y * y));
}

TEST_CASE("specialize") {
  Field f = darboux::d2_field(FieldSign::negative);
  Field s = darboux::specialize(f, {{'a', Rat(1)}, {'b', Rat(-2)}});
  CHECK(s.component(0) == x + y * z);
  CHECK(s.component(1) == Rat(-2) * y + x * z);
  CHECK(s.component(2) == z - x * y);
  CHECK(s.is_param_free());
  CHECK(s.is_builtin_d2());

  Field zero = darboux::specialize(f, {{'a', Rat(0)}, {'b', Rat(0)}});
  CHECK(zero.component(0) == y * z);
  CHECK(zero.component(1) == x * z);

  Field same = darboux::specialize(f, {{'a', Rat(3)}, {'b', Rat(3)}});
  CHECK(same.component(0) == Rat(3) * x + y * z);
  CHECK(same.component(1) == Rat(3) * y + x * z);

  CHECK_THROWS_AS(darboux::specialize(f, {{'a', Rat(1)}}), darboux::Error);
}

TEST_CASE("jacobian") {
  Field f = darboux::d2_field(FieldSign::negative);
  auto j = darboux::jacobian(f);
  // formal entries
  CHECK(j[0][0] == Poly(a));
  CHECK(j[0][2] == y);  // d(ax + yz)/dz
  CHECK(j[2][0] == -y);
  CHECK(j[2][2] == Poly(Rat(1)));
  // evaluated at the origin: diag(a, b, 1)
  std::array<Rat, 3> origin{Rat(0), Rat(0), Rat(0)};
  Field s = darboux::specialize(f, {{'a', Rat(5)}, {'b', Rat(7)}});
  auto js = darboux::jacobian(s);
  CHECK(js[0][0].eval(origin) == Rat(5));
  CHECK(js[1][1].eval(origin) == Rat(7));
  CHECK(js[2][2].eval(origin) == Rat(1));
  CHECK(js[0][1].eval(origin) == Rat(0));

  Field zero({Poly(), Poly(), Poly()});
  auto jz = darboux::jacobian(zero);
  for (int i = 0; i < 3; ++i)
    for (int k = 0; k < 3; ++k) CHECK(jz[i][k].is_zero());
}

TEST_CASE("linear part") {
  Field f = darboux::d2_field(FieldSign::negative);
  CHECK(f.linear_part_is_diagonal());
  auto lin = f.linear_matrix();
  CHECK(lin[0][0] == a);
  CHECK(lin[1][1] == b);
  CHECK(lin[2][2] == ParamPoly(Rat(1)));
  CHECK(f.homogeneous_part(2).component(0) == y * z);

  Field rotated({y, -x, z});
  CHECK_FALSE(rotated.linear_part_is_diagonal());
}

TEST_CASE("lie derivative is linear") {
  std::mt19937 rng(5150);
  Field f = darboux::specialize(darboux::d2_field(FieldSign::negative),
                                {{'a', Rat(2)}, {'b', Rat(-3)}});
  for (int i = 0; i < 200; ++i) {
    Poly p = random_poly(rng), q = random_poly(rng);
    Rat alpha(static_cast<long>(rng() % 9) - 4);
    Rat beta(static_cast<long>(rng() % 9) - 4);
    CHECK(darboux::lie_derivative(f, alpha * p + beta * q) ==
          alpha * darboux::lie_derivative(f, p) +
              beta * darboux::lie_derivative(f, q));
  }
}

TEST_CASE("lie derivative satisfies Leibniz") {
  std::mt19937 rng(31337);
  Field f = darboux::specialize(darboux::d2_field(FieldSign::negative),
                                {{'a', Rat(1, 2)}, {'b', Rat(5)}});
  for (int i = 0; i < 200; ++i) {
    Poly p = random_poly(rng), q = random_poly(rng);
    CHECK(darboux::lie_derivative(f, p * q) ==
          p * darboux::lie_derivative(f, q) +
              q * darboux::lie_derivative(f, p));
  }
}

TEST_CASE("quadratic fields raise degree by at most one") {
  std::mt19937 rng(99);
  Field f = darboux::specialize(darboux::d2_field(FieldSign::negative),
                                {{'a', Rat(4)}, {'b', Rat(-1)}});
  for (int i = 0; i < 200; ++i) {
    Poly p = random_poly(rng);
    if (p.is_zero()) continue;
    Poly lp = darboux::lie_derivative(f, p);
    if (!lp.is_zero()) CHECK(lp.degree() <= p.degree() + 1);
  }
}

TEST_SUITE_END();
