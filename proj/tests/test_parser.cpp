#include "doctest.h"

#include "darboux/field.hpp"
#include "darboux/parser.hpp"

using darboux::Field;
using darboux::FieldSign;
using darboux::ParamPoly;
using darboux::ParseError;
using darboux::Poly;
using darboux::Rat;

TEST_SUITE_BEGIN("parser");

namespace {
const Poly x = Poly::variable(0);
const Poly y = Poly::variable(1);
const Poly z = Poly::variable(2);
}  // namespace

TEST_CASE("builtin field text") {
  Field f = darboux::parse_field(
      "dx = a*x + y*z; dy = b*y + x*z; dz = z - x*y;");
  CHECK(f == darboux::d2_field(FieldSign::negative));
}

TEST_CASE("zero field and expansion") {
  Field zero = darboux::parse_field("dx = 0; dy = 0; dz = 0;");
  for (int i = 0; i < 3; ++i) CHECK(zero.component(i).is_zero());

  Field sq = darboux::parse_field("dx = (x+y)^2; dy = 0; dz = 0;");
  CHECK(sq.component(0) == x * x + Rat(2) * (x * y) + y * y);
}

TEST_CASE("rational literals") {
  Poly p = darboux::parse_polynomial("3/4*x - 2*y + 1/2");
  CHECK(p == Rat(3, 4) * x - Rat(2) * y + Poly(Rat(1, 2)));
  CHECK(darboux::parse_polynomial("-x^2 + 5") == -(x * x) + Poly(Rat(5)));
  CHECK(darboux::parse_polynomial("2*a") == Poly(Rat(2) * ParamPoly::symbol_a()));
}

TEST_CASE("param pre-specialization lines") {
  Field f = darboux::parse_field(
      "param a = 1; param b = -2;\n"
      "dx = a*x + y*z; dy = b*y + x*z; dz = z - x*y;");
  CHECK(f.is_param_free());
  CHECK(f.component(0) == x + y * z);
  CHECK(f.component(1) == Rat(-2) * y + x * z);

  Field g = darboux::parse_field(
      "param a = 2/3;\ndx = a*x; dy = y; dz = z;");
  CHECK(g.component(0) == Rat(2, 3) * x);
}

TEST_CASE("errors carry position and reason") {
  CHECK_THROWS_AS(darboux::parse_field("dx = x"), ParseError);
  CHECK_THROWS_AS(darboux::parse_field("dx = x; dz = y; dy = z;"), ParseError);
  CHECK_THROWS_AS(darboux::parse_polynomial("x / y"), ParseError);
  CHECK_THROWS_AS(darboux::parse_polynomial("(x+1)/2"), ParseError);
  CHECK_THROWS_AS(darboux::parse_polynomial("1.5*x"), ParseError);
  CHECK_THROWS_AS(darboux::parse_polynomial("w + 1"), ParseError);
  CHECK_THROWS_AS(darboux::parse_polynomial("x^y"), ParseError);
  CHECK_THROWS_AS(darboux::parse_polynomial("x +"), ParseError);
  CHECK_THROWS_AS(darboux::parse_polynomial(""), ParseError);
  CHECK_THROWS_AS(darboux::parse_polynomial("x 1"), ParseError);

  try {
    darboux::parse_field("dx = x;\ndy = $;\ndz = z;");
    FAIL("expected ParseError");
  } catch (const ParseError& e) {
    CHECK(e.line() == 2);
    CHECK(e.column() == 6);
  }
}

TEST_CASE("rendered fields parse back") {
  for (auto sign : {FieldSign::negative, FieldSign::positive}) {
    Field f = darboux::d2_field(sign);
    CHECK(darboux::parse_field(darboux::render_field(f)) == f);
    Field s = darboux::specialize(f, {{'a', Rat(1)}, {'b', Rat(-2, 7)}});
    CHECK(darboux::parse_field(darboux::render_field(s)) == s);
  }
}

TEST_CASE("rendered polynomials parse back") {
  for (const char* text : {"x^2 + z^2", "x^2 - y^2", "2*a", "0",
                           "-x^2 + 3/2*y*z - 7", "(a + 1)*x^2 - b*z"}) {
    Poly p = darboux::parse_polynomial(text);
    CHECK(darboux::parse_polynomial(p.str()) == p);
  }
}

TEST_SUITE_END();
