#include "cpalg/parser.hpp"
#include "doctest.h"

using namespace cpalg;

namespace {

bool parses_to(const char* text, const GroupExpr& expected) {
  return parse_group_expr(text) == expected;
}

}  // namespace

TEST_CASE("grammar basics") {
  CHECK(parses_to("GL(2) x Gm^3",
                  GroupExpr::product({GroupExpr::general_linear(2), GroupExpr::torus(3)})));
  CHECK(parses_to("U(Sp(6))",
                  GroupExpr::unipotent_radical(SimpleType::make(SimpleFamily::C, 3))));
  CHECK(parses_to("SO(5)", GroupExpr::simple(SimpleType::make(SimpleFamily::B, 2))));
  CHECK(parses_to("1", GroupExpr::trivial()));
  CHECK(parses_to("Gm", GroupExpr::torus(1)));
  CHECK(parses_to("Ga^4", GroupExpr::additive(4)));
  CHECK(parses_to("T(3)", GroupExpr::torus(3)));
  CHECK(parses_to("B(E7)", GroupExpr::borel(SimpleType::make(SimpleFamily::E7, 7))));
  CHECK(parses_to("E8", GroupExpr::simple(SimpleType::make(SimpleFamily::E8, 8))));
}

TEST_CASE("whitespace is insignificant") {
  CHECK(parse_group_expr("GL( 2 )xGm^3") == parse_group_expr("GL(2) x Gm^3"));
  CHECK(parse_group_expr("  U( Sp( 6 ) ) ") == parse_group_expr("U(Sp(6))"));
}

TEST_CASE("powers expand to products except on Gm and Ga") {
  CHECK(parse_group_expr("GL(2)^3") ==
        GroupExpr::product({GroupExpr::general_linear(2), GroupExpr::general_linear(2),
                            GroupExpr::general_linear(2)}));
  CHECK(parse_group_expr("Gm^5") == GroupExpr::torus(5));
  CHECK(parse_group_expr("T(2)^2") == GroupExpr::product({GroupExpr::torus(2), GroupExpr::torus(2)}));
  CHECK(parse_group_expr("1^5") == GroupExpr::trivial());
  CHECK(parse_group_expr("E6^1") == GroupExpr::simple(SimpleType::make(SimpleFamily::E6, 6)));
}

TEST_CASE("classical aliases normalize onto canonical types") {
  CHECK(parse_group_expr("SL(4)") == GroupExpr::simple(SimpleType::make(SimpleFamily::A, 3)));
  CHECK(parse_group_expr("SO(6)") == parse_group_expr("SL(4)"));  // D3 = A3
  CHECK(parse_group_expr("Sp(4)") == parse_group_expr("SO(5)"));  // C2 = B2
  CHECK(parse_group_expr("Sp(2)") == parse_group_expr("SL(2)"));  // C1 = A1
  CHECK(parse_group_expr("SO(7)") == GroupExpr::simple(SimpleType::make(SimpleFamily::B, 3)));
  CHECK(parse_group_expr("SO(8)") == GroupExpr::simple(SimpleType::make(SimpleFamily::D, 4)));
  CHECK(parse_group_expr("GL(1)") == GroupExpr::torus(1));
  CHECK(parse_group_expr("U(SL(2))") == GroupExpr::additive(1));
  CHECK(parse_group_expr("U(Sp(4))") ==
        GroupExpr::unipotent_radical(SimpleType::make(SimpleFamily::B, 2)));
}

TEST_CASE("trivial factors vanish inside products") {
  CHECK(parse_group_expr("1 x GL(2)") == GroupExpr::general_linear(2));
  CHECK(parse_group_expr("1 x 1") == GroupExpr::trivial());
  CHECK(parse_group_expr("GL(2) x 1 x Gm") ==
        GroupExpr::product({GroupExpr::general_linear(2), GroupExpr::torus(1)}));
}

TEST_CASE("out-of-range names are rejected") {
  CHECK_THROWS_AS(parse_group_expr("SO(3)"), ParseError);
  CHECK_THROWS_AS(parse_group_expr("SO(4)"), ParseError);
  CHECK_THROWS_AS(parse_group_expr("SO(2)"), ParseError);
  CHECK_THROWS_AS(parse_group_expr("SO(1)"), ParseError);
  CHECK_THROWS_AS(parse_group_expr("SL(1)"), ParseError);
  CHECK_THROWS_AS(parse_group_expr("Sp(3)"), ParseError);
  CHECK_THROWS_AS(parse_group_expr("Sp(0)"), ParseError);
  CHECK_THROWS_AS(parse_group_expr("GL(0)"), ParseError);
  CHECK_THROWS_AS(parse_group_expr("T(0)"), ParseError);
  CHECK_THROWS_AS(parse_group_expr("E9"), ParseError);
  CHECK_THROWS_AS(parse_group_expr("U(GL(2))"), ParseError);
}

TEST_CASE("syntax errors carry a position") {
  try {
    parse_group_expr("GL(2) x ");
    FAIL("expected a parse error");
  } catch (const ParseError& e) {
    CHECK(e.position() == 8);  // after the trailing space
  }
  try {
    parse_group_expr("GL(2");
    FAIL("expected a parse error");
  } catch (const ParseError& e) {
    CHECK(e.position() == 4);
  }
  CHECK_THROWS_AS(parse_group_expr(""), ParseError);
  CHECK_THROWS_AS(parse_group_expr("GL(2))"), ParseError);
  CHECK_THROWS_AS(parse_group_expr("GL(2) Gm"), ParseError);
  CHECK_THROWS_AS(parse_group_expr("GL(2)^0"), ParseError);
}
