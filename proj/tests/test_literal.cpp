#include <doctest.h>

#include "eoc/error.hpp"
#include "eoc/literal.hpp"

using namespace eoc;

TEST_CASE("multiset literals") {
  const auto m = parse_multiset("1^2,2^2,3,4");
  CHECK(m.size() == 6);
  CHECK(m.multiplicity(1) == 2);
  CHECK(format(m) == "1^2,2^2,3,4");
  CHECK(format(parse_multiset("2, 1, 1")) == "1^2,2");
  CHECK_THROWS_AS(parse_multiset("1^0,2"), ParseError);
  CHECK_THROWS_AS(parse_multiset("0,2"), ParseError);
  CHECK_THROWS_AS(parse_multiset(""), ParseError);
  CHECK_THROWS_AS(parse_multiset("1,x"), ParseError);
}

TEST_CASE("cycle literals expand exponents and print canonically") {
  const auto c = parse_cycle("(1,2^2,4^3,6)");
  CHECK(c.seq() == std::vector<Value>{1, 2, 2, 4, 4, 4, 6});
  CHECK(format(c) == "(1,2^2,4^3,6)");
  CHECK(format(parse_cycle("(4, 3, 1, 2)")) == "(1,2,4,3)");
  CHECK(format(parse_cycle("(3^3)")) == "(3^3)");
  CHECK_THROWS_AS(parse_cycle("1,2"), ParseError);
  CHECK_THROWS_AS(parse_cycle("()"), ParseError);
  CHECK_THROWS_AS(parse_cycle("(1,0)"), ParseError);
}

TEST_CASE("permutation literals") {
  CHECK(parse_permutation("34215").word() == std::vector<Value>{3, 4, 2, 1, 5});
  CHECK(parse_permutation("3,4,2,1,5") == parse_permutation("34215"));
  const auto big = parse_permutation("10,1,2,3,4,5,6,7,8,9");
  CHECK(format(big) == "10,1,2,3,4,5,6,7,8,9");
  CHECK(format(parse_permutation("528713649")) == "528713649");
  CHECK_THROWS_AS(parse_permutation("1224"), ParseError);
  CHECK_THROWS_AS(parse_permutation("0"), ParseError);
  CHECK_THROWS_AS(parse_permutation("13"), ParseError);
}

TEST_CASE("Laguerre literals") {
  const auto h = parse_laguerre("(UUL0UDDL1D; 0,1,0,0,3,1,1,1)");
  CHECK(h.size() == 8);
  CHECK(format(h) == "(UUL0UDDL1D; 0,1,0,0,3,1,1,1)");
  CHECK(parse_laguerre("(L0UDL0,(0,0,1,0))") == parse_laguerre("(L0UDL0; 0,0,1,0)"));
  CHECK(parse_laguerre("(;)").size() == 0);
  CHECK(format(parse_laguerre("()")) == "(;)");
  CHECK_THROWS_AS(parse_laguerre("(UL2D; 0,0,0)"), ParseError);
  CHECK_THROWS_AS(parse_laguerre("(UD; 0,5)"), DomainError);
}

TEST_CASE("set formatting") {
  CHECK(format_set({4, 2}) == "{2,4}");
  CHECK(format_set({}) == "{}");
}
