#include "doctest.h"

#include "centsplit/fundgroup.hpp"

using namespace centsplit;

TEST_CASE("fundamental group orders equal the connection index") {
  for (const char* name : {"A1:sc", "A4:sc", "B3:sc", "C4:sc", "D4:sc",
                           "D5:sc", "E6:sc", "E7:sc", "E8:sc", "F4:sc",
                           "G2:sc"}) {
    auto R = parse_datum(name);
    FundamentalGroup A(*R);
    CHECK(Int(A.elements().size()) == R->connection_index());
  }
}

TEST_CASE("D4 fundamental group is Klein four") {
  auto R = parse_datum("D4:sc");
  FundamentalGroup A(*R);
  REQUIRE(A.elements().size() == 4);
  for (const WeylElement& a : A.elements()) CHECK((a * a).is_identity());
  CHECK(A.generators().size() == 3);  // one per minuscule node
}

TEST_CASE("D5 fundamental group is cyclic of order 4") {
  auto R = parse_datum("D5:sc");
  FundamentalGroup A(*R);
  REQUIRE(A.elements().size() == 4);
  bool has_order_4 = false;
  for (const WeylElement& a : A.elements())
    if (A.element_order(a) == 4) has_order_4 = true;
  CHECK(has_order_4);
}

TEST_CASE("varpi_check tracks minus the fundamental coweight") {
  auto R = parse_datum("A3:sc");
  FundamentalGroup A(*R);
  const WeylElement& c = A.generators()[0];  // node 1
  VecQ expect = -R->fundamental_coweight(0);
  // Compare mod the coroot lattice Z^3.
  VecQ diff = A.varpi_check(c) - expect;
  CHECK(is_integral(diff));
  CHECK(A.element_order(c) == 4);
}

TEST_CASE("A_G depends on the cocharacter lattice") {
  {
    auto sc = parse_datum("A3:sc");
    CHECK(FundamentalGroup(*sc).a_sub_G().size() == 1);
  }
  {
    auto ad = parse_datum("A3:ad");
    CHECK(FundamentalGroup(*ad).a_sub_G().size() == 4);
  }
  {
    IsogenyFamily fam = standard_isogenies(parse_cartan_type("A3"));
    CHECK(FundamentalGroup(*fam.intermediate[0]).a_sub_G().size() == 2);
  }
}

TEST_CASE("iota refuses orders divisible by p") {
  auto R = parse_datum("A1:sc;p=2");
  FundamentalGroup A(*R);
  const WeylElement& c = A.generators()[0];  // order 2, p = 2
  CHECK_THROWS_AS(A.iota(c), std::invalid_argument);
  auto R3 = parse_datum("A1:sc;p=3");
  FundamentalGroup A3(*R3);
  CHECK_NOTHROW(A3.iota(A3.generators()[0]));
}

TEST_CASE("iota of the identity is trivial") {
  auto R = parse_datum("D4:sc");
  FundamentalGroup A(*R);
  CHECK(all_zero(A.iota(WeylElement::identity(*R)).value));
}
