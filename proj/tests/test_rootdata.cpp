#include "doctest.h"

#include "centsplit/rootdata.hpp"

using namespace centsplit;

TEST_CASE("cartan matrices match the classical tables") {
  SUBCASE("A2") {
    auto R = parse_datum("A2:sc");
    MatI C = R->cartan_matrix();
    CHECK(C(0, 0) == 2);
    CHECK(C(0, 1) == -1);
    CHECK(C(1, 0) == -1);
  }
  SUBCASE("B labels are reversed: node 1 short, last node minuscule") {
    auto R = parse_datum("B2:sc");
    MatI C = R->cartan_matrix();
    // <alpha_1, alpha_2~> = -1, <alpha_2, alpha_1~> = -2.
    CHECK(C(1, 0) == -1);
    CHECK(C(0, 1) == -2);
    CHECK(R->minuscule_nodes() == std::vector<int>{1});
  }
  SUBCASE("C labels are reversed: node 1 long and minuscule") {
    auto R = parse_datum("C3:sc");
    MatI C = R->cartan_matrix();
    CHECK(C(1, 0) == -2);
    CHECK(C(0, 1) == -1);
    CHECK(C(2, 1) == -1);
    CHECK(R->minuscule_nodes() == std::vector<int>{0});
  }
  SUBCASE("D fork at node 3") {
    auto R = parse_datum("D4:sc");
    MatI C = R->cartan_matrix();
    CHECK(C(0, 1) == 0);  // the two arms do not touch
    CHECK(C(0, 2) == -1);
    CHECK(C(1, 2) == -1);
    CHECK(C(2, 3) == -1);
    CHECK(R->minuscule_nodes() == std::vector<int>{0, 1, 3});
  }
  SUBCASE("G2 has no minuscule node") {
    auto R = parse_datum("G2:sc");
    CHECK(R->minuscule_nodes().empty());
    CHECK(R->connection_index() == 1);
  }
}

TEST_CASE("root counts match the Planches") {
  CHECK(parse_datum("A4:sc")->roots().size() == 20);
  CHECK(parse_datum("B4:sc")->roots().size() == 32);
  CHECK(parse_datum("C4:sc")->roots().size() == 32);
  CHECK(parse_datum("D5:sc")->roots().size() == 40);
  CHECK(parse_datum("E6:sc")->roots().size() == 72);
  CHECK(parse_datum("E7:sc")->roots().size() == 126);
  CHECK(parse_datum("E8:sc")->roots().size() == 240);
  CHECK(parse_datum("F4:sc")->roots().size() == 48);
  CHECK(parse_datum("G2:sc")->roots().size() == 12);
}

TEST_CASE("connection indices") {
  CHECK(parse_datum("A5:sc")->connection_index() == 6);
  CHECK(parse_datum("B3:sc")->connection_index() == 2);
  CHECK(parse_datum("D4:sc")->connection_index() == 4);
  CHECK(parse_datum("D5:sc")->connection_index() == 4);
  CHECK(parse_datum("E6:sc")->connection_index() == 3);
  CHECK(parse_datum("E7:sc")->connection_index() == 2);
  CHECK(parse_datum("E8:sc")->connection_index() == 1);
}

TEST_CASE("isogeny lattices and parsing") {
  auto sc = parse_datum("A3:sc");
  auto ad = parse_datum("A3:ad");
  CHECK(sc->Y().index_of(sc->Y()) == 1);
  CHECK(sc->Y() != ad->Y());
  CHECK(ad->Y().index_of(sc->Y()) == 4);
  IsogenyFamily fam = standard_isogenies(parse_cartan_type("A3"));
  CHECK(fam.intermediate.size() == 1);  // SL4 -> SL4/{+-1} -> PGL4
  CHECK_THROWS(parse_datum("H3:sc"));
  CHECK(parse_datum("A1xA1:sc")->rank() == 2);
  CHECK(parse_datum("A2:sc;p=3")->characteristic() == 3);
}

TEST_CASE("torus classes are p-prime canonical representatives") {
  auto R = parse_datum("A1:sc;p=2");
  VecQ v(1);
  v << Rat(1, 2);  // 2-torsion dies in characteristic 2
  CHECK(all_zero(R->torus_class(v)));
  auto R3 = parse_datum("A1:sc;p=3");
  CHECK(same_entries(R3->torus_class(v), v));
}

TEST_CASE("fundamental coweights pair dually with simple roots") {
  for (const char* name : {"A3:sc", "B3:sc", "C3:sc", "D4:sc", "G2:sc"}) {
    auto R = parse_datum(name);
    for (int i = 0; i < R->rank_ss(); ++i) {
      VecI simple = VecI::Zero(R->rank_ss());
      simple[i] = 1;
      for (int j = 0; j < R->rank_ss(); ++j)
        CHECK(R->pairing(simple, R->fundamental_coweight(j)) ==
              Rat(i == j ? 1 : 0));
    }
  }
}
