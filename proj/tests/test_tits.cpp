#include "doctest.h"

#include "centsplit/braid.hpp"
#include "centsplit/tits.hpp"

using namespace centsplit;

TEST_CASE("sigma squares to the half coroot") {
  for (const char* name : {"A2:sc", "B2:sc", "C3:sc", "D4:sc", "G2:sc"}) {
    auto R = parse_datum(name);
    for (int i = 0; i < R->rank_ss(); ++i) {
      TitsElement s = sigma(*R, WeylElement::simple(*R, i));
      TitsElement sq = s * s;
      CHECK(sq.weyl_part().is_identity());
      CHECK(same_entries(sq.torus_part(), R->torus_class(half_coroot(*R, i))));
      CHECK(s.order() == 4);  // alpha~/2 has order 2 in Y(sc) = Z^n
    }
  }
}

TEST_CASE("sigma is multiplicative on length-additive products") {
  auto R = parse_datum("B3:sc");
  for (const WeylElement& w : enumerate_weyl(*R)) {
    for (int i = 0; i < R->rank_ss(); ++i) {
      if (w.right_descent(i)) continue;
      WeylElement ws = w * WeylElement::simple(*R, i);
      CHECK(sigma(*R, ws) ==
            sigma(*R, w) * sigma(*R, WeylElement::simple(*R, i)));
    }
  }
}

TEST_CASE("group axioms in the Tits group") {
  auto R = parse_datum("C3:sc");
  VecQ t = VecQ::Zero(3);
  t[0] = Rat(1, 2);
  TitsElement x = TitsElement::torus(*R, t) * sigma(*R, longest_element(*R));
  TitsElement y = sigma(*R, product_of_word(*R, {0, 1, 2}));
  CHECK((x * x.inverse()).is_identity());
  CHECK((x.inverse() * x).is_identity());
  CHECK(x * (y * y) == (x * y) * y);
  CHECK((x * y).inverse() == y.inverse() * x.inverse());
  CHECK(x.pow(0).is_identity());
  CHECK(x.pow(-3) == x.inverse().pow(3));
  CHECK(x.conjugate_by(y) == y * x * y.inverse());
}

TEST_CASE("ts of a signed word matches products of sigma") {
  auto R = parse_datum("A3:sc");
  BraidWord b(*R, {{0, 1}, {1, -1}, {2, 1}});
  TitsElement expect = sigma(*R, WeylElement::simple(*R, 0)) *
                       sigma(*R, WeylElement::simple(*R, 1)).inverse() *
                       sigma(*R, WeylElement::simple(*R, 2));
  CHECK(ts(*R, b) == expect);
}

TEST_CASE("adams-vogan and involution identities self-verify") {
  auto R = parse_datum("B2:sc");
  for (const WeylElement& w : enumerate_weyl(*R))
    CHECK_NOTHROW(adams_vogan(*R, lift_weyl(w)));
  CHECK_NOTHROW(involution_torus(*R, {}));
  CHECK_NOTHROW(involution_torus(*R, {0}));
  CHECK_NOTHROW(involution_torus(*R, {0, 1}));
}

TEST_CASE("torus classes respect the cocharacter lattice") {
  // In the adjoint datum of A1, alpha~/2 is already a cocharacter, so
  // sigma(s)^2 = 1 and sigma(s) has order 2.
  auto ad = parse_datum("A1:ad");
  TitsElement s = sigma(*ad, WeylElement::simple(*ad, 0));
  CHECK((s * s).is_identity());
  CHECK(s.order() == 2);
}
