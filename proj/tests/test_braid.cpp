#include "doctest.h"

#include "centsplit/braid.hpp"

using namespace centsplit;

TEST_CASE("garside normal form decides the word problem") {
  auto R = parse_datum("A2:sc");
  BraidWord s1(*R, {{0, 1}});
  BraidWord s2(*R, {{1, 1}});
  CHECK(braid_equal(s1 * s2 * s1, s2 * s1 * s2));
  CHECK(!braid_equal(s1 * s2, s2 * s1));
  CHECK(braid_equal(s1 * s1.inverse(), BraidWord(*R)));
  // The braid group is torsion free: s1^2 is not trivial.
  CHECK(!braid_equal(s1 * s1, BraidWord(*R)));
}

TEST_CASE("normal form of a positive lift is the left-greedy one") {
  auto R = parse_datum("A2:sc");
  WeylElement w0 = longest_element(*R);
  // The lift of w0 is the Garside element itself: infimum 1, no proper
  // factors; its square is the full twist.
  GarsideNormalForm nf = garside_nf(lift_weyl(w0));
  CHECK(nf.infimum == 1);
  CHECK(nf.factors.empty());
  GarsideNormalForm tw = garside_nf(lift_weyl(w0).pow(2));
  CHECK(tw.infimum == 2);
  CHECK(tw.factors.empty());
}

TEST_CASE("inverse and powers in B3") {
  auto R = parse_datum("B3:sc");
  BraidWord b(*R, {{0, 1}, {1, -1}, {2, 1}, {1, 1}});
  CHECK(braid_equal(b * b.inverse(), BraidWord(*R)));
  CHECK(braid_equal(b.pow(3), b * b * b));
  CHECK(braid_equal(b.pow(-2), (b * b).inverse()));
  CHECK(b.weyl_image() ==
        product_of_word(*R, {0}) * product_of_word(*R, {1}).inverse() *
            product_of_word(*R, {2, 1}));
}

TEST_CASE("reversal is an anti-automorphism") {
  auto R = parse_datum("B2:sc");
  BraidWord a(*R, {{0, 1}, {1, 1}, {0, -1}});
  BraidWord b(*R, {{1, 1}, {0, 1}});
  CHECK(braid_equal((a * b).reversed(), b.reversed() * a.reversed()));
}

TEST_CASE("lift_weyl embeds W set-theoretically") {
  auto R = parse_datum("A3:sc");
  for (const WeylElement& w : enumerate_weyl(*R)) {
    BraidWord b = lift_weyl(w);
    CHECK(b.weyl_image() == w);
    GarsideNormalForm nf = garside_nf(b);
    if (w.is_identity()) {
      CHECK(nf.infimum == 0);
      CHECK(nf.factors.empty());
    } else if (w == longest_element(*R)) {
      CHECK(nf.infimum == 1);
      CHECK(nf.factors.empty());
    } else {
      CHECK(nf.infimum == 0);
      REQUIRE(nf.factors.size() == 1);
      CHECK(nf.factors[0] == w);
    }
  }
}
