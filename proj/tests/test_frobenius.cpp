#include "doctest.h"

#include "centsplit/frobenius.hpp"

using namespace centsplit;

TEST_CASE("torus class F-stability is q-1 torsion") {
  auto R = parse_datum("A1:ad");
  VecQ t(1);
  t << Rat(1, 2);
  // (q-1) t in Y(ad) = (1/2)Z for every q, so always F-fixed.
  CHECK(is_F_stable(TitsElement::torus(*R, t), FrobeniusAction{Int(3)}));
  CHECK(is_F_stable(TitsElement::torus(*R, t), FrobeniusAction{Int(2)}));
  t << Rat(1, 4);
  CHECK(!is_F_stable(TitsElement::torus(*R, t), FrobeniusAction{Int(2)}));
  CHECK(is_F_stable(TitsElement::torus(*R, t), FrobeniusAction{Int(3)}));
}

TEST_CASE("centralizer F-stability for the PGL2 example") {
  auto R = parse_datum("A1:ad");
  VecQ lam(1);
  lam << Rat(1, 4);
  SemisimpleClass s(*R, lam);
  CHECK(centralizer_F_stable(s, FrobeniusAction{Int(3)}));
  CHECK(centralizer_F_stable(s, FrobeniusAction{Int(5)}));
}

TEST_CASE("f_stable_splitting certifies the fixed-point sequence") {
  auto R = parse_datum("A1:ad");
  VecQ lam(1);
  lam << Rat(1, 4);
  SemisimpleClass s(*R, lam);
  FStableSplitting fs = f_stable_splitting(s, FrobeniusAction{Int(5)});
  CHECK(fs.q == 5);
  bool found = false;
  for (const std::string& c : fs.certificate.checks)
    if (c == "a0-F-stable") found = true;
  CHECK(found);
}

TEST_CASE("even q requires characteristic 2") {
  auto R = parse_datum("A1:ad");
  SemisimpleClass s(*R, VecQ::Zero(1));
  CHECK_THROWS_AS(f_stable_splitting(s, FrobeniusAction{Int(4)}),
                  std::invalid_argument);
  auto R2 = parse_datum("A1:ad;p=2");
  SemisimpleClass s2(*R2, VecQ::Zero(1));
  CHECK_NOTHROW(f_stable_splitting(s2, FrobeniusAction{Int(4)}));
}

TEST_CASE("iota is not F-equivariant for A2 sc at q = 2") {
  auto R = parse_datum("A2:sc");
  FundamentalGroup A(*R);
  CHECK(!iota_F_equivariant(A, FrobeniusAction{Int(2)}));
  CHECK(iota_F_equivariant(A, FrobeniusAction{Int(4)}));  // 3 | 4-1
  CHECK(iota_F_equivariant(A, FrobeniusAction{Int(7)}));
}
