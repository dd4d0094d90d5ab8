#include "doctest.h"

#include "centsplit/lifting.hpp"

using namespace centsplit;

TEST_CASE("flat lift on small simply connected types") {
  for (const char* name : {"A1", "A2", "B2", "C2", "C3", "D4", "D5", "G2"}) {
    auto R = parse_datum(std::string(name) + ":sc");
    FundamentalGroup A(*R);
    FlatLift fl = flat_lift(*R, A);
    CHECK(fl.gens.empty() == (R->connection_index() == 1));
    CHECK_NOTHROW(verify_flat_lift(fl, A));
    FlatLift gen = flat_lift_generic(*R, A);
    CHECK_NOTHROW(verify_flat_lift(gen, A));
  }
}

TEST_CASE("lift_products gives a section of the full fundamental group") {
  auto R = parse_datum("D4:sc");
  FundamentalGroup A(*R);
  FullLift full = lift_products(flat_lift(*R, A), A);
  CHECK(full.tau.size() == 4);
  for (const auto& [a, t] : full.tau) CHECK(t.weyl_part() == a);
}

TEST_CASE("cyclic decomposition matches invariant factors") {
  {
    auto R = parse_datum("D4:sc");
    FundamentalGroup A(*R);
    CyclicDecomposition d = cyclic_decomposition(A, A.elements());
    CHECK(d.orders == std::vector<Int>{Int(2), Int(2)});
  }
  {
    auto R = parse_datum("A5:sc");
    FundamentalGroup A(*R);
    CyclicDecomposition d = cyclic_decomposition(A, A.elements());
    CHECK(d.orders == std::vector<Int>{Int(6)});
    CHECK(A.element_order(d.gens[0]) == 6);
  }
  {
    auto R = parse_datum("E8:sc");
    FundamentalGroup A(*R);
    CyclicDecomposition d = cyclic_decomposition(A, A.elements());
    CHECK(d.orders.empty());
  }
}

TEST_CASE("tau_1 transports orders to an isogeny quotient") {
  auto ad = parse_datum("A3:ad");
  LiftContext ctx = make_lift_context(*ad);
  CHECK(ctx.tau1.a_g.size() == 4);
  for (const WeylElement& a : ctx.tau1.a_g) {
    CHECK(ctx.tau1.of(a).weyl_part() == a);
    CHECK(ctx.tau1.of(a).order() == ctx.A_G->element_order(a));
  }
}

TEST_CASE("tau_2 is an injective homomorphic section") {
  for (const char* name : {"A3:ad", "D4:ad", "C3:ad", "B3:ad"}) {
    auto R = parse_datum(name);
    LiftContext ctx = make_lift_context(*R);
    const Tau2& t2 = ctx.tau2;
    for (const WeylElement& a : t2.a_g)
      for (const WeylElement& b : t2.a_g)
        CHECK(t2.of(a * b) == t2.of(a) * t2.of(b));
  }
}

TEST_CASE("splitting certificate for the PGL2 example") {
  auto R = parse_datum("A1:ad");
  VecQ lam(1);
  lam[0] = Rat(1, 4);
  SplittingCertificate cert = splitting_certificate(SemisimpleClass(*R, lam));
  CHECK(cert.a_g_s_invariants == std::vector<Int>{Int(2)});
  REQUIRE(cert.a0_images.size() == 2);
  // The nontrivial element of A_0 really fixes lambda mod Y and has the
  // order of its Weyl part.
  for (const TitsElement& t : cert.a0_images) {
    if (t.is_identity()) continue;
    CHECK(t.order() == 2);
    CHECK(R->Y().contains(VecQ(t.weyl_part().apply(lam) - lam)));
  }
  CHECK(!cert.checks.empty());
}

TEST_CASE("splitting certificate after normalization") {
  auto R = parse_datum("A3:ad");
  VecQ lam(3);
  lam << Rat(9, 4), Rat(-3, 2), Rat(1, 4);
  SplittingCertificate cert = splitting_certificate(SemisimpleClass(*R, lam));
  // Every certified section element fixes the original lambda mod Y.
  for (const TitsElement& t : cert.a0_images)
    CHECK(R->Y().contains(
        VecQ(t.weyl_part().apply(cert.lambda_original) -
             cert.lambda_original)));
}
