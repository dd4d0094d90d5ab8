#include "doctest.h"

#include "centsplit/lattice.hpp"

using namespace centsplit;

TEST_CASE("hermite normal form of a known matrix") {
  MatZ m(3, 3);
  m << 2, 4, 4, -6, 6, 12, 10, 4, 16;
  MatZ h = hermite_normal_form(m);
  // Pivots positive, upper triangular, determinant preserved up to sign.
  CHECK(h(1, 0) == 0);
  CHECK(h(2, 0) == 0);
  CHECK(h(2, 1) == 0);
  CHECK(h(0, 0) * h(1, 1) * h(2, 2) == 624);
  CHECK(h(0, 1) >= 0);
  CHECK(h(0, 1) < h(1, 1));
}

TEST_CASE("smith normal form invariants") {
  MatZ m(3, 3);
  m << 2, 4, 4, -6, 6, 12, 10, 4, 16;
  SmithForm f = smith_normal_form(m);
  CHECK(same_entries(MatZ(f.u * m * f.v), f.s));
  CHECK(f.s(0, 0) == 2);
  CHECK(f.s(1, 1) == 2);
  CHECK(f.s(2, 2) == 156);
  CHECK(f.s(1, 1) % f.s(0, 0) == 0);
  CHECK(f.s(2, 2) % f.s(1, 1) == 0);
}

TEST_CASE("lattice membership and quotient representatives") {
  MatQ b(2, 2);
  b << Rat(1), Rat(0), Rat(1, 2), Rat(1, 2);  // A1xA1-style weight lattice
  Lattice L(b);
  VecQ v(2);
  v << Rat(1, 2), Rat(1, 2);
  CHECK(L.contains(v));
  v << Rat(1, 2), Rat(0);
  CHECK(!L.contains(v));
  CHECK(L.class_order(v) == 2);
  VecQ r = L.quotient_canonical(v);
  CHECK(L.contains(VecQ(v - r)));
  // Canonical representative is idempotent.
  CHECK(same_entries(L.quotient_canonical(r), r));
  CHECK(Lattice::standard(2).index_of(Lattice(MatQ(2 * b))) == 2);
}

TEST_CASE("p-prime part splits off the p-power torsion") {
  Lattice Z = Lattice::standard(1);
  VecQ v(1);
  v << Rat(1, 12);
  VecQ v3 = Z.p_prime_part(v, 2);  // order-3 part
  CHECK(Z.class_order(v3) == 3);
  VecQ d = v - v3;  // the 2-power part
  CHECK(Z.class_order(d) == 4);
  CHECK(same_entries(Z.p_prime_part(v, 0), Z.quotient_canonical(v)));
}

TEST_CASE("solve_mod and kernel_mod") {
  MatZ M(2, 2);
  M << 2, 1, 0, 2;
  VecZ c(2);
  c << 1, 2;
  auto y = solve_mod(M, c, 4);
  REQUIRE(y.has_value());
  VecZ r = M * *y - c;
  CHECK(r[0] % 4 == 0);
  CHECK(r[1] % 4 == 0);
  for (const VecZ& k : kernel_mod(M, 4)) {
    VecZ z = M * k;
    CHECK(z[0] % 4 == 0);
    CHECK(z[1] % 4 == 0);
  }
  VecZ bad(2);
  bad << 1, 1;
  MatZ two = MatZ::Identity(2, 2) * 2;
  CHECK(!solve_mod(two, bad, 4).has_value());
}
