#pragma once

#include <optional>
#include <vector>

#include "centsplit/numeric.hpp"

namespace centsplit {

// Full-rank integer lattice in Q^n given by a rational basis (rows).
// Canonical form: the row Hermite normal form of d*basis, where d is the
// least common denominator of the basis entries.  Two lattices are equal
// iff their canonical forms are equal.
class Lattice {
 public:
  // Rows of `basis` must be linearly independent and span the lattice.
  explicit Lattice(MatQ basis);

  // The standard lattice Z^n.
  static Lattice standard(int n);

  int dim() const { return static_cast<int>(hnf_.rows()); }

  // Upper-triangular integer HNF of denom()*L, positive pivots, entries
  // above each pivot reduced mod the pivot.
  const MatZ& canonical_basis() const { return hnf_; }
  const Int& denom() const { return denom_; }

  bool contains(const VecQ& v) const;

  // Unique representative of v+L with coefficients in [0,1) against the
  // canonical triangular basis.
  VecQ quotient_canonical(const VecQ& v) const;

  // Smallest k >= 1 with k*v in L.
  Int class_order(const VecQ& v) const;

  // The p'-part of the class of v in Q^n/L; identity when p = 0.
  VecQ p_prime_part(const VecQ& v, const Int& p) const;

  // Index [this : sub] for sub a finite-index sublattice.
  Int index_of(const Lattice& sub) const;

  bool operator==(const Lattice& o) const {
    return denom_ == o.denom_ && same_entries(hnf_, o.hnf_);
  }
  bool operator!=(const Lattice& o) const { return !(*this == o); }

 private:
  // Coefficients of v against the rational canonical basis rows.
  VecQ coefficients(const VecQ& v) const;

  MatZ hnf_;
  Int denom_;
};

// Row Hermite normal form of an integer matrix with full column rank
// (rows >= cols); pivot of column j lands in row j.
MatZ hermite_normal_form(MatZ m);

// Smith decomposition U*M*V = S with U, V unimodular and S diagonal,
// S(i,i) | S(i+1,i+1).
struct SmithForm {
  MatZ u, s, v;
};
SmithForm smith_normal_form(MatZ m);

// One solution y of M*y = c (mod m), if any.
std::optional<VecZ> solve_mod(const MatZ& M, const VecZ& c, const Int& m);

// Basis of the kernel of M on (Z/m)^n: vectors k with M*k = 0 (mod m),
// whose Z/m-span is the whole kernel.
std::vector<VecZ> kernel_mod(const MatZ& M, const Int& m);

}  // namespace centsplit
