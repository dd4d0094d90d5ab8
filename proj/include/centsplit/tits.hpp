#pragma once

#include "centsplit/braid.hpp"
#include "centsplit/weyl.hpp"

namespace centsplit {

// Element of the extended Weyl group N in the normal form t * sigma(w):
// a p'-torsion torus class t in (Y (x) Q)/Y and a Weyl part w.  The
// sigma-section is the reference lift, so sigma(w) itself has torus part 0;
// torus corrections alpha^vee/2 enter only through length-decreasing
// multiplications.
class TitsElement {
 public:
  static TitsElement identity(const RootDatum& R);
  static TitsElement from_parts(const RootDatum& R, const VecQ& t,
                                WeylElement w);
  static TitsElement torus(const RootDatum& R, const VecQ& t);

  const RootDatum& datum() const { return *datum_; }
  const VecQ& torus_part() const { return t_; }
  const WeylElement& weyl_part() const { return w_; }
  bool is_identity() const { return w_.is_identity() && all_zero(t_); }

  TitsElement operator*(const TitsElement& o) const;
  TitsElement inverse() const;
  TitsElement pow(long long k) const;
  TitsElement conjugate_by(const TitsElement& g) const;  // g * x * g^{-1}

  bool operator==(const TitsElement& o) const {
    return w_ == o.w_ && same_entries(t_, o.t_);
  }
  bool operator!=(const TitsElement& o) const { return !(*this == o); }

  Int order() const;

 private:
  TitsElement(const RootDatum* d, VecQ t, WeylElement w)
      : datum_(d), t_(std::move(t)), w_(std::move(w)) {}
  const RootDatum* datum_;
  VecQ t_;
  WeylElement w_;
};

// sigma(s)^2 = alpha_s^vee / 2 as a torus class (vanishes when p = 2).
VecQ half_coroot(const RootDatum& R, int i);

// The Tits section sigma: W -> N (torus part 0 by convention; products
// pick up the relation-(ii) corrections).
TitsElement sigma(const RootDatum& R, const WeylElement& w);

// The morphism ts: B(W) -> N with ts(bold s) = sigma(s).
TitsElement ts(const RootDatum& R, const BraidWord& b);

// Checks ts(b) ts(~b) = (rho^vee - w(rho^vee))/2 mod Y and returns the
// common value; throws VerificationError on mismatch.
VecQ adams_vogan(const RootDatum& R, const BraidWord& b);

// Checks sigma(w_I w_0) sigma(w_0 w_I) = rho^vee - rho_I^vee mod Y and
// returns the value; throws VerificationError on mismatch.
VecQ involution_torus(const RootDatum& R, const std::vector<int>& I);

}  // namespace centsplit
