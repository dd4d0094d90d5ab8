#pragma once

#include "centsplit/lifting.hpp"

namespace centsplit {

// Frobenius root with trivial action on W: torus classes are multiplied
// by q, Weyl parts are fixed.  q is any integer >= 2 (only the arithmetic
// t -> q t matters here; genuine Frobenius roots have q a prime-power
// root).
struct FrobeniusAction {
  Int q;
  explicit FrobeniusAction(Int q_) : q(std::move(q_)) {
    if (q < 2) throw std::invalid_argument("FrobeniusAction: q must be >= 2");
  }
};

// An element of N is F-fixed iff (q - 1) times its torus part lies in Y.
bool is_F_stable(const TitsElement& x, const FrobeniusAction& F);

// C_G(s) is F-stable iff the class q*lambda has the same root subsystem
// Phi and the same A_G-stabilizer as lambda.
bool centralizer_F_stable(const SemisimpleClass& s, const FrobeniusAction& F,
                          const FundamentalGroup& A);
bool centralizer_F_stable(const SemisimpleClass& s, const FrobeniusAction& F);

// The splitting certificate with every element of A_0 certified F-fixed
// (making the fixed-point sequence split).  Requires centralizer
// F-stability and q odd unless p = 2.
struct FStableSplitting {
  SplittingCertificate certificate;
  Int q;
};
FStableSplitting f_stable_splitting(const SemisimpleClass& s,
                                    const FrobeniusAction& F);
FStableSplitting f_stable_splitting(const SemisimpleClass& s,
                                    const FrobeniusAction& F,
                                    const LiftContext& ctx);

// Whether iota commutes with F (true iff (q-1) kills the center); the
// failure for A2 sc with q = 2 is a deliberate negative control.
bool iota_F_equivariant(const FundamentalGroup& A, const FrobeniusAction& F);

}  // namespace centsplit
