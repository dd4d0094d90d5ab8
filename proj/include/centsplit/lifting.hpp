#pragma once

#include <memory>
#include <string>
#include <unordered_map>
#include <vector>

#include "centsplit/centralizer.hpp"
#include "centsplit/fundgroup.hpp"
#include "centsplit/tits.hpp"

namespace centsplit {

// A lift tau of chosen generators of A into N: images pairwise commute,
// each projects to its generator in W, and condition (flat) holds:
//   tau(a)^{o(a)} = iota(a^{o(a)/2}) for o(a) even, identity for odd.
// All invariants are verified at construction, not assumed.
struct FlatLift {
  const RootDatum* sc;  // the simply connected datum the lift lives over
  std::vector<WeylElement> gens;
  std::vector<TitsElement> images;
  // One of "sigma", "braid-word", "torus-corrected" per generator.
  std::vector<std::string> provenance;
};

// The per-type construction: tau = sigma for A, B, D odd, E6, E7 (and
// everything when p = 2); type C applies the torus correction solving
// t + c(t) = iota(c) - sigma(c)^2 over (1/2)Qvee/Qvee; type D even uses
// the commuting braid-word lifts ts(cb), ts(ca), ts(cb ca).
FlatLift flat_lift(const RootDatum& sc_datum, const FundamentalGroup& A);

// Independent search: per generator, solve the (flat) norm equation for a
// torus correction of sigma over (1/2k)Qvee/Qvee (k the exponent of A),
// adding the pairwise commutation constraints where needed; throws
// VerificationError if the search is exhausted.
FlatLift flat_lift_generic(const RootDatum& sc_datum,
                           const FundamentalGroup& A);

// Checks projection to W, condition (flat), and pairwise commutation of
// the images; throws VerificationError on any failure.
void verify_flat_lift(const FlatLift& fl, const FundamentalGroup& A);

// tau extended to every element of A by tau(prod c_i^{a_i}) =
// prod tau(c_i)^{a_i}, 0 <= a_i < o(c_i); condition (flat) is verified
// exhaustively over A.
struct FullLift {
  std::unordered_map<WeylElement, TitsElement, WeylHash> tau;
};
FullLift lift_products(const FlatLift& fl, const FundamentalGroup& A);

// tau_1 = (projection to G's torus quotient) of tau, restricted to A_G;
// verifies order(tau_1(a)) = o(a) for every a in A_G.  Elements and
// images are expressed over the target datum R.
struct Tau1 {
  const RootDatum* datum;
  std::vector<WeylElement> a_g;  // elements of A_G over R
  std::vector<TitsElement> images;

  const TitsElement& of(const WeylElement& a) const;
};
Tau1 lift_to_isogeny(const FullLift& full, const FundamentalGroup& A_sc,
                     const RootDatum& R, const FundamentalGroup& A_G);

// A decomposition of the abelian group A_G into a direct product of
// cyclic subgroups <g_i> with orders the invariant factors (ascending
// divisibility), computed via the Smith normal form of the varpi_check
// coordinate lattice.
struct CyclicDecomposition {
  std::vector<WeylElement> gens;
  std::vector<Int> orders;
};
CyclicDecomposition cyclic_decomposition(const FundamentalGroup& A,
                                         const std::vector<WeylElement>& a_g);

// The homomorphism tau_2 : A_G -> N, tau_2(prod g_i^{m_i}) =
// prod tau_1(g_i)^{m_i} over a cyclic decomposition; the homomorphism
// property, agreement with tau_1 on the g_i, and the section property are
// verified on all of A_G.
struct Tau2 {
  const RootDatum* datum;
  CyclicDecomposition decomposition;
  std::vector<WeylElement> a_g;
  std::vector<TitsElement> images;

  const TitsElement& of(const WeylElement& a) const;
};
Tau2 group_lift(const Tau1& tau1, const FundamentalGroup& A_G);

// The executable splitting theorem: normalize lambda, compute A_W(s),
// restrict tau_2 to it, conjugate back through the normalization, and
// verify the section / homomorphism / injectivity / Phi^+(s)-stability
// properties.  `checks` records each verified identity by name.
struct SplittingCertificate {
  const RootDatum* datum;
  VecQ lambda_original;
  VecQ lambda_normalized;
  Conjugator conjugator;
  CentralizerData data;
  std::vector<Int> a_g_s_invariants;       // invariant factors of A_W(s)
  std::vector<WeylElement> a0_weyl;        // A_W(s) for the original lambda
  std::vector<TitsElement> a0_images;      // the section A_0 on those
  std::vector<std::string> checks;
};
SplittingCertificate splitting_certificate(const SemisimpleClass& s);

// Shared per-datum machinery for sweeps: the fundamental groups and lifts
// are independent of lambda.
struct LiftContext {
  std::shared_ptr<RootDatum> sc;
  std::unique_ptr<FundamentalGroup> A_sc;
  std::unique_ptr<FundamentalGroup> A_G;
  FullLift full;
  Tau1 tau1;
  Tau2 tau2;
};
LiftContext make_lift_context(const RootDatum& R);
SplittingCertificate splitting_certificate(const SemisimpleClass& s,
                                           const LiftContext& ctx);

}  // namespace centsplit
