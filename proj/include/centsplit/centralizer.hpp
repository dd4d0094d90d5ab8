#pragma once

#include <map>
#include <memory>
#include <unordered_set>
#include <vector>

#include "centsplit/fundgroup.hpp"
#include "centsplit/weyl.hpp"

namespace centsplit {

// A semisimple class, given by a representative lambda of its cocharacter
// class in (Y (x) Q)/Y.  Lambda is projected to its p'-part at
// construction (the identification of torus classes only covers p'-torsion);
// `projected` records whether this changed the input.
class SemisimpleClass {
 public:
  SemisimpleClass(const RootDatum& R, const VecQ& lambda);

  const RootDatum& datum() const { return *datum_; }
  const VecQ& lambda() const { return lambda_; }
  bool projected() const { return projected_; }

  // lambda lies in the closed fundamental alcove: <alpha_i, lambda> >= 0
  // for all simple roots and <theta_k, lambda> <= 1 per component.
  bool normalized() const;

 private:
  const RootDatum* datum_;
  VecQ lambda_;
  bool projected_;
};

// Normalization witness: lambda' = w(lambda) + mu with mu in Q^vee.
struct Conjugator {
  WeylElement w;
  VecQ translation;
};

// Repeated application of the violated simple / affine-wall reflections
// (lowest-index violation first) until lambda lies in the closed alcove.
std::pair<SemisimpleClass, Conjugator> normalize_to_alcove(
    const SemisimpleClass& s);

// Phi(s) = {alpha : <alpha, lambda> in Z}, as indices into R.roots().
std::vector<int> phi_of_s(const SemisimpleClass& s);

// The basis (Pi cap Phi(s)) cup {lowest roots with <alpha~, lambda> = -1}
// of Phi(s), as root indices; requires s normalized.  The basis property
// (every member of Phi(s) is plus/minus a nonnegative combination) is
// verified, not assumed.
std::vector<int> basis_of_phi_s(const SemisimpleClass& s);

// Phi^+(s): the members of Phi(s) that are nonnegative combinations of
// basis_of_phi_s (computed by additive closure from the basis).
std::vector<int> phi_plus_of_s(const SemisimpleClass& s);

// A_W(s) = {c in A_G : c(lambda) = lambda mod Y, c(Phi^+(s)) = Phi^+(s)},
// computed by filtering A_G, never by enumerating W; requires s normalized.
std::vector<WeylElement> a_w_of_s(const SemisimpleClass& s,
                                  const FundamentalGroup& A);

// Everything the splitting construction needs about one normalized class.
struct CentralizerData {
  SemisimpleClass normalized;
  Conjugator conjugator;    // from the original lambda to the normalized one
  std::vector<int> phi_s;   // root indices
  std::vector<int> basis_s;
  std::vector<int> phi_plus_s;
  CartanType w0s_type;      // type of W^0(s) = W(Phi(s))
  Int w0s_order;
  std::vector<WeylElement> a_w_s;
};

CentralizerData centralizer_data(const SemisimpleClass& s,
                                 const FundamentalGroup& A);

// Direct enumeration oracle over W (|W| <= limit, else std::length_error):
// W(s) = {w : w(lambda) = lambda mod Y}, W^0(s) generated by the
// reflections in Phi(s), quotient reported as abelian invariant factors.
struct BruteForceCentralizer {
  Int w_s_order;
  Int w0_s_order;
  std::vector<Int> invariant_factors;  // of W(s)/W^0(s), ascending, d_i | d_{i+1}
};
BruteForceCentralizer brute_force_w_of_s(const SemisimpleClass& s,
                                         Int limit = Int(1000000));

// Sweep-friendly variant: the enumeration of W and the W^0(s) closures
// (keyed by the Phi(s) index set) are shared across calls for one datum.
struct BruteForceCache {
  std::vector<WeylElement> W;
  std::map<std::vector<int>, Int> w0_orders;
  std::map<std::vector<int>, std::shared_ptr<std::unordered_set<MatI, MatIHash, MatIEq>>>
      w0_sets;
};
BruteForceCentralizer brute_force_w_of_s(const SemisimpleClass& s, Int limit,
                                         BruteForceCache& cache);

// Invariant factors (ascending divisibility chain, 1s omitted) of a finite
// abelian group given by its multiplication table.
std::vector<Int> abelian_invariant_factors(
    const std::vector<std::vector<int>>& table);

// Invariant factors of a subgroup of W known to be abelian.
std::vector<Int> abelian_invariants_of(const std::vector<WeylElement>& els);

}  // namespace centsplit
