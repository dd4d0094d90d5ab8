#pragma once

#include <unordered_map>
#include <vector>

#include "centsplit/weyl.hpp"

namespace centsplit {

// A p'-torsion class vanishing integrally on every root: an element of the
// center of the simply connected group, realized inside (Y_sc (x) Q)/Y_sc.
struct CenterElement {
  VecQ value;  // canonical representative mod Q^vee

  bool operator==(const CenterElement& o) const {
    return same_entries(value, o.value);
  }
};

// The group A = N_W(Pi cup {lowest roots}), i.e. the Weyl elements
// permuting the extended-diagram node set, generated per component by
// c_j = w_S w_{S \ {j}} at the minuscule nodes j.  Isomorphic to
// P^vee/Q^vee via varpi_check.
class FundamentalGroup {
 public:
  explicit FundamentalGroup(const RootDatum& R);

  const RootDatum& datum() const { return *datum_; }

  // One generator per minuscule node, in the order of R.minuscule_nodes().
  const std::vector<WeylElement>& generators() const { return generators_; }
  const std::vector<int>& generator_nodes() const { return generator_nodes_; }

  // All elements of A in the deterministic closure order (identity first).
  const std::vector<WeylElement>& elements() const { return elements_; }
  Int order() const { return Int(elements_.size()); }

  bool contains(const WeylElement& a) const;

  // The root coordinates of the extended node set: the simple roots
  // followed by the lowest root of each component.
  const std::vector<VecI>& extended_nodes() const { return nodes_; }

  // The permutation induced on extended_nodes(); throws VerificationError
  // if a does not stabilize the node set.
  std::vector<int> node_permutation(const WeylElement& a) const;

  // The class of a in P^vee/Q^vee (canonical representative with
  // coordinates in [0,1)); varpi_check(c_j) = -varpi_j^vee mod Q^vee.
  VecQ varpi_check(const WeylElement& a) const;

  // varpi_check followed by p'-projection; requires the order of a to be
  // coprime to p.
  CenterElement iota(const WeylElement& a) const;

  Int element_order(const WeylElement& a) const;

  // A_G = {a in A : varpi_check(a) in Y/Q^vee}.
  std::vector<WeylElement> a_sub_G() const;

 private:
  const RootDatum* datum_;
  std::vector<WeylElement> generators_;
  std::vector<int> generator_nodes_;
  std::vector<WeylElement> elements_;
  std::vector<VecI> nodes_;
  std::unordered_map<WeylElement, VecQ, WeylHash> varpi_;
};

}  // namespace centsplit
