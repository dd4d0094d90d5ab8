#pragma once

#include <memory>
#include <string>
#include <unordered_map>
#include <vector>

#include "centsplit/lattice.hpp"
#include "centsplit/numeric.hpp"

namespace centsplit {

struct CartanComponent {
  char family;  // 'A'..'G'
  int rank;
};

// Cartan type: irreducible components plus a central torus rank.
struct CartanType {
  std::vector<CartanComponent> components;
  int central_rank = 0;

  int semisimple_rank() const;
  std::string name() const;
  bool operator==(const CartanType& o) const;
};

struct Root {
  VecI root;    // simple-root coordinates (semisimple block)
  VecI coroot;  // simple-coroot coordinates (semisimple block)
  bool positive;
  int component;
  std::int64_t height;  // sum of root coordinates
};

// Root datum: Cartan type + cocharacter lattice Y with Q^vee <= Y <= P^vee,
// in simple-coroot (+ central) coordinates, with ambient characteristic p.
//
// Simple-root labelling follows Bourbaki diagrams except that types B and C
// are indexed from the end carrying the double bond (node 1 is short in B,
// long in C) and type D forks at node 3 (arms 1 and 2).
class RootDatum {
 public:
  RootDatum(CartanType type, Lattice Y, Int p = 0);

  const CartanType& type() const { return type_; }
  int rank_ss() const { return n_ss_; }
  int rank() const { return n_ss_ + type_.central_rank; }
  const Int& characteristic() const { return p_; }
  const Lattice& Y() const { return Y_; }
  const Lattice& coroot_lattice() const { return Q_; }
  const Lattice& coweight_lattice() const { return P_; }

  // C(i,j) = <alpha_j, alpha_i^vee>.
  const MatI& cartan_matrix() const { return cartan_; }

  const std::vector<Root>& roots() const { return roots_; }
  int num_positive_roots() const { return static_cast<int>(roots_.size()) / 2; }
  // Index into roots() of the root with the given root coordinates, or -1.
  int root_index(const VecI& root_coords) const;

  // <alpha, lambda> for alpha in simple-root coordinates and lambda in
  // simple-coroot (+ central) coordinates.
  Rat pairing(const VecI& root_coords, const VecQ& lambda) const;
  Rat pairing(const Root& alpha, const VecQ& lambda) const {
    return pairing(alpha.root, lambda);
  }
  // <alpha, beta^vee> for a root and a coroot.
  std::int64_t root_coroot_pairing(const VecI& root_coords,
                                   const VecI& coroot_coords) const;

  // Half-sum of positive coroots, padded with central zeros.
  const VecQ& rho_check() const { return rho_check_; }
  // Half-sum of positive coroots of the parabolic subsystem spanned by I
  // (0-based simple indices).
  VecQ rho_check_parabolic(const std::vector<int>& I) const;

  // One highest root per component, in component order.
  const std::vector<int>& highest_root_indices() const { return highest_; }

  // Fundamental coweight at node j (0-based), padded with central zeros.
  const VecQ& fundamental_coweight(int j) const { return coweights_[j]; }

  // Nodes j where the highest root of j's component has coefficient 1.
  const std::vector<int>& minuscule_nodes() const { return minuscule_; }

  // Connection index [P^vee : Q^vee].
  const Int& connection_index() const { return connection_index_; }

  // Component id of simple node j; node range [begin,end) of component k.
  int node_component(int j) const { return node_component_[j]; }
  std::pair<int, int> component_nodes(int k) const { return comp_range_[k]; }

  // Canonical torus class of v in (Y (x) Q / Y), projected to its p'-part.
  VecQ torus_class(const VecQ& v) const;

 private:
  void build_cartan();
  void enumerate_roots();
  void build_coweights();

  CartanType type_;
  int n_ss_;
  MatI cartan_;
  Lattice Y_;
  Lattice Q_;   // coroot lattice + central block, = Z^n
  Lattice P_;   // coweight lattice + central block
  Int p_;
  std::vector<Root> roots_;
  std::unordered_map<VecI, int, VecIHash, VecIEq> root_lookup_;
  VecQ rho_check_;
  std::vector<VecQ> coweights_;
  std::vector<int> highest_;
  std::vector<int> minuscule_;
  std::vector<int> node_component_;
  std::vector<std::pair<int, int>> comp_range_;
  Int connection_index_;
};

// Standard isogenies of a semisimple type: simply connected, adjoint, and
// one intermediate lattice per proper nontrivial subgroup of P^vee/Q^vee.
struct IsogenyFamily {
  std::shared_ptr<RootDatum> sc;
  std::shared_ptr<RootDatum> ad;
  std::vector<std::shared_ptr<RootDatum>> intermediate;

  std::vector<std::shared_ptr<RootDatum>> all() const;
};
IsogenyFamily standard_isogenies(const CartanType& type, Int p = 0);

// Exact rational Gaussian inverse.
MatQ rational_inverse(const MatQ& m);

CartanType parse_cartan_type(const std::string& s);

// Datum grammar: TYPE[:ISOGENY][;p=P] with ISOGENY one of
//   sc | ad | lattice(r1c1,r1c2,...|r2c1,...)
// e.g. "D4:sc", "A3:ad;p=2", "A1:lattice(1/2)".  lattice(...) rows are
// generators adjoined to Q^vee.  Default isogeny: sc.
std::shared_ptr<RootDatum> parse_datum(const std::string& s);

}  // namespace centsplit
