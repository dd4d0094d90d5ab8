#include "centsplit/fundgroup.hpp"

#include <deque>
#include <stdexcept>

namespace centsplit {

namespace {

// Canonical representative mod Q^vee = Z^n: coordinates in [0,1).
VecQ mod_coroot_lattice(const VecQ& v) {
  VecQ r(v.size());
  for (Eigen::Index i = 0; i < v.size(); ++i) r[i] = frac(v[i]);
  return r;
}

}  // namespace

FundamentalGroup::FundamentalGroup(const RootDatum& R) : datum_(&R) {
  const int n = R.rank_ss();
  nodes_.reserve(n + R.type().components.size());
  for (int i = 0; i < n; ++i) {
    VecI e = VecI::Zero(n);
    e[i] = 1;
    nodes_.push_back(e);
  }
  for (int h : R.highest_root_indices()) nodes_.push_back(-R.roots()[h].root);

  for (int j : R.minuscule_nodes()) {
    const auto [b, e] = R.component_nodes(R.node_component(j));
    std::vector<int> S, Sj;
    for (int i = b; i < e; ++i) {
      S.push_back(i);
      if (i != j) Sj.push_back(i);
    }
    WeylElement c = longest_element(R, S) * longest_element(R, Sj);
    node_permutation(c);  // throws if c fails to stabilize the node set
    generators_.push_back(c);
    generator_nodes_.push_back(j);
  }

  // Closure under right multiplication by generators, propagating the
  // varpi_check class varpi(g c_j) = varpi(g) - varpi_j^vee mod Q^vee and
  // checking consistency on revisits (this certifies varpi_check is a
  // well-defined homomorphism on A).
  const WeylElement id = WeylElement::identity(R);
  varpi_.emplace(id, VecQ::Zero(R.rank()));
  elements_.push_back(id);
  std::deque<WeylElement> queue{id};
  while (!queue.empty()) {
    WeylElement g = queue.front();
    queue.pop_front();
    const VecQ vg = varpi_.at(g);
    for (std::size_t k = 0; k < generators_.size(); ++k) {
      WeylElement h = g * generators_[k];
      VecQ vh =
          mod_coroot_lattice(vg - R.fundamental_coweight(generator_nodes_[k]));
      auto it = varpi_.find(h);
      if (it == varpi_.end()) {
        varpi_.emplace(h, vh);
        elements_.push_back(h);
        queue.push_back(h);
      } else if (!same_entries(it->second, vh)) {
        throw VerificationError(
            "fundamental_group: varpi_check is not well defined");
      }
    }
  }

  if (Int(elements_.size()) != R.connection_index())
    throw VerificationError(
        "fundamental_group: |A| differs from the connection index");
}

bool FundamentalGroup::contains(const WeylElement& a) const {
  return varpi_.find(a) != varpi_.end();
}

std::vector<int> FundamentalGroup::node_permutation(
    const WeylElement& a) const {
  std::vector<int> perm;
  perm.reserve(nodes_.size());
  for (const VecI& r : nodes_) {
    VecI img = a.apply_root_coords(r);
    int found = -1;
    for (std::size_t k = 0; k < nodes_.size(); ++k) {
      if (same_entries(nodes_[k], img)) {
        found = static_cast<int>(k);
        break;
      }
    }
    if (found < 0)
      throw VerificationError(
          "node_permutation: element does not stabilize the extended node "
          "set");
    perm.push_back(found);
  }
  return perm;
}

VecQ FundamentalGroup::varpi_check(const WeylElement& a) const {
  auto it = varpi_.find(a);
  if (it == varpi_.end())
    throw std::invalid_argument("varpi_check: element not in A");
  return it->second;
}

Int FundamentalGroup::element_order(const WeylElement& a) const {
  WeylElement acc = a;
  Int n = 1;
  while (!acc.is_identity()) {
    acc = acc * a;
    ++n;
  }
  return n;
}

CenterElement FundamentalGroup::iota(const WeylElement& a) const {
  const Int& p = datum_->characteristic();
  const VecQ v = varpi_check(a);
  if (p > 0 && element_order(a) % p == 0)
    throw std::invalid_argument("iota: element order divisible by p");
  const Lattice Q = Lattice::standard(datum_->rank());
  return CenterElement{Q.p_prime_part(v, p)};
}

std::vector<WeylElement> FundamentalGroup::a_sub_G() const {
  std::vector<WeylElement> out;
  for (const WeylElement& a : elements_) {
    if (datum_->Y().contains(varpi_.at(a))) out.push_back(a);
  }
  return out;
}

}  // namespace centsplit
