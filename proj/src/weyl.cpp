#include "centsplit/weyl.hpp"

#include <algorithm>
#include <deque>
#include <unordered_set>

namespace centsplit {

WeylElement WeylElement::identity(const RootDatum& R) {
  MatI id = MatI::Identity(R.rank_ss(), R.rank_ss());
  return WeylElement(&R, id, id, id, id);
}

WeylElement WeylElement::simple(const RootDatum& R, int i) {
  const int n = R.rank_ss();
  const MatI& C = R.cartan_matrix();
  MatI mx = MatI::Identity(n, n), my = MatI::Identity(n, n);
  for (int j = 0; j < n; ++j) {
    mx(i, j) -= C(i, j);
    my(i, j) -= C(j, i);
  }
  return WeylElement(&R, mx, mx, my, my);  // involution
}

WeylElement WeylElement::reflection(const RootDatum& R, const Root& alpha) {
  const int n = R.rank_ss();
  const MatI& C = R.cartan_matrix();
  MatI mx = MatI::Identity(n, n), my = MatI::Identity(n, n);
  // <e_j, alpha^vee> = (C^T b)_j ; <alpha, e_j> = (C a)_j.
  for (int j = 0; j < n; ++j) {
    std::int64_t ctb = 0, ca = 0;
    for (int k = 0; k < n; ++k) {
      ctb += C(k, j) * alpha.coroot[k];
      ca += C(j, k) * alpha.root[k];
    }
    for (int i = 0; i < n; ++i) {
      mx(i, j) -= alpha.root[i] * ctb;
      my(i, j) -= alpha.coroot[i] * ca;
    }
  }
  return WeylElement(&R, mx, mx, my, my);  // involution
}

bool WeylElement::is_identity() const { return my_.isIdentity(); }

WeylElement WeylElement::operator*(const WeylElement& o) const {
  return WeylElement(datum_, mx_ * o.mx_, o.ix_ * ix_, my_ * o.my_,
                     o.iy_ * iy_);
}

WeylElement WeylElement::inverse() const {
  return WeylElement(datum_, ix_, mx_, iy_, my_);
}

int WeylElement::apply_root(int root_index) const {
  VecI img = mx_ * datum_->roots()[root_index].root;
  int idx = datum_->root_index(img);
  if (idx < 0) throw std::logic_error("Weyl action left the root set");
  return idx;
}

VecQ WeylElement::apply(const VecQ& lambda) const {
  const int n = datum_->rank(), nss = datum_->rank_ss();
  if (lambda.size() != n)
    throw std::invalid_argument("apply: dimension mismatch");
  VecQ out = lambda;
  for (int i = 0; i < nss; ++i) {
    Rat acc = 0;
    for (int j = 0; j < nss; ++j)
      if (my_(i, j) != 0) acc += Rat(my_(i, j)) * lambda[j];
    out[i] = acc;
  }
  return out;
}

int WeylElement::length() const {
  int l = 0;
  const auto& roots = datum_->roots();
  for (size_t i = 0; i < roots.size(); ++i) {
    if (!roots[i].positive) continue;
    VecI img = mx_ * roots[i].root;
    for (int j = 0; j < img.size(); ++j) {
      if (img[j] < 0) {
        ++l;
        break;
      }
      if (img[j] > 0) break;
    }
  }
  return l;
}

bool WeylElement::right_descent(int i) const {
  // w(alpha_i): column i of mx; roots have all coordinates of one sign.
  for (int j = 0; j < mx_.rows(); ++j) {
    if (mx_(j, i) < 0) return true;
    if (mx_(j, i) > 0) return false;
  }
  return false;
}

bool WeylElement::left_descent(int i) const {
  // l(s_i w) < l(w) iff w^{-1}(alpha_i) < 0: column i of ix.
  for (int j = 0; j < ix_.rows(); ++j) {
    if (ix_(j, i) < 0) return true;
    if (ix_(j, i) > 0) return false;
  }
  return false;
}

std::vector<int> WeylElement::reduced_word() const {
  std::vector<int> rev;
  WeylElement w = *this;
  const int n = datum_->rank_ss();
  for (;;) {
    int pick = -1;
    for (int i = 0; i < n; ++i)
      if (w.right_descent(i)) {
        pick = i;
        break;
      }
    if (pick < 0) break;
    w = w * simple(*datum_, pick);
    rev.push_back(pick);
  }
  if (!w.is_identity())
    throw std::logic_error("reduced_word: no descent on non-identity");
  return std::vector<int>(rev.rbegin(), rev.rend());
}

WeylElement product_of_word(const RootDatum& R, const std::vector<int>& word) {
  WeylElement w = WeylElement::identity(R);
  for (int i : word) w = w * WeylElement::simple(R, i);
  return w;
}

WeylElement longest_element(const RootDatum& R, const std::vector<int>& I) {
  WeylElement w = WeylElement::identity(R);
  for (;;) {
    int pick = -1;
    for (int i : I)
      if (!w.right_descent(i)) {
        pick = i;
        break;
      }
    if (pick < 0) break;
    w = w * WeylElement::simple(R, pick);
  }
  return w;
}

WeylElement longest_element(const RootDatum& R) {
  std::vector<int> all(R.rank_ss());
  for (int i = 0; i < R.rank_ss(); ++i) all[i] = i;
  return longest_element(R, all);
}

Int weyl_order(const CartanType& t) {
  Int order = 1;
  auto factorial = [](int k) {
    Int f = 1;
    for (int i = 2; i <= k; ++i) f *= i;
    return f;
  };
  for (auto& c : t.components) {
    switch (c.family) {
      case 'A': order *= factorial(c.rank + 1); break;
      case 'B':
      case 'C': order *= factorial(c.rank) << c.rank; break;
      case 'D': order *= factorial(c.rank) << (c.rank - 1); break;
      case 'E':
        order *= c.rank == 6 ? Int(51840)
                             : (c.rank == 7 ? Int(2903040) : Int(696729600));
        break;
      case 'F': order *= 1152; break;
      case 'G': order *= 12; break;
    }
  }
  return order;
}

std::vector<WeylElement> enumerate_weyl(const RootDatum& R, Int limit) {
  Int order = weyl_order(R.type());
  if (order > limit)
    throw std::length_error("Weyl group too large to enumerate: |W| = " +
                            order.str());
  std::vector<WeylElement> gens;
  for (int i = 0; i < R.rank_ss(); ++i)
    gens.push_back(WeylElement::simple(R, i));
  auto all = generated_subgroup(gens, limit);
  if (Int(all.size()) != order)
    throw std::logic_error("Weyl enumeration does not match order formula");
  return all;
}

std::vector<WeylElement> generated_subgroup(
    const std::vector<WeylElement>& gens, Int limit) {
  if (gens.empty()) return {};
  std::vector<WeylElement> out;
  std::unordered_set<MatI, MatIHash, MatIEq> seen;
  std::deque<WeylElement> queue;
  WeylElement id = WeylElement::identity(gens.front().datum());
  seen.insert(id.coroot_action());
  out.push_back(id);
  queue.push_back(id);
  while (!queue.empty()) {
    WeylElement w = queue.front();
    queue.pop_front();
    for (auto& g : gens) {
      WeylElement wg = w * g;
      if (seen.insert(wg.coroot_action()).second) {
        if (Int(out.size()) >= limit)
          throw std::length_error("generated subgroup exceeds limit");
        out.push_back(wg);
        queue.push_back(wg);
      }
    }
  }
  return out;
}

CartanType classify_subsystem(const RootDatum& R,
                              const std::vector<int>& root_indices) {
  CartanType out;
  if (root_indices.empty()) return out;
  const auto& roots = R.roots();
  std::unordered_set<VecI, VecIHash, VecIEq> members;
  for (int idx : root_indices) members.insert(roots[idx].root);
  for (int idx : root_indices) {
    VecI neg = -roots[idx].root;
    if (!members.count(neg))
      throw std::invalid_argument("subsystem not closed under negation");
  }
  // Closure under reflections.
  for (int ia : root_indices)
    for (int ib : root_indices) {
      std::int64_t pr = R.root_coroot_pairing(roots[ib].root, roots[ia].coroot);
      VecI img = roots[ib].root - pr * roots[ia].root;
      if (!members.count(img))
        throw std::invalid_argument("set is not a root subsystem");
    }

  // Simple system: positive members not expressible as a sum of two
  // positive members.
  std::vector<int> positives;
  for (int idx : root_indices)
    if (roots[idx].positive) positives.push_back(idx);
  std::sort(positives.begin(), positives.end());
  std::vector<int> simples;
  for (int ia : positives) {
    bool decomposable = false;
    for (int ib : positives) {
      VecI diff = roots[ia].root - roots[ib].root;
      bool pos = false, nonzero = false;
      for (int j = 0; j < diff.size(); ++j)
        if (diff[j] != 0) {
          nonzero = true;
          pos = diff[j] > 0;
          break;
        }
      if (nonzero && pos && members.count(diff)) {
        // check diff is positive as a member
        bool all_ok = true;
        for (int j = 0; j < diff.size(); ++j)
          if (diff[j] < 0) all_ok = false;
        if (all_ok) {
          decomposable = true;
          break;
        }
      }
    }
    if (!decomposable) simples.push_back(ia);
  }

  const int m = static_cast<int>(simples.size());
  MatI C(m, m);
  for (int i = 0; i < m; ++i)
    for (int j = 0; j < m; ++j)
      C(i, j) =
          R.root_coroot_pairing(roots[simples[j]].root, roots[simples[i]].coroot);

  // Split into graph components and classify each.
  std::vector<int> comp(m, -1);
  int ncomp = 0;
  for (int i = 0; i < m; ++i) {
    if (comp[i] >= 0) continue;
    std::deque<int> q{i};
    comp[i] = ncomp;
    while (!q.empty()) {
      int u = q.front();
      q.pop_front();
      for (int v = 0; v < m; ++v)
        if (v != u && C(u, v) != 0 && comp[v] < 0) {
          comp[v] = ncomp;
          q.push_back(v);
        }
    }
    ++ncomp;
  }

  for (int k = 0; k < ncomp; ++k) {
    std::vector<int> nodes;
    for (int i = 0; i < m; ++i)
      if (comp[i] == k) nodes.push_back(i);
    const int r = static_cast<int>(nodes.size());
    auto bond = [&](int u, int v) { return C(nodes[u], nodes[v]) * C(nodes[v], nodes[u]); };
    auto degree = [&](int u) {
      int d = 0;
      for (int v = 0; v < r; ++v)
        if (v != u && bond(u, v) != 0) ++d;
      return d;
    };
    char family = 0;
    int triple = -1, dbl_u = -1, dbl_v = -1, branch = -1;
    for (int u = 0; u < r; ++u)
      for (int v = u + 1; v < r; ++v) {
        if (bond(u, v) == 3) triple = u;
        if (bond(u, v) == 2) {
          dbl_u = u;
          dbl_v = v;
        }
      }
    for (int u = 0; u < r; ++u)
      if (degree(u) == 3) branch = u;

    if (triple >= 0) {
      family = 'G';
    } else if (dbl_u >= 0) {
      if (branch >= 0)
        throw std::invalid_argument("invalid subsystem Cartan graph");
      if (r >= 3 && degree(dbl_u) >= 2 && degree(dbl_v) >= 2) {
        family = 'F';
      } else {
        // Leaf endpoint of the double bond; short iff its coroot pairs to
        // -2 against the neighbour: C(leaf, other) = -2.
        int leaf = (r == 2) ? 0 : (degree(dbl_u) == 1 ? dbl_u : dbl_v);
        int other = (leaf == dbl_u) ? dbl_v : dbl_u;
        bool leaf_short = C(nodes[leaf], nodes[other]) == -2;
        if (r == 2)
          family = leaf_short ? 'B' : 'C';
        else
          family = leaf_short ? 'B' : 'C';
      }
    } else if (branch >= 0) {
      // Arm lengths from the branch node.
      std::vector<int> arms;
      for (int v = 0; v < r; ++v) {
        if (v == branch || bond(branch, v) == 0) continue;
        int len = 1, prev = branch, cur = v;
        for (;;) {
          int next = -1;
          for (int w2 = 0; w2 < r; ++w2)
            if (w2 != prev && w2 != cur && bond(cur, w2) != 0) next = w2;
          if (next < 0) break;
          prev = cur;
          cur = next;
          ++len;
        }
        arms.push_back(len);
      }
      std::sort(arms.begin(), arms.end());
      if (arms.size() != 3)
        throw std::invalid_argument("invalid branching in subsystem");
      if (arms[0] == 1 && arms[1] == 1)
        family = 'D';
      else if (arms[0] == 1 && arms[1] == 2 && arms[2] >= 2 && arms[2] <= 4)
        family = 'E';
      else
        throw std::invalid_argument("unrecognised simply-laced diagram");
    } else {
      family = 'A';
    }
    if ((family == 'F' && r != 4) || (family == 'G' && r != 2))
      throw std::invalid_argument("invalid exceptional subsystem rank");
    out.components.push_back(CartanComponent{family, r});
  }
  std::sort(out.components.begin(), out.components.end(),
            [](const CartanComponent& a, const CartanComponent& b) {
              if (a.family != b.family) return a.family < b.family;
              return a.rank < b.rank;
            });
  return out;
}

}  // namespace centsplit
