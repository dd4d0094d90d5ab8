#include "centsplit/centralizer.hpp"

#include <algorithm>
#include <deque>
#include <set>
#include <stdexcept>
#include <unordered_map>
#include <unordered_set>

namespace centsplit {

namespace {

// theta_k^vee in coroot + central coordinates.
VecQ highest_coroot(const RootDatum& R, int k) {
  const Root& theta = R.roots()[R.highest_root_indices()[k]];
  VecQ v = VecQ::Zero(R.rank());
  for (int i = 0; i < R.rank_ss(); ++i) v[i] = Rat(theta.coroot[i]);
  return v;
}

}  // namespace

SemisimpleClass::SemisimpleClass(const RootDatum& R, const VecQ& lambda)
    : datum_(&R) {
  if (lambda.size() != R.rank())
    throw std::invalid_argument("SemisimpleClass: lambda has wrong dimension");
  lambda_ = R.Y().p_prime_part(lambda, R.characteristic());
  projected_ = !R.Y().contains(lambda - lambda_);
}

bool SemisimpleClass::normalized() const {
  const RootDatum& R = *datum_;
  for (int i = 0; i < R.rank_ss(); ++i) {
    VecI e = VecI::Zero(R.rank_ss());
    e[i] = 1;
    if (R.pairing(e, lambda_) < 0) return false;
  }
  for (int h : R.highest_root_indices()) {
    if (R.pairing(R.roots()[h].root, lambda_) > 1) return false;
  }
  return true;
}

std::pair<SemisimpleClass, Conjugator> normalize_to_alcove(
    const SemisimpleClass& s) {
  const RootDatum& R = s.datum();
  const int n = R.rank_ss();
  const int ncomp = static_cast<int>(R.type().components.size());
  VecQ lam = s.lambda();
  WeylElement w = WeylElement::identity(R);
  VecQ mu = VecQ::Zero(R.rank());

  for (long long iter = 0;; ++iter) {
    if (iter > 1000000)
      throw std::runtime_error("normalize_to_alcove: did not terminate");
    int violated_simple = -1, violated_comp = -1;
    for (int i = 0; i < n; ++i) {
      VecI e = VecI::Zero(n);
      e[i] = 1;
      if (R.pairing(e, lam) < 0) {
        violated_simple = i;
        break;
      }
    }
    if (violated_simple < 0) {
      for (int k = 0; k < ncomp; ++k) {
        if (R.pairing(R.roots()[R.highest_root_indices()[k]].root, lam) > 1) {
          violated_comp = k;
          break;
        }
      }
    }
    if (violated_simple >= 0) {
      WeylElement si = WeylElement::simple(R, violated_simple);
      lam = si.apply(lam);
      mu = si.apply(mu);
      w = si * w;
    } else if (violated_comp >= 0) {
      const Root& theta = R.roots()[R.highest_root_indices()[violated_comp]];
      WeylElement st = WeylElement::reflection(R, theta);
      VecQ theta_check = highest_coroot(R, violated_comp);
      lam = st.apply(lam) + theta_check;
      mu = st.apply(mu) + theta_check;
      w = st * w;
    } else {
      break;
    }
  }

  // Postcondition self-check: lambda' = w(lambda) + mu with mu in Q^vee.
  if (!same_entries(lam, w.apply(s.lambda()) + mu))
    throw VerificationError("normalize_to_alcove: conjugator mismatch");
  for (Eigen::Index i = 0; i < mu.size(); ++i)
    if (!is_integer(mu[i]) || (i >= n && mu[i] != 0))
      throw VerificationError("normalize_to_alcove: translation not in Q^vee");

  SemisimpleClass out(R, lam);
  // Normalization moves within the same p'-class, so projection is a no-op.
  return {out, Conjugator{w, mu}};
}

std::vector<int> phi_of_s(const SemisimpleClass& s) {
  const RootDatum& R = s.datum();
  std::vector<int> out;
  for (std::size_t i = 0; i < R.roots().size(); ++i) {
    if (is_integer(R.pairing(R.roots()[i], s.lambda())))
      out.push_back(static_cast<int>(i));
  }
  return out;
}

std::vector<int> basis_of_phi_s(const SemisimpleClass& s) {
  if (!s.normalized())
    throw std::invalid_argument("basis_of_phi_s: class not normalized");
  const RootDatum& R = s.datum();
  std::vector<int> basis;
  for (int i = 0; i < R.rank_ss(); ++i) {
    VecI e = VecI::Zero(R.rank_ss());
    e[i] = 1;
    if (R.pairing(e, s.lambda()) == 0) basis.push_back(R.root_index(e));
  }
  for (int h : R.highest_root_indices()) {
    VecI lowest = -R.roots()[h].root;
    if (R.pairing(lowest, s.lambda()) == -1)
      basis.push_back(R.root_index(lowest));
  }
  // Verify the basis property: the additive closure must be exactly half
  // of Phi(s), with the other half its negatives.
  std::vector<int> plus = phi_plus_of_s(s);
  std::vector<int> phi = phi_of_s(s);
  if (2 * plus.size() != phi.size())
    throw VerificationError("basis_of_phi_s: basis does not span Phi(s)");
  std::set<int> all(phi.begin(), phi.end());
  std::set<int> half(plus.begin(), plus.end());
  for (int i : plus) {
    int neg = R.root_index(-R.roots()[i].root);
    if (half.count(neg) || !all.count(neg))
      throw VerificationError("basis_of_phi_s: closure is not a half-system");
  }
  return basis;
}

std::vector<int> phi_plus_of_s(const SemisimpleClass& s) {
  if (!s.normalized())
    throw std::invalid_argument("phi_plus_of_s: class not normalized");
  const RootDatum& R = s.datum();
  std::vector<int> basis;
  for (int i = 0; i < R.rank_ss(); ++i) {
    VecI e = VecI::Zero(R.rank_ss());
    e[i] = 1;
    if (R.pairing(e, s.lambda()) == 0) basis.push_back(R.root_index(e));
  }
  for (int h : R.highest_root_indices()) {
    VecI lowest = -R.roots()[h].root;
    if (R.pairing(lowest, s.lambda()) == -1)
      basis.push_back(R.root_index(lowest));
  }
  std::vector<int> phi = phi_of_s(s);
  std::set<int> phi_set(phi.begin(), phi.end());
  std::set<int> closure(basis.begin(), basis.end());
  bool grew = true;
  while (grew) {
    grew = false;
    std::vector<int> current(closure.begin(), closure.end());
    for (int g : current) {
      for (int b : basis) {
        VecI sum = R.roots()[g].root + R.roots()[b].root;
        int idx = R.root_index(sum);
        if (idx >= 0 && phi_set.count(idx) && closure.insert(idx).second)
          grew = true;
      }
    }
  }
  return {closure.begin(), closure.end()};
}

std::vector<WeylElement> a_w_of_s(const SemisimpleClass& s,
                                  const FundamentalGroup& A) {
  if (!s.normalized())
    throw std::invalid_argument("a_w_of_s: class not normalized");
  const RootDatum& R = s.datum();
  std::vector<int> plus = phi_plus_of_s(s);
  std::set<int> plus_set(plus.begin(), plus.end());
  std::vector<WeylElement> out;
  for (const WeylElement& c : A.a_sub_G()) {
    if (!R.Y().contains(c.apply(s.lambda()) - s.lambda())) continue;
    bool stable = true;
    for (int i : plus) {
      if (!plus_set.count(c.apply_root(i))) {
        stable = false;
        break;
      }
    }
    if (stable) out.push_back(c);
  }
  // Subgroup sanity: closure under multiplication.
  std::unordered_set<WeylElement, WeylHash,
                     std::equal_to<WeylElement>>
      members(out.begin(), out.end());
  for (const WeylElement& a : out)
    for (const WeylElement& b : out)
      if (!members.count(a * b))
        throw VerificationError("a_w_of_s: result is not a subgroup");
  return out;
}

CentralizerData centralizer_data(const SemisimpleClass& s,
                                 const FundamentalGroup& A) {
  auto [norm, conj] = normalize_to_alcove(s);
  std::vector<int> phi = phi_of_s(norm);
  CartanType type = classify_subsystem(s.datum(), phi);
  return CentralizerData{norm,
                         conj,
                         phi,
                         basis_of_phi_s(norm),
                         phi_plus_of_s(norm),
                         type,
                         weyl_order(type),
                         a_w_of_s(norm, A)};
}

std::vector<Int> abelian_invariant_factors(
    const std::vector<std::vector<int>>& table) {
  const int n = static_cast<int>(table.size());
  if (n <= 1) return {};
  // Identity element: the unique e with table[e][x] = x.
  int e = -1;
  for (int i = 0; i < n; ++i) {
    bool ok = true;
    for (int j = 0; j < n && ok; ++j) ok = table[i][j] == j;
    if (ok) {
      e = i;
      break;
    }
  }
  if (e < 0) throw std::invalid_argument("abelian_invariant_factors: no identity");
  auto order_of = [&](int a) {
    int x = a, o = 1;
    while (x != e) {
      x = table[x][a];
      ++o;
    }
    return o;
  };
  // Greedy cyclic decomposition: a maximal-order cyclic subgroup of a
  // finite abelian group is a direct summand; recurse on the quotient.
  int best = e, best_order = 1;
  for (int a = 0; a < n; ++a) {
    int o = order_of(a);
    if (o > best_order) {
      best = a;
      best_order = o;
    }
  }
  std::vector<int> cyc{e};
  {
    int x = best;
    while (x != e) {
      cyc.push_back(x);
      x = table[x][best];
    }
  }
  std::set<int> cyc_set(cyc.begin(), cyc.end());
  // Cosets of <best>.
  std::vector<int> coset_of(n, -1);
  std::vector<int> reps;
  for (int a = 0; a < n; ++a) {
    if (coset_of[a] >= 0) continue;
    int id = static_cast<int>(reps.size());
    reps.push_back(a);
    for (int c : cyc) coset_of[table[a][c]] = id;
  }
  std::vector<std::vector<int>> qt(reps.size(), std::vector<int>(reps.size()));
  for (std::size_t i = 0; i < reps.size(); ++i)
    for (std::size_t j = 0; j < reps.size(); ++j)
      qt[i][j] = coset_of[table[reps[i]][reps[j]]];
  std::vector<Int> rest = abelian_invariant_factors(qt);
  rest.push_back(Int(best_order));
  return rest;  // ascending divisibility: quotient factors divide best_order
}

std::vector<Int> abelian_invariants_of(const std::vector<WeylElement>& els) {
  std::unordered_map<WeylElement, int, WeylHash> index;
  for (std::size_t i = 0; i < els.size(); ++i)
    index.emplace(els[i], static_cast<int>(i));
  std::vector<std::vector<int>> table(els.size(),
                                      std::vector<int>(els.size()));
  for (std::size_t i = 0; i < els.size(); ++i) {
    for (std::size_t j = 0; j < els.size(); ++j) {
      auto it = index.find(els[i] * els[j]);
      if (it == index.end())
        throw std::invalid_argument("abelian_invariants_of: not closed");
      table[i][j] = it->second;
    }
  }
  return abelian_invariant_factors(table);
}

BruteForceCentralizer brute_force_w_of_s(const SemisimpleClass& s, Int limit) {
  BruteForceCache cache;
  return brute_force_w_of_s(s, limit, cache);
}

BruteForceCentralizer brute_force_w_of_s(const SemisimpleClass& s, Int limit,
                                         BruteForceCache& cache) {
  const RootDatum& R = s.datum();
  if (weyl_order(R.type()) > limit)
    throw std::length_error("brute_force_w_of_s: |W| exceeds limit");
  const int n = R.rank_ss();
  const int N = R.rank();

  // Integerized membership test for w(lambda) - lambda in Y: with
  // u = d * lambda integral and T = dT * (B^T)^{-1} for B the canonical
  // basis rows of Y, membership is T*(w(u) - u) = 0 mod dT*d.
  MatQ B(N, N);
  for (int i = 0; i < N; ++i)
    for (int j = 0; j < N; ++j)
      B(i, j) = Rat(R.Y().canonical_basis()(i, j)) / Rat(R.Y().denom());
  MatQ Minv = rational_inverse(B.transpose());
  Int dT = 1;
  for (int i = 0; i < N; ++i)
    for (int j = 0; j < N; ++j) dT = lcm_int(dT, den(Minv(i, j)));
  MatZ T(N, N);
  for (int i = 0; i < N; ++i)
    for (int j = 0; j < N; ++j) T(i, j) = num(Minv(i, j)) * (dT / den(Minv(i, j)));
  Int d = denominator_lcm(s.lambda());
  VecZ u(N);
  for (int i = 0; i < N; ++i) u[i] = num(s.lambda()[i]) * (d / den(s.lambda()[i]));
  const Int modulus = dT * d;

  if (cache.W.empty()) cache.W = enumerate_weyl(R, limit);
  const std::vector<WeylElement>& W = cache.W;
  std::vector<WeylElement> ws;
  for (const WeylElement& w : W) {
    const MatI& my = w.coroot_action();
    VecZ v = VecZ::Zero(N);
    for (int i = 0; i < n; ++i) {
      Int acc = -u[i];
      for (int j = 0; j < n; ++j) acc += Int(my(i, j)) * u[j];
      v[i] = acc;
    }
    bool member = true;
    for (int i = 0; i < N && member; ++i) {
      Int acc = 0;
      for (int j = 0; j < N; ++j) acc += T(i, j) * v[j];
      if (acc % modulus != 0) member = false;
    }
    if (member) ws.push_back(w);
  }

  // W^0(s): closure of the reflections in Phi(s), on coroot-action
  // matrices; cached per Phi(s) index set.
  std::vector<int> phi = phi_of_s(s);
  auto cached = cache.w0_sets.find(phi);
  if (cached == cache.w0_sets.end()) {
    auto set = std::make_shared<std::unordered_set<MatI, MatIHash, MatIEq>>();
    std::vector<MatI> gens;
    for (int idx : phi) {
      const Root& r = R.roots()[idx];
      if (!r.positive) continue;
      gens.push_back(WeylElement::reflection(R, r).coroot_action());
    }
    MatI id = MatI::Identity(n, n);
    set->insert(id);
    std::deque<MatI> queue{id};
    while (!queue.empty()) {
      MatI g = queue.front();
      queue.pop_front();
      for (const MatI& h : gens) {
        MatI prod = g * h;
        if (set->insert(prod).second) queue.push_back(prod);
      }
    }
    cached = cache.w0_sets.emplace(phi, std::move(set)).first;
    cache.w0_orders.emplace(phi, Int(cached->second->size()));
  }
  const std::unordered_set<MatI, MatIHash, MatIEq>& w0 = *cached->second;

  // Cosets of W^0(s) in W(s) and their (abelian) group structure.
  std::vector<WeylElement> reps;
  std::vector<int> coset_of(ws.size(), -1);
  for (std::size_t i = 0; i < ws.size(); ++i) {
    for (std::size_t k = 0; k < reps.size(); ++k) {
      if (w0.count((reps[k].inverse() * ws[i]).coroot_action())) {
        coset_of[i] = static_cast<int>(k);
        break;
      }
    }
    if (coset_of[i] < 0) {
      coset_of[i] = static_cast<int>(reps.size());
      reps.push_back(ws[i]);
    }
  }
  auto coset_index = [&](const WeylElement& w) {
    for (std::size_t k = 0; k < reps.size(); ++k)
      if (w0.count((reps[k].inverse() * w).coroot_action()))
        return static_cast<int>(k);
    throw VerificationError("brute_force_w_of_s: W^0(s) not normal in W(s)");
  };
  std::vector<std::vector<int>> table(reps.size(),
                                      std::vector<int>(reps.size()));
  for (std::size_t i = 0; i < reps.size(); ++i)
    for (std::size_t j = 0; j < reps.size(); ++j)
      table[i][j] = coset_index(reps[i] * reps[j]);

  return BruteForceCentralizer{Int(ws.size()), Int(w0.size()),
                               abelian_invariant_factors(table)};
}

}  // namespace centsplit
