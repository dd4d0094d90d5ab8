#include "centsplit/verify.hpp"

#include <algorithm>
#include <random>
#include <set>
#include <stdexcept>
#include <unordered_set>

#include "centsplit/braid.hpp"

namespace centsplit {

bool SuiteResult::passed() const { return failures() == 0; }

long long SuiteResult::failures() const {
  long long f = 0;
  for (const CheckRecord& c : checks)
    if (!c.pass) ++f;
  return f;
}

std::vector<std::string> catalog_types() {
  return {"A1", "A2", "A3", "A4", "A5", "A6", "A7", "B2", "B3", "B4",
          "C2", "C3", "C4", "D4", "D5", "D6", "E6", "E7", "E8", "F4", "G2"};
}

std::vector<std::string> available_suites() {
  return {"adams-vogan", "involution", "flat",     "braid",
          "theorem1",    "c-matrix",   "theorem2"};
}

namespace {

void record(SuiteResult& r, std::string key, bool pass) {
  r.checks.push_back(CheckRecord{std::move(key), pass});
}

// Run `f`; any VerificationError (or unexpected exception) fails the case.
template <typename F>
void check(SuiteResult& r, const std::string& key, F&& f) {
  bool ok = false;
  try {
    std::forward<F>(f)();
    ok = true;
  } catch (const std::exception&) {
    ok = false;
  }
  record(r, key, ok);
}

std::string word_key(const std::vector<int>& word) {
  std::string s;
  for (int i : word) s += std::to_string(i + 1);
  return s;
}

// Labelled standard isogenies of a type, deduplicated by lattice.
std::vector<std::pair<std::string, std::shared_ptr<RootDatum>>> isogeny_list(
    const std::string& type, const Int& p) {
  IsogenyFamily fam = standard_isogenies(parse_cartan_type(type), p);
  std::vector<std::pair<std::string, std::shared_ptr<RootDatum>>> out;
  out.emplace_back("sc", fam.sc);
  for (std::size_t i = 0; i < fam.intermediate.size(); ++i)
    out.emplace_back("im" + std::to_string(i + 1), fam.intermediate[i]);
  if (fam.ad->Y() != fam.sc->Y()) out.emplace_back("ad", fam.ad);
  return out;
}

void sort_checks(SuiteResult& r) {
  std::stable_sort(r.checks.begin(), r.checks.end(),
                   [](const CheckRecord& a, const CheckRecord& b) {
                     return a.key < b.key;
                   });
}

// ---------------------------------------------------------------------
// Suite: Adams-Vogan identity ts(b) ts(~b) = (rho - w(rho))/2.

SuiteResult suite_adams_vogan(unsigned seed) {
  SuiteResult r{"adams-vogan", {}};
  for (const std::string& type :
       {"A1", "A2", "A3", "A4", "B2", "B3", "B4", "C2", "C3", "C4", "D4",
        "F4", "G2"}) {
    auto R = parse_datum(type + ":sc");
    for (const WeylElement& w : enumerate_weyl(*R)) {
      check(r, "exhaustive/" + type + "/w=" + word_key(w.reduced_word()),
            [&] { adams_vogan(*R, lift_weyl(w)); });
    }
  }
  std::mt19937 rng(seed);
  for (const std::string& type : {"D6", "E6", "E7"}) {
    auto R = parse_datum(type + ":sc");
    std::uniform_int_distribution<int> len_dist(1, 30);
    std::uniform_int_distribution<int> idx_dist(0, R->rank_ss() - 1);
    std::uniform_int_distribution<int> sign_dist(0, 1);
    for (int i = 0; i < 1000; ++i) {
      std::vector<BraidLetter> letters;
      int len = len_dist(rng);
      for (int j = 0; j < len; ++j)
        letters.push_back(BraidLetter{idx_dist(rng), sign_dist(rng) ? 1 : -1});
      BraidWord b(*R, letters);
      char buf[16];
      std::snprintf(buf, sizeof buf, "%04d", i);
      check(r, "random/" + type + "/" + buf, [&] { adams_vogan(*R, b); });
    }
  }
  sort_checks(r);
  return r;
}

// ---------------------------------------------------------------------
// Suite: sigma(w_I w_0) sigma(w_0 w_I) = rho - rho_I, all I, rank <= 4.

SuiteResult suite_involution() {
  SuiteResult r{"involution", {}};
  for (const std::string& type :
       {"A1", "A2", "A3", "A4", "B2", "B3", "B4", "C2", "C3", "C4", "D4",
        "F4", "G2"}) {
    auto R = parse_datum(type + ":sc");
    const int n = R->rank_ss();
    for (int mask = 0; mask < (1 << n); ++mask) {
      std::vector<int> I;
      for (int i = 0; i < n; ++i)
        if (mask & (1 << i)) I.push_back(i);
      check(r, "involution/" + type + "/I=" + word_key(I),
            [&] { involution_torus(*R, I); });
    }
    check(r, "principal-involution/" + type, [&] {
      TitsElement sq = sigma(*R, longest_element(*R)).pow(2);
      if (!(sq == TitsElement::torus(*R, R->rho_check())))
        throw VerificationError("sigma(w0)^2 != rho_check");
    });
  }
  sort_checks(r);
  return r;
}

// ---------------------------------------------------------------------
// Suite: condition (flat) via both constructions, plus the A_n parity
// dichotomy and the E7 congruence.

SuiteResult suite_flat() {
  SuiteResult r{"flat", {}};
  for (const std::string& type : catalog_types()) {
    auto R = parse_datum(type + ":sc");
    FundamentalGroup A(*R);
    check(r, "flat/" + type, [&] { lift_products(flat_lift(*R, A), A); });
    check(r, "flat-generic/" + type,
          [&] { lift_products(flat_lift_generic(*R, A), A); });
  }
  for (int n = 1; n <= 7; ++n) {
    auto R = parse_datum("A" + std::to_string(n) + ":sc");
    check(r, "a-parity/A" + std::to_string(n), [&] {
      if (is_integral(R->rho_check()) != (n % 2 == 0))
        throw VerificationError("rho_check in Y iff n even fails");
    });
  }
  {
    auto R = parse_datum("E7:sc");
    check(r, "e7-congruence", [&] {
      VecQ v = VecQ::Zero(7);
      v[1] = v[4] = v[6] = Rat(1, 2);  // (alpha_2 + alpha_5 + alpha_7)/2
      if (!same_entries(R->torus_class(R->rho_check()), R->torus_class(v)))
        throw VerificationError("rho_check != (a2+a5+a7)/2 mod Y");
    });
  }
  sort_checks(r);
  return r;
}

// ---------------------------------------------------------------------
// Suite: braid identities in Garside normal form.

SuiteResult suite_braid() {
  SuiteResult r{"braid", {}};
  for (int n = 1; n <= 5; ++n) {
    std::string type = "A" + std::to_string(n);
    auto R = parse_datum(type + ":sc");
    FundamentalGroup A(*R);
    check(r, "a-coxeter/" + type, [&] {
      BraidWord bc = lift_weyl(A.generators()[0]);  // node 1 generator
      BraidWord bw0 = lift_weyl(longest_element(*R));
      if (!braid_equal(bc.pow(n + 1), bw0.pow(2)))
        throw VerificationError("c^{n+1} != w0^2");
    });
  }
  for (int n : {4, 6}) {
    std::string type = "D" + std::to_string(n);
    auto R = parse_datum(type + ":sc");
    FundamentalGroup A(*R);
    std::vector<int> alpha_word, beta_word, I;
    alpha_word.push_back(1);
    beta_word.push_back(0);
    for (int i = 2; i < n; ++i) {
      alpha_word.push_back(i);
      beta_word.push_back(i);
      I.push_back(i);
    }
    BraidWord balpha = positive_word(*R, alpha_word);
    BraidWord bbeta = positive_word(*R, beta_word);
    BraidWord bwI = lift_weyl(longest_element(*R, I));
    check(r, "d-intermediate-alpha/" + type, [&] {
      std::vector<int> J = I;
      J.insert(J.begin(), 1);  // {2,...,n} in 1-based labels
      BraidWord lhs = lift_weyl(longest_element(*R, J));
      if (!braid_equal(lhs, bwI * balpha) ||
          !braid_equal(lhs, balpha.reversed() * bwI))
        throw VerificationError("w_{2..n} != w_I alpha != ~alpha w_I");
    });
    check(r, "d-intermediate-beta/" + type, [&] {
      std::vector<int> J = I;
      J.insert(J.begin(), 0);  // {1,3,...,n}
      BraidWord lhs = lift_weyl(longest_element(*R, J));
      if (!braid_equal(lhs, bwI * bbeta) ||
          !braid_equal(lhs, bbeta.reversed() * bwI))
        throw VerificationError("w_{1,3..n} != w_I beta != ~beta w_I");
    });
    check(r, "d-klein-commute/" + type, [&] {
      BraidWord ba = lift_weyl(A.generators()[0]);
      BraidWord bb = lift_weyl(A.generators()[1]);
      BraidWord bc = lift_weyl(A.generators()[2]);
      if (!braid_equal(bc * ba * bc * bb, bc * bb * bc * ba))
        throw VerificationError("ca cb != cb ca");
    });
  }
  for (int n : {5, 7}) {
    std::string type = "D" + std::to_string(n);
    auto R = parse_datum(type + ":sc");
    FundamentalGroup A(*R);
    check(r, "d-tilde-invariance/" + type, [&] {
      std::vector<int> beta_word{0};
      for (int i = 2; i < n; ++i) beta_word.push_back(i);
      BraidWord bbeta = positive_word(*R, beta_word);
      BraidWord ba = lift_weyl(A.generators()[0]);
      BraidWord x = (bbeta.reversed() * ba * bbeta.reversed().inverse()).pow(2);
      if (!braid_equal(x.reversed(), x))
        throw VerificationError("(~beta a ~beta^{-1})^2 not ~-invariant");
    });
  }
  {
    auto R = parse_datum("E6:sc");
    FundamentalGroup A(*R);
    check(r, "e6-cubed", [&] {
      WeylElement c = A.generators().back();  // node 6 generator
      BraidWord bc = lift_weyl(c);
      BraidWord bw0 = lift_weyl(longest_element(*R));
      BraidWord bwJ = lift_weyl(longest_element(*R, {1, 2, 3, 4}));
      if (!braid_equal(bc.pow(3), bw0.pow(2) * bwJ.inverse() * bwJ.inverse()))
        throw VerificationError("c^3 != w0^2 wJ^{-2}");
    });
  }
  sort_checks(r);
  return r;
}

// ---------------------------------------------------------------------
// Suite: Theorem 1 sweep with brute-force oracle confirmation.

SuiteResult suite_theorem1(const Int& oracle_limit) {
  SuiteResult r{"theorem1", {}};
  for (const std::string& type : catalog_types()) {
    for (const auto& [label, R] : isogeny_list(type, 0)) {
      const std::string dname = type + ":" + label;
      LiftContext ctx = make_lift_context(*R);
      BruteForceCache cache;
      const bool oracle = weyl_order(R->type()) <= oracle_limit;
      for (const VecQ& lam : alcove_lambda_grid(*R, 4)) {
        const std::string key = dname + "/l=" + to_string(lam);
        SemisimpleClass s(*R, lam);
        bool cert_ok = true;
        std::vector<Int> invariants;
        std::size_t a_w_size = 0;
        try {
          SplittingCertificate cert = splitting_certificate(s, ctx);
          invariants = cert.a_g_s_invariants;
          a_w_size = cert.data.a_w_s.size();
          if (label == "sc" && a_w_size != 1)
            throw VerificationError("sc datum with nontrivial A_W(s)");
        } catch (const std::exception&) {
          cert_ok = false;
        }
        record(r, "certificate/" + key, cert_ok);
        if (oracle && cert_ok) {
          check(r, "oracle/" + key, [&] {
            BruteForceCentralizer bf =
                brute_force_w_of_s(s, oracle_limit, cache);
            if (bf.w_s_order != bf.w0_s_order * Int(a_w_size))
              throw VerificationError("|W(s)| != |W^0(s)| |A_W(s)|");
            if (bf.invariant_factors != invariants)
              throw VerificationError("invariant factor mismatch");
          });
        }
      }
    }
  }
  check(r, "spot/A1-ad-quarter", [&] {
    auto R = parse_datum("A1:ad");
    VecQ lam(1);
    lam[0] = Rat(1, 4);
    SplittingCertificate cert =
        splitting_certificate(SemisimpleClass(*R, lam));
    if (cert.a_g_s_invariants != std::vector<Int>{Int(2)})
      throw VerificationError("PGL2 at alpha^vee/4: A_G(s) != Z/2");
  });
  sort_checks(r);
  return r;
}

// ---------------------------------------------------------------------
// Suite: type C signed-permutation matrix oracle.

SuiteResult suite_c_matrix() {
  SuiteResult r{"c-matrix", {}};
  for (int n : {2, 3, 4}) {
    const std::string type = "C" + std::to_string(n);
    auto Rsc = parse_datum(type + ":sc");
    FundamentalGroup A(*Rsc);
    // Basis order e_n,...,e_1,e'_1,...,e'_n; pos(e_i) = n - i,
    // pos(e'_i) = n - 1 + i.
    auto pe = [n](int i) { return n - i; };
    auto pf = [n](int i) { return n - 1 + i; };
    const int N = 2 * n;
    auto unit = [&](int row, int col, const Int& c) {
      MatZ m = MatZ::Identity(N, N);
      m(row, col) += c;
      return m;
    };
    // Tits representatives n_j = x_alpha(1) x_{-alpha}(-1) x_alpha(1) for
    // alpha_1 = 2 eps_1 and alpha_j = eps_j - eps_{j-1}.
    std::vector<MatZ> nrep(n);
    nrep[0] = unit(pe(1), pf(1), 1) * unit(pf(1), pe(1), -1) *
              unit(pe(1), pf(1), 1);
    for (int j = 2; j <= n; ++j) {
      auto x = [&](const Int& c) {
        MatZ m = MatZ::Identity(N, N);
        m(pe(j), pe(j - 1)) += c;
        m(pf(j - 1), pf(j)) -= c;
        return m;
      };
      auto xm = [&](const Int& c) {
        MatZ m = MatZ::Identity(N, N);
        m(pe(j - 1), pe(j)) += c;
        m(pf(j), pf(j - 1)) -= c;
        return m;
      };
      nrep[j - 1] = x(1) * xm(-1) * x(1);
    }
    check(r, "braid-relations/" + type, [&] {
      for (int i = 0; i < n; ++i)
        for (int j = 0; j < i; ++j) {
          int m = (j == 0 && i == 1) ? 4 : (i == j + 1 ? 3 : 2);
          MatZ lhs = MatZ::Identity(N, N), rhs = lhs;
          for (int k = 0; k < m; ++k) {
            lhs = lhs * (k % 2 == 0 ? nrep[i] : nrep[j]);
            rhs = rhs * (k % 2 == 0 ? nrep[j] : nrep[i]);
          }
          if (!same_entries(lhs, rhs))
            throw VerificationError("matrix braid relation fails");
        }
    });
    WeylElement c = A.generators()[0];
    MatZ sc_mat = MatZ::Identity(N, N);
    for (int i : c.reduced_word()) sc_mat = sc_mat * nrep[i];
    MatZ sq = sc_mat * sc_mat;
    check(r, "sigma-c-squared/" + type, [&] {
      MatZ expect = MatZ::Identity(N, N) * Int(n % 2 == 0 ? 1 : -1);
      if (!same_entries(sq, expect))
        throw VerificationError("sigma(c)^2 != (-1)^n Id");
    });
    check(r, "abstract-match/" + type, [&] {
      VecQ t = (sigma(*Rsc, c) * sigma(*Rsc, c)).torus_part();
      // eps-coordinates: v_i = t_{i-1} - t_i (t_n = 0).
      MatZ D = MatZ::Zero(N, N);
      for (int i = 1; i <= n; ++i) {
        Rat v = t[i - 1] - (i < n ? t[i] : Rat(0));
        Rat two_v = 2 * v;
        if (!is_integer(two_v))
          throw VerificationError("torus class not 2-torsion");
        Int sign = num(two_v) % 2 == 0 ? 1 : -1;
        D(pe(i), pe(i)) = sign;
        D(pf(i), pf(i)) = sign;
      }
      if (!same_entries(sq, D))
        throw VerificationError("matrix sigma(c)^2 != abstract torus class");
    });
  }
  sort_checks(r);
  return r;
}

// ---------------------------------------------------------------------
// Suite: Theorem 2 sweep (Frobenius stability), the p = 2 path, and the
// iota non-equivariance negative control.

SuiteResult suite_theorem2() {
  SuiteResult r{"theorem2", {}};
  auto sweep = [&](const Int& p, const std::vector<Int>& qs,
                   const std::string& tag) {
    for (const std::string& type : catalog_types()) {
      for (const auto& [label, R] : isogeny_list(type, p)) {
        const std::string dname = type + ":" + label;
        LiftContext ctx = make_lift_context(*R);
        for (const VecQ& lam : alcove_lambda_grid(*R, 4)) {
          SemisimpleClass s(*R, lam);
          for (const Int& q : qs) {
            FrobeniusAction F{q};
            if (!centralizer_F_stable(s, F, *ctx.A_G)) continue;
            check(r,
                  tag + "/" + dname + "/q=" + q.str() + "/l=" + to_string(lam),
                  [&] { f_stable_splitting(s, F, ctx); });
          }
        }
      }
    }
  };
  sweep(0, {Int(3), Int(5), Int(7), Int(9), Int(27)}, "odd-q");
  sweep(2, {Int(2), Int(4), Int(8)}, "char2");
  check(r, "negative-control/iota-not-F-equivariant/A2:sc/q=2", [&] {
    auto R = parse_datum("A2:sc");
    FundamentalGroup A(*R);
    if (iota_F_equivariant(A, FrobeniusAction{Int(2)}))
      throw VerificationError("iota unexpectedly F-equivariant");
  });
  sort_checks(r);
  return r;
}

}  // namespace

std::vector<VecQ> alcove_lambda_grid(const RootDatum& R, int max_denominator) {
  const int n = R.rank_ss();
  const int N = R.rank();
  const int ncomp = static_cast<int>(R.type().components.size());
  // Marks: coefficient of the component's highest root on each node.
  std::vector<std::int64_t> mark(n);
  for (int k = 0; k < ncomp; ++k) {
    const Root& theta = R.roots()[R.highest_root_indices()[k]];
    const auto [b, e] = R.component_nodes(k);
    for (int i = b; i < e; ++i) mark[i] = theta.root[i];
  }
  std::set<std::string> seen;
  std::vector<VecQ> out;
  auto push = [&](const VecQ& lam) {
    if (seen.insert(to_string(lam)).second) out.push_back(lam);
  };
  for (int d = 1; d <= max_denominator; ++d) {
    // Kac labels k_i/d with sum over each component of m_i k_i <= d.
    std::vector<int> k(n, 0);
    std::vector<std::int64_t> used(ncomp, 0);
    int pos = 0;
    while (true) {
      if (pos == n) {
        VecQ lam = VecQ::Zero(N);
        for (int i = 0; i < n; ++i)
          if (k[i] > 0) lam += Rat(k[i], d) * R.fundamental_coweight(i);
        push(lam);
        --pos;
        if (pos < 0) break;
        used[R.node_component(pos)] -= mark[pos] * k[pos];
        ++k[pos];
        continue;
      }
      int comp = R.node_component(pos);
      if (used[comp] + mark[pos] * k[pos] > d) {
        k[pos] = 0;
        --pos;
        if (pos < 0) break;
        used[R.node_component(pos)] -= mark[pos] * k[pos];
        ++k[pos];
        continue;
      }
      used[comp] += mark[pos] * k[pos];
      ++pos;
      if (pos < n) k[pos] = 0;
    }
  }
  // All alcove vertices, whatever their denominator.
  for (int j = 0; j < n; ++j)
    push(VecQ(R.fundamental_coweight(j) / Rat(mark[j])));
  std::sort(out.begin(), out.end(), [](const VecQ& a, const VecQ& b) {
    return to_string(a) < to_string(b);
  });
  return out;
}

SuiteResult run_suite(const std::string& name, unsigned seed,
                      Int oracle_limit) {
  if (name == "adams-vogan") return suite_adams_vogan(seed);
  if (name == "involution") return suite_involution();
  if (name == "flat") return suite_flat();
  if (name == "braid") return suite_braid();
  if (name == "theorem1") return suite_theorem1(oracle_limit);
  if (name == "c-matrix") return suite_c_matrix();
  if (name == "theorem2") return suite_theorem2();
  throw std::invalid_argument("unknown suite: " + name);
}

std::vector<SuiteResult> run_suites(const std::string& selector, unsigned seed,
                                    Int oracle_limit) {
  std::vector<SuiteResult> out;
  if (selector == "all") {
    for (const std::string& s : available_suites())
      out.push_back(run_suite(s, seed, oracle_limit));
  } else {
    out.push_back(run_suite(selector, seed, oracle_limit));
  }
  return out;
}

}  // namespace centsplit
