#include "centsplit/braid.hpp"

#include <algorithm>

namespace centsplit {

BraidWord BraidWord::operator*(const BraidWord& o) const {
  std::vector<BraidLetter> l = letters_;
  l.insert(l.end(), o.letters_.begin(), o.letters_.end());
  return BraidWord(*datum_, std::move(l));
}

BraidWord BraidWord::inverse() const {
  std::vector<BraidLetter> l(letters_.rbegin(), letters_.rend());
  for (auto& x : l) x.exp = -x.exp;
  return BraidWord(*datum_, std::move(l));
}

BraidWord BraidWord::reversed() const {
  std::vector<BraidLetter> l(letters_.rbegin(), letters_.rend());
  return BraidWord(*datum_, std::move(l));
}

BraidWord BraidWord::pow(int k) const {
  BraidWord base = k >= 0 ? *this : inverse();
  BraidWord out(*datum_);
  for (int i = 0; i < std::abs(k); ++i) out = out * base;
  return out;
}

WeylElement BraidWord::weyl_image() const {
  WeylElement w = WeylElement::identity(*datum_);
  for (auto& l : letters_) w = w * WeylElement::simple(*datum_, l.index);
  return w;
}

BraidWord lift_weyl(const WeylElement& w) {
  return positive_word(w.datum(), w.reduced_word());
}

BraidWord positive_word(const RootDatum& R, const std::vector<int>& word) {
  std::vector<BraidLetter> l;
  l.reserve(word.size());
  for (int i : word) l.push_back(BraidLetter{i, 1});
  return BraidWord(R, std::move(l));
}

bool GarsideNormalForm::operator==(const GarsideNormalForm& o) const {
  if (infimum != o.infimum || factors.size() != o.factors.size()) return false;
  for (size_t i = 0; i < factors.size(); ++i)
    if (factors[i] != o.factors[i]) return false;
  return true;
}

GarsideNormalForm garside_nf(const BraidWord& b) {
  const RootDatum& R = b.datum();
  const int n = R.rank_ss();
  WeylElement w0 = longest_element(R);

  // Rewrite as Delta^inf * (product of permutation factors): a negative
  // letter s^{-1} equals Delta^{-1} * (w0 s), and pulling Delta^{-1} to the
  // front twists everything to its left by conjugation with w0.
  int inf = 0;
  std::vector<WeylElement> factors;
  for (auto& l : b.letters()) {
    WeylElement s = WeylElement::simple(R, l.index);
    if (l.exp > 0) {
      factors.push_back(s);
    } else {
      --inf;
      for (auto& f : factors) f = w0 * f * w0;
      factors.push_back(w0 * s);
    }
  }

  // Left-weighting by local sliding: for a factor pair (u, v), any simple
  // left descent of v that is not a right descent of u moves across.
  bool changed = true;
  while (changed) {
    changed = false;
    for (size_t i = 0; i + 1 < factors.size(); ++i) {
      WeylElement &u = factors[i], &v = factors[i + 1];
      for (;;) {
        int pick = -1;
        for (int s = 0; s < n; ++s)
          if (v.left_descent(s) && !u.right_descent(s)) {
            pick = s;
            break;
          }
        if (pick < 0) break;
        WeylElement s = WeylElement::simple(R, pick);
        u = u * s;
        v = s * v;
        changed = true;
      }
    }
  }

  GarsideNormalForm nf;
  nf.infimum = inf;
  for (auto& f : factors) {
    if (f.is_identity()) continue;
    nf.factors.push_back(f);
  }
  size_t lead = 0;
  while (lead < nf.factors.size() && nf.factors[lead] == w0) {
    ++nf.infimum;
    ++lead;
  }
  nf.factors.erase(nf.factors.begin(), nf.factors.begin() + lead);
  return nf;
}

bool braid_equal(const BraidWord& a, const BraidWord& b) {
  return garside_nf(a) == garside_nf(b);
}

}  // namespace centsplit
