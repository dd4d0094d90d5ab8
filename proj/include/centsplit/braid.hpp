#pragma once

#include <vector>

#include "centsplit/weyl.hpp"

namespace centsplit {

struct BraidLetter {
  int index;  // simple index, 0-based
  int exp;    // +1 or -1
};

// Signed word in the Artin generators of the braid group B(W).
class BraidWord {
 public:
  explicit BraidWord(const RootDatum& R) : datum_(&R) {}
  BraidWord(const RootDatum& R, std::vector<BraidLetter> letters)
      : datum_(&R), letters_(std::move(letters)) {}

  const RootDatum& datum() const { return *datum_; }
  const std::vector<BraidLetter>& letters() const { return letters_; }
  bool empty() const { return letters_.empty(); }

  BraidWord operator*(const BraidWord& o) const;
  BraidWord inverse() const;
  // The anti-automorphism extending the identity on the generators:
  // reverses the letter order, keeping exponents.
  BraidWord reversed() const;
  BraidWord pow(int k) const;

  // Image in W (the projection is a group morphism).
  WeylElement weyl_image() const;

 private:
  const RootDatum* datum_;
  std::vector<BraidLetter> letters_;
};

// Canonical lift w -> bold w: the positive word of the deterministic
// reduced expression.
BraidWord lift_weyl(const WeylElement& w);
BraidWord positive_word(const RootDatum& R, const std::vector<int>& word);

// Left-greedy Garside normal form Delta^infimum * f_1 ... f_r with
// left-weighted non-trivial factors (never Delta).
struct GarsideNormalForm {
  int infimum = 0;
  std::vector<WeylElement> factors;

  bool operator==(const GarsideNormalForm& o) const;
  bool operator!=(const GarsideNormalForm& o) const { return !(*this == o); }
};

GarsideNormalForm garside_nf(const BraidWord& b);

// Equality in the braid group.
bool braid_equal(const BraidWord& a, const BraidWord& b);

}  // namespace centsplit
