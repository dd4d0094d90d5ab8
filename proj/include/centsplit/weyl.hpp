#pragma once

#include <cstddef>
#include <functional>
#include <vector>

#include "centsplit/rootdata.hpp"

namespace centsplit {

// Weyl group element, stored as its integer action matrices on simple-root
// coordinates (mx, for roots) and simple-coroot coordinates (my, for
// cocharacters).  The central block acts as the identity and is not stored.
class WeylElement {
 public:
  static WeylElement identity(const RootDatum& R);
  // Simple reflection s_i (0-based).
  static WeylElement simple(const RootDatum& R, int i);
  // Reflection in an arbitrary root.
  static WeylElement reflection(const RootDatum& R, const Root& alpha);

  const RootDatum& datum() const { return *datum_; }
  const MatI& root_action() const { return mx_; }
  const MatI& coroot_action() const { return my_; }

  bool is_identity() const;
  WeylElement operator*(const WeylElement& o) const;
  WeylElement inverse() const;
  bool operator==(const WeylElement& o) const {
    return same_entries(my_, o.my_);
  }
  bool operator!=(const WeylElement& o) const { return !(*this == o); }

  // Action on a root (by index into datum().roots()); returns the index of
  // the image root.
  int apply_root(int root_index) const;
  VecI apply_root_coords(const VecI& r) const { return mx_ * r; }
  // Action on a cocharacter in coroot + central coordinates.
  VecQ apply(const VecQ& lambda) const;

  // Number of positive roots sent to negative roots.
  int length() const;
  // l(w * s_i) < l(w), equivalently w(alpha_i) < 0.
  bool right_descent(int i) const;
  // l(s_i * w) < l(w), equivalently w^{-1}(alpha_i) < 0.
  bool left_descent(int i) const;

  // Deterministic reduced word: smallest right-descent index at each step.
  std::vector<int> reduced_word() const;

  std::size_t hash() const { return MatIHash{}(my_); }

 private:
  WeylElement(const RootDatum* d, MatI mx, MatI ix, MatI my, MatI iy)
      : datum_(d), mx_(std::move(mx)), ix_(std::move(ix)),
        my_(std::move(my)), iy_(std::move(iy)) {}
  const RootDatum* datum_;
  // Action and inverse action on root coords (mx, ix) and coroot coords
  // (my, iy); keeping inverses makes inversion and descent tests cheap.
  MatI mx_, ix_, my_, iy_;
};

struct WeylHash {
  std::size_t operator()(const WeylElement& w) const { return w.hash(); }
};

WeylElement product_of_word(const RootDatum& R, const std::vector<int>& word);

// Longest element of the parabolic subgroup generated by {s_i : i in I}.
WeylElement longest_element(const RootDatum& R, const std::vector<int>& I);
WeylElement longest_element(const RootDatum& R);

// |W| by the classical product formula.
Int weyl_order(const CartanType& t);

// All of W by orbit closure; refuses (throws std::length_error) if the
// classical order exceeds `limit`.
std::vector<WeylElement> enumerate_weyl(const RootDatum& R,
                                        Int limit = Int(1000000));

// Closure of a generating set; throws std::length_error past `limit`.
std::vector<WeylElement> generated_subgroup(
    const std::vector<WeylElement>& gens, Int limit = Int(1000000));

// Cartan type of a root subsystem (given by indices into R.roots(),
// closed under negation), via a simple system and Cartan-graph
// classification.  Also usable for the whole system.
CartanType classify_subsystem(const RootDatum& R,
                              const std::vector<int>& root_indices);

}  // namespace centsplit
