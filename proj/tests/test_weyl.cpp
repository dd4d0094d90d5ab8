#include "doctest.h"

#include "centsplit/weyl.hpp"

using namespace centsplit;

TEST_CASE("weyl group orders by enumeration vs product formula") {
  for (const char* name : {"A3:sc", "B3:sc", "C2:sc", "D4:sc", "G2:sc"}) {
    auto R = parse_datum(name);
    CHECK(Int(enumerate_weyl(*R).size()) == weyl_order(R->type()));
  }
  CHECK(weyl_order(parse_cartan_type("E8")) == Int("696729600"));
  CHECK(weyl_order(parse_cartan_type("F4")) == 1152);
}

TEST_CASE("length, descents, reduced words") {
  auto R = parse_datum("B3:sc");
  for (const WeylElement& w : enumerate_weyl(*R)) {
    std::vector<int> word = w.reduced_word();
    CHECK(static_cast<int>(word.size()) == w.length());
    CHECK(product_of_word(*R, word) == w);
    CHECK((w.inverse() * w).is_identity());
    // Descent characterization: l(ws_i) < l(w) iff i is a right descent.
    for (int i = 0; i < R->rank_ss(); ++i) {
      WeylElement ws = w * WeylElement::simple(*R, i);
      CHECK((ws.length() < w.length()) == w.right_descent(i));
    }
  }
}

TEST_CASE("longest element properties") {
  for (const char* name : {"A4:sc", "C3:sc", "D4:sc", "F4:sc"}) {
    auto R = parse_datum(name);
    WeylElement w0 = longest_element(*R);
    CHECK(w0.length() == R->num_positive_roots());
    CHECK((w0 * w0).is_identity());
    // w0 sends all simple roots to negative roots.
    for (int i = 0; i < R->rank_ss(); ++i) {
      VecI simple = VecI::Zero(R->rank_ss());
      simple[i] = 1;
      VecI img = w0.apply_root_coords(simple);
      bool negative = true;
      for (int j = 0; j < img.size(); ++j) negative = negative && img[j] <= 0;
      CHECK(negative);
    }
  }
}

TEST_CASE("parabolic longest elements") {
  auto R = parse_datum("A4:sc");
  WeylElement wI = longest_element(*R, {0, 1});  // A2 parabolic
  CHECK(wI.length() == 3);
  CHECK(longest_element(*R, {}).is_identity());
}

TEST_CASE("reflection in a non-simple root") {
  auto R = parse_datum("A2:sc");
  const Root& theta = R->roots()[R->highest_root_indices()[0]];
  WeylElement s = WeylElement::reflection(*R, theta);
  CHECK((s * s).is_identity());
  CHECK(s.length() == 3);  // s_theta = s1 s2 s1 in A2
}

TEST_CASE("subsystem classification") {
  auto R = parse_datum("B3:sc");
  // Roots away from node 1 (the short node in the reversed labels) form
  // the long A2 parabolic on {alpha_2, alpha_3}.
  std::vector<int> idx;
  for (int k = 0; k < static_cast<int>(R->roots().size()); ++k)
    if (R->roots()[k].root[0] == 0) idx.push_back(k);
  CHECK(idx.size() == 6);
  CHECK(classify_subsystem(*R, idx).name() == "A2");
  CHECK(classify_subsystem(*R, {}).semisimple_rank() == 0);
}
