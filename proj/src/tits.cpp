#include "centsplit/tits.hpp"

#include <stdexcept>
#include <utility>

namespace centsplit {

namespace {

// Torus part of sigma(u) * sigma(w) relative to the sigma-section: fold the
// reduced word of w into u from the left, adding (us)(alpha_s^vee/2)
// whenever the length drops.
VecQ section_cocycle(const RootDatum& R, const WeylElement& u,
                     const WeylElement& w) {
  VecQ c = VecQ::Zero(R.rank());
  WeylElement cur = u;
  for (int s : w.reduced_word()) {
    const bool drop = cur.right_descent(s);
    cur = cur * WeylElement::simple(R, s);
    if (drop) c += cur.apply(half_coroot(R, s));
  }
  return R.torus_class(c);
}

}  // namespace

VecQ half_coroot(const RootDatum& R, int i) {
  VecQ v = VecQ::Zero(R.rank());
  v(i) = Rat(1, 2);
  return v;
}

TitsElement TitsElement::identity(const RootDatum& R) {
  return TitsElement(&R, VecQ::Zero(R.rank()), WeylElement::identity(R));
}

TitsElement TitsElement::from_parts(const RootDatum& R, const VecQ& t,
                                    WeylElement w) {
  return TitsElement(&R, R.torus_class(t), std::move(w));
}

TitsElement TitsElement::torus(const RootDatum& R, const VecQ& t) {
  return from_parts(R, t, WeylElement::identity(R));
}

TitsElement TitsElement::operator*(const TitsElement& o) const {
  const RootDatum& R = *datum_;
  VecQ t = t_ + w_.apply(o.t_) + section_cocycle(R, w_, o.w_);
  return TitsElement(datum_, R.torus_class(t), w_ * o.w_);
}

TitsElement TitsElement::inverse() const {
  const RootDatum& R = *datum_;
  const WeylElement wi = w_.inverse();
  // sigma(w)^{-1} = (-c, w^{-1}) with c the torus part of sigma(w^{-1}) sigma(w).
  const VecQ c = section_cocycle(R, wi, w_);
  VecQ t = -c + wi.apply(-t_);
  return TitsElement(datum_, R.torus_class(t), wi);
}

TitsElement TitsElement::pow(long long k) const {
  TitsElement base = k >= 0 ? *this : inverse();
  long long e = k >= 0 ? k : -k;
  TitsElement acc = identity(*datum_);
  while (e > 0) {
    if (e & 1) acc = acc * base;
    base = base * base;
    e >>= 1;
  }
  return acc;
}

TitsElement TitsElement::conjugate_by(const TitsElement& g) const {
  return g * *this * g.inverse();
}

Int TitsElement::order() const {
  TitsElement acc = *this;
  Int n = 1;
  while (!acc.is_identity()) {
    acc = acc * *this;
    ++n;
    if (n > Int(100000000))
      throw std::runtime_error("TitsElement::order: runaway iteration");
  }
  return n;
}

TitsElement sigma(const RootDatum& R, const WeylElement& w) {
  return TitsElement::from_parts(R, VecQ::Zero(R.rank()), w);
}

TitsElement ts(const RootDatum& R, const BraidWord& b) {
  TitsElement acc = TitsElement::identity(R);
  for (const BraidLetter& l : b.letters()) {
    TitsElement g = sigma(R, WeylElement::simple(R, l.index));
    acc = acc * (l.exp > 0 ? g : g.inverse());
  }
  return acc;
}

VecQ adams_vogan(const RootDatum& R, const BraidWord& b) {
  const TitsElement z = ts(R, b) * ts(R, b.reversed());
  if (!z.weyl_part().is_identity())
    throw VerificationError("adams_vogan: ts(b) ts(~b) has nontrivial Weyl part");
  const WeylElement w = b.weyl_image();
  const VecQ rho = R.rho_check();
  const VecQ expected = R.torus_class((rho - w.apply(rho)) / Rat(2));
  if (!same_entries(z.torus_part(), expected))
    throw VerificationError("adams_vogan: torus class mismatch");
  return z.torus_part();
}

VecQ involution_torus(const RootDatum& R, const std::vector<int>& I) {
  const WeylElement w0 = longest_element(R);
  const WeylElement wI = longest_element(R, I);
  const TitsElement z = sigma(R, wI * w0) * sigma(R, w0 * wI);
  if (!z.weyl_part().is_identity())
    throw VerificationError("involution_torus: nontrivial Weyl part");
  const VecQ expected = R.torus_class(R.rho_check() - R.rho_check_parabolic(I));
  if (!same_entries(z.torus_part(), expected))
    throw VerificationError("involution_torus: torus class mismatch");
  return z.torus_part();
}

}  // namespace centsplit
