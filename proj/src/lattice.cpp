#include "centsplit/lattice.hpp"

#include <algorithm>

namespace centsplit {

namespace {

Int mod_pos(Int a, const Int& m) {
  Int r = a % m;
  if (r < 0) r += m;
  return r;
}

// Inverse of a mod m for gcd(a,m)=1.
Int mod_inverse(const Int& a, const Int& m) {
  Int old_r = mod_pos(a, m), r = m;
  Int old_s = 1, s = 0;
  while (r != 0) {
    Int q = old_r / r;
    Int t = old_r - q * r;
    old_r = r;
    r = t;
    t = old_s - q * s;
    old_s = s;
    s = t;
  }
  if (old_r != 1) throw std::invalid_argument("not invertible");
  return mod_pos(old_s, m);
}

}  // namespace

MatZ hermite_normal_form(MatZ m) {
  const Eigen::Index rows = m.rows();
  const Eigen::Index n = m.cols();
  if (rows < n) throw std::invalid_argument("HNF needs rows >= cols");
  for (Eigen::Index j = 0; j < n; ++j) {
    // Clear column j below the pivot row j by gcd elimination.
    for (;;) {
      Eigen::Index piv = -1;
      for (Eigen::Index i = j; i < rows; ++i) {
        if (m(i, j) != 0 &&
            (piv < 0 || abs(m(i, j)) < abs(m(piv, j))))
          piv = i;
      }
      if (piv < 0) throw std::invalid_argument("singular matrix in HNF");
      if (piv != j) m.row(piv).swap(m.row(j));
      bool clear = true;
      for (Eigen::Index i = j + 1; i < rows; ++i) {
        if (m(i, j) != 0) {
          Int q = m(i, j) / m(j, j);
          m.row(i) -= m.row(j) * q;
          if (m(i, j) != 0) clear = false;
        }
      }
      if (clear) break;
    }
    if (m(j, j) < 0) m.row(j) = -m.row(j);
    for (Eigen::Index i = 0; i < j; ++i) {
      Int q = m(i, j) / m(j, j);
      if (m(i, j) - q * m(j, j) < 0) q -= 1;
      m.row(i) -= m.row(j) * q;
    }
  }
  return m;
}

Lattice::Lattice(MatQ basis) {
  if (basis.rows() != basis.cols())
    throw std::invalid_argument("lattice basis must be square");
  denom_ = 1;
  for (Eigen::Index i = 0; i < basis.rows(); ++i)
    for (Eigen::Index j = 0; j < basis.cols(); ++j)
      denom_ = lcm_int(denom_, den(basis(i, j)));
  MatZ scaled(basis.rows(), basis.cols());
  for (Eigen::Index i = 0; i < basis.rows(); ++i)
    for (Eigen::Index j = 0; j < basis.cols(); ++j) {
      Rat x = basis(i, j) * Rat(denom_);
      scaled(i, j) = num(x);
    }
  hnf_ = hermite_normal_form(std::move(scaled));
}

Lattice Lattice::standard(int n) {
  MatQ id = MatQ::Zero(n, n);
  for (int i = 0; i < n; ++i) id(i, i) = 1;
  return Lattice(std::move(id));
}

VecQ Lattice::coefficients(const VecQ& v) const {
  if (v.size() != hnf_.rows())
    throw std::invalid_argument("lattice/vector dimension mismatch");
  // Solve c^T * H = denom * v^T by forward substitution (H upper triangular).
  VecQ c(v.size());
  for (Eigen::Index j = 0; j < v.size(); ++j) {
    Rat acc = v[j] * Rat(denom_);
    for (Eigen::Index k = 0; k < j; ++k) acc -= c[k] * Rat(hnf_(k, j));
    c[j] = acc / Rat(hnf_(j, j));
  }
  return c;
}

bool Lattice::contains(const VecQ& v) const {
  return is_integral(coefficients(v));
}

VecQ Lattice::quotient_canonical(const VecQ& v) const {
  VecQ c = coefficients(v);
  for (Eigen::Index i = 0; i < c.size(); ++i) c[i] = frac(c[i]);
  VecQ out = VecQ::Zero(v.size());
  for (Eigen::Index k = 0; k < c.size(); ++k) {
    if (c[k] == 0) continue;
    for (Eigen::Index j = k; j < v.size(); ++j)
      out[j] += c[k] * Rat(hnf_(k, j));
  }
  for (Eigen::Index j = 0; j < v.size(); ++j) out[j] /= Rat(denom_);
  return out;
}

Int Lattice::class_order(const VecQ& v) const {
  return denominator_lcm(coefficients(v));
}

VecQ Lattice::p_prime_part(const VecQ& v, const Int& p) const {
  if (p == 0) return v;
  Int m = class_order(v);
  Int pa = 1;
  while (m % p == 0) {
    m /= p;
    pa *= p;
  }
  if (pa == 1) return v;
  if (m == 1) return VecQ::Zero(v.size());
  // e = pa * (pa^{-1} mod m) is 0 mod pa and 1 mod m, so e*v has the same
  // p'-component as v and trivial p-component.
  Int e = pa * mod_inverse(pa, m);
  VecQ scaled = v;
  for (Eigen::Index i = 0; i < scaled.size(); ++i) scaled[i] *= Rat(e);
  return scaled;
}

Int Lattice::index_of(const Lattice& sub) const {
  if (sub.dim() != dim()) throw std::invalid_argument("dimension mismatch");
  Rat det_this = 1, det_sub = 1;
  for (int i = 0; i < dim(); ++i) {
    det_this *= Rat(hnf_(i, i), denom_);
    det_sub *= Rat(sub.hnf_(i, i), sub.denom_);
  }
  Rat idx = det_sub / det_this;
  if (!is_integer(idx) || idx <= 0)
    throw std::invalid_argument("not a sublattice of finite positive index");
  return num(idx);
}

SmithForm smith_normal_form(MatZ m) {
  const Eigen::Index rows = m.rows(), cols = m.cols();
  MatZ u = MatZ::Zero(rows, rows), v = MatZ::Zero(cols, cols);
  for (Eigen::Index i = 0; i < rows; ++i) u(i, i) = 1;
  for (Eigen::Index i = 0; i < cols; ++i) v(i, i) = 1;

  const Eigen::Index r = std::min(rows, cols);
  for (Eigen::Index t = 0; t < r; ++t) {
    for (;;) {
      // Find the nonzero entry of smallest absolute value in the
      // remaining submatrix and bring it to (t,t).
      Eigen::Index bi = -1, bj = -1;
      for (Eigen::Index i = t; i < rows; ++i)
        for (Eigen::Index j = t; j < cols; ++j)
          if (m(i, j) != 0 &&
              (bi < 0 || abs(m(i, j)) < abs(m(bi, bj)))) {
            bi = i;
            bj = j;
          }
      if (bi < 0) break;  // submatrix all zero
      if (bi != t) {
        m.row(bi).swap(m.row(t));
        u.row(bi).swap(u.row(t));
      }
      if (bj != t) {
        m.col(bj).swap(m.col(t));
        v.col(bj).swap(v.col(t));
      }
      bool done = true;
      for (Eigen::Index i = t + 1; i < rows; ++i)
        if (m(i, t) != 0) {
          Int q = m(i, t) / m(t, t);
          m.row(i) -= m.row(t) * q;
          u.row(i) -= u.row(t) * q;
          if (m(i, t) != 0) done = false;
        }
      for (Eigen::Index j = t + 1; j < cols; ++j)
        if (m(t, j) != 0) {
          Int q = m(t, j) / m(t, t);
          m.col(j) -= m.col(t) * q;
          v.col(j) -= v.col(t) * q;
          if (m(t, j) != 0) done = false;
        }
      if (done) {
        // Enforce divisibility of later entries by m(t,t).
        bool divides = true;
        for (Eigen::Index i = t + 1; i < rows && divides; ++i)
          for (Eigen::Index j = t + 1; j < cols && divides; ++j)
            if (m(i, j) % m(t, t) != 0) {
              m.row(t) += m.row(i);
              u.row(t) += u.row(i);
              divides = false;
            }
        if (divides) break;
      }
    }
    if (t < r && m(t, t) < 0) {
      m.row(t) = -m.row(t);
      u.row(t) = -u.row(t);
    }
  }
  return SmithForm{std::move(u), std::move(m), std::move(v)};
}

std::optional<VecZ> solve_mod(const MatZ& M, const VecZ& c, const Int& m) {
  SmithForm sf = smith_normal_form(M);
  VecZ uc = sf.u * c;
  const Eigen::Index n = M.cols();
  VecZ z = VecZ::Zero(n);
  const Eigen::Index r = std::min(M.rows(), M.cols());
  for (Eigen::Index i = 0; i < M.rows(); ++i) {
    Int d = (i < r) ? sf.s(i, i) : Int(0);
    Int b = mod_pos(uc[i], m);
    Int g = boost::multiprecision::gcd(d, m);
    if (g == 0) g = m;
    if (b % g != 0) return std::nullopt;
    if (i < n && d != 0) {
      Int mg = m / g;
      if (mg == 1) {
        z[i] = 0;
      } else {
        z[i] = mod_pos((b / g) * mod_inverse(d / g, mg), mg);
      }
    }
  }
  VecZ y = sf.v * z;
  for (Eigen::Index i = 0; i < y.size(); ++i) y[i] = mod_pos(y[i], m);
  return y;
}

std::vector<VecZ> kernel_mod(const MatZ& M, const Int& m) {
  SmithForm sf = smith_normal_form(M);
  const Eigen::Index n = M.cols();
  const Eigen::Index r = std::min(M.rows(), M.cols());
  std::vector<VecZ> gens;
  for (Eigen::Index i = 0; i < n; ++i) {
    Int d = (i < r) ? sf.s(i, i) : Int(0);
    Int g = boost::multiprecision::gcd(d, m);
    if (g == 0) g = m;
    Int step = m / g;  // smallest multiple of e_i in the kernel
    if (step == m) continue;
    VecZ gen = sf.v.col(i) * step;
    for (Eigen::Index k = 0; k < gen.size(); ++k) gen[k] = mod_pos(gen[k], m);
    gens.push_back(std::move(gen));
  }
  return gens;
}

}  // namespace centsplit
