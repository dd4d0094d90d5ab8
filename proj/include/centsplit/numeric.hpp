#pragma once

#include <cstdint>
#include <functional>
#include <stdexcept>
#include <string>

#include <type_traits>

// Boost 1.74's byte-container detection dereferences iterator_traits of a
// type's const_iterator without SFINAE protection, which hard-errors on
// Eigen 3.4 matrix types (their const_iterator is void outside the vector
// case).  The trait only enables constructing integers from byte buffers,
// which this project never does, so pin it to false before boost sees it.
#ifndef BOOST_IS_BYTE_CONTAINER_HPP
#define BOOST_IS_BYTE_CONTAINER_HPP
namespace boost { namespace multiprecision { namespace detail {
template <class C>
struct is_byte_container : public std::false_type {};
}}}  // namespace boost::multiprecision::detail
#endif

#include <boost/multiprecision/cpp_int.hpp>
#include <boost/multiprecision/eigen.hpp>
#include <Eigen/Dense>

namespace centsplit {

using Int = boost::multiprecision::cpp_int;
using Rat = boost::multiprecision::cpp_rational;

using VecQ = Eigen::Matrix<Rat, Eigen::Dynamic, 1>;
using MatQ = Eigen::Matrix<Rat, Eigen::Dynamic, Eigen::Dynamic>;
using VecZ = Eigen::Matrix<Int, Eigen::Dynamic, 1>;
using MatZ = Eigen::Matrix<Int, Eigen::Dynamic, Eigen::Dynamic>;

// Small-integer matrices for Weyl group actions; entries stay tiny
// (bounded by root coordinates) so fixed-width arithmetic is safe.
using VecI = Eigen::Matrix<std::int64_t, Eigen::Dynamic, 1>;
using MatI = Eigen::Matrix<std::int64_t, Eigen::Dynamic, Eigen::Dynamic>;

inline Int num(const Rat& x) { return boost::multiprecision::numerator(x); }
inline Int den(const Rat& x) { return boost::multiprecision::denominator(x); }

inline bool is_integer(const Rat& x) { return den(x) == 1; }

inline Int floor_rat(const Rat& x) {
  Int q = num(x) / den(x);
  if (num(x) < 0 && q * den(x) != num(x)) --q;
  return q;
}

// Fractional part in [0,1).
inline Rat frac(const Rat& x) { return x - Rat(floor_rat(x)); }

inline Int lcm_int(const Int& a, const Int& b) {
  if (a == 0 || b == 0) return 0;
  return a / boost::multiprecision::gcd(a, b) * b;
}

inline Int denominator_lcm(const VecQ& v) {
  Int d = 1;
  for (Eigen::Index i = 0; i < v.size(); ++i) d = lcm_int(d, den(v[i]));
  return d;
}

inline bool is_integral(const VecQ& v) {
  for (Eigen::Index i = 0; i < v.size(); ++i)
    if (!is_integer(v[i])) return false;
  return true;
}

// Exact entrywise matrix comparisons (Eigen has no boolean operator== on
// matrices, and multiprecision scalars rule out approximate predicates).
template <typename A, typename B>
bool same_entries(const Eigen::MatrixBase<A>& a, const Eigen::MatrixBase<B>& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) return false;
  for (Eigen::Index j = 0; j < a.cols(); ++j)
    for (Eigen::Index i = 0; i < a.rows(); ++i)
      if (!(a(i, j) == b(i, j))) return false;
  return true;
}

template <typename A>
bool all_zero(const Eigen::MatrixBase<A>& a) {
  for (Eigen::Index j = 0; j < a.cols(); ++j)
    for (Eigen::Index i = 0; i < a.rows(); ++i)
      if (!(a(i, j) == 0)) return false;
  return true;
}

std::string to_string(const Rat& x);
std::string to_string(const VecQ& v);
Rat parse_rational(const std::string& s);

inline MatQ to_rational(const MatI& m) {
  MatQ r(m.rows(), m.cols());
  for (Eigen::Index i = 0; i < m.rows(); ++i)
    for (Eigen::Index j = 0; j < m.cols(); ++j) r(i, j) = Rat(m(i, j));
  return r;
}

inline VecQ to_rational(const VecI& v) {
  VecQ r(v.size());
  for (Eigen::Index i = 0; i < v.size(); ++i) r[i] = Rat(v[i]);
  return r;
}

struct MatIHash {
  std::size_t operator()(const MatI& m) const {
    std::size_t h = 0x9e3779b97f4a7c15ull;
    for (Eigen::Index i = 0; i < m.size(); ++i) {
      h ^= static_cast<std::size_t>(m.data()[i]) + 0x9e3779b97f4a7c15ull +
           (h << 6) + (h >> 2);
    }
    return h;
  }
};

struct MatIEq {
  bool operator()(const MatI& a, const MatI& b) const {
    return same_entries(a, b);
  }
};

struct VecIHash {
  std::size_t operator()(const VecI& v) const {
    std::size_t h = 0;
    for (Eigen::Index i = 0; i < v.size(); ++i)
      h ^= static_cast<std::size_t>(v[i]) + 0x9e3779b97f4a7c15ull + (h << 6) +
           (h >> 2);
    return h;
  }
};

struct VecIEq {
  bool operator()(const VecI& a, const VecI& b) const {
    return same_entries(a, b);
  }
};

// Raised when a mechanically checked identity from the underlying theory
// fails; carries the name of the failed identity.
class VerificationError : public std::runtime_error {
 public:
  explicit VerificationError(const std::string& what)
      : std::runtime_error(what) {}
};

}  // namespace centsplit
