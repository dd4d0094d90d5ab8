#include "centsplit/numeric.hpp"

#include <sstream>

namespace centsplit {

std::string to_string(const Rat& x) {
  std::ostringstream os;
  os << num(x);
  if (den(x) != 1) os << '/' << den(x);
  return os.str();
}

std::string to_string(const VecQ& v) {
  std::string s = "(";
  for (Eigen::Index i = 0; i < v.size(); ++i) {
    if (i) s += ",";
    s += to_string(v[i]);
  }
  return s + ")";
}

Rat parse_rational(const std::string& s) {
  auto slash = s.find('/');
  try {
    if (slash == std::string::npos) return Rat(Int(s));
    Int n(s.substr(0, slash));
    Int d(s.substr(slash + 1));
    if (d == 0) throw std::invalid_argument("zero denominator");
    return Rat(n, d);
  } catch (const std::exception&) {
    throw std::invalid_argument("cannot parse rational: '" + s + "'");
  }
}

}  // namespace centsplit
