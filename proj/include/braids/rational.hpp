#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <boost/rational.hpp>

#include <sstream>
#include <string>

namespace braids {

// Exact arithmetic throughout; no floating point anywhere in the library.
using Int = boost::multiprecision::cpp_int;
using Rational = boost::rational<Int>;

inline Rational make_rational(long long num, long long den = 1) {
  return Rational(Int(num), Int(den));
}

// "p/q" with the "/q" omitted for integers.
inline std::string to_string(const Rational& r) {
  std::ostringstream os;
  os << r.numerator();
  if (r.denominator() != 1) os << '/' << r.denominator();
  return os.str();
}

}  // namespace braids
