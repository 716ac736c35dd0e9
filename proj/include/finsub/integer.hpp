#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <string>

namespace finsub {

/// Arbitrary-precision integer used for every matrix entry and invariant factor.
using Integer = boost::multiprecision::cpp_int;

inline bool is_unit(const Integer& a) { return a == 1 || a == -1; }

inline Integer abs_value(const Integer& a) { return a < 0 ? Integer(-a) : a; }

inline Integer gcd(const Integer& a, const Integer& b) {
  return boost::multiprecision::gcd(abs_value(a), abs_value(b));
}

/// Quotient rounded towards negative infinity.
inline Integer floor_div(const Integer& a, const Integer& b) {
  Integer q = a / b;
  if ((a % b != 0) && ((a < 0) != (b < 0))) --q;
  return q;
}

/// Representative of a modulo m in [0, |m|).
inline Integer mod_floor(const Integer& a, const Integer& m) {
  Integer r = a % m;
  if (r < 0) r += abs_value(m);
  return r;
}

inline std::string to_string(const Integer& a) { return a.str(); }

}  // namespace finsub
