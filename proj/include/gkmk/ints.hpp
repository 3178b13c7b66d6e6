// Arbitrary-precision integers and rationals.  All lattice and coefficient
// arithmetic in the library is exact; there is no machine-word fast path.
#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <string>

#include "gkmk/errors.hpp"

namespace gkmk {

using Int = boost::multiprecision::cpp_int;
using Rat = boost::multiprecision::cpp_rational;

inline Int abs_int(const Int& a) { return a < 0 ? Int(-a) : a; }

inline int sgn(const Int& a) { return a < 0 ? -1 : (a > 0 ? 1 : 0); }

inline Int gcd_int(const Int& a, const Int& b) {
  return boost::multiprecision::gcd(a, b);
}

inline Int lcm_int(const Int& a, const Int& b) {
  return boost::multiprecision::lcm(a, b);
}

// g = gcd(a,b) >= 0 together with x, y such that a*x + b*y = g.
inline Int ext_gcd(const Int& a, const Int& b, Int& x, Int& y) {
  Int r0 = a, r1 = b, x0 = 1, x1 = 0, y0 = 0, y1 = 1;
  while (r1 != 0) {
    Int q = r0 / r1;  // truncated division is fine for the invariants
    Int r2 = r0 - q * r1;
    Int x2 = x0 - q * x1;
    Int y2 = y0 - q * y1;
    r0 = r1; r1 = r2;
    x0 = x1; x1 = x2;
    y0 = y1; y1 = y2;
  }
  if (r0 < 0) { r0 = -r0; x0 = -x0; y0 = -y0; }
  x = x0; y = y0;
  return r0;
}

// Euclidean remainder in [0, |m|).
inline Int mod_euclid(const Int& a, const Int& m) {
  Int r = a % m;
  if (r < 0) r += abs_int(m);
  return r;
}

// Floor division matching mod_euclid: a == floor_div(a,m)*m + mod_euclid(a,m)
// for m > 0.
inline Int floor_div(const Int& a, const Int& m) {
  Int q = a / m, r = a % m;
  if (r != 0 && ((r < 0) != (m < 0))) q -= 1;
  return q;
}

inline Int exact_quot(const Int& a, const Int& b) {
  Int q = a / b;
  if (q * b != a) fail(errc::not_divisible, "integer quotient is not exact");
  return q;
}

inline long long to_ll(const Int& a) {
  if (a > std::numeric_limits<long long>::max() ||
      a < std::numeric_limits<long long>::min())
    fail(errc::bad_parameters, "integer out of machine range");
  return a.convert_to<long long>();
}

inline Int pow_int(Int base, Int exp) {
  Int r = 1;
  while (exp > 0) {
    if ((exp & 1) != 0) r *= base;
    base *= base;
    exp >>= 1;
  }
  return r;
}

inline std::string to_string(const Int& a) { return a.str(); }

}  // namespace gkmk
