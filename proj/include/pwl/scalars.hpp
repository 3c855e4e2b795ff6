#pragma once

#include <boost/multiprecision/cpp_bin_float.hpp>
#include <boost/multiprecision/cpp_int.hpp>

namespace pwl {

using Rational = boost::multiprecision::cpp_rational;
using Integer = boost::multiprecision::cpp_int;
// ~50 decimal digits; enough headroom for the order-7 Wronskian determinants,
// which cancel 20+ digits at the ends of the test grid.
using BigFloat = boost::multiprecision::cpp_bin_float_50;

// double -> Rational is exact (every finite double is p/2^e).
inline Rational to_rational(double v) { return Rational(v); }
inline Rational make_rational(long long num, long long den) {
  return Rational(Integer(num), Integer(den));
}
inline double to_double(const Rational& q) { return q.convert_to<double>(); }
inline double to_double(double v) { return v; }
inline BigFloat to_bigfloat(const Rational& q) { return q.convert_to<BigFloat>(); }
inline double to_double(const BigFloat& v) { return v.convert_to<double>(); }

inline int sign_of(const Rational& q) { return q.sign(); }
inline int sign_of(double v) { return v > 0 ? 1 : (v < 0 ? -1 : 0); }

}  // namespace pwl
