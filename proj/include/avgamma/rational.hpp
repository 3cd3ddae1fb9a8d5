#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <string>

namespace avgamma {

// Arbitrary-size integers and rationals.  All exponent arithmetic is exact;
// nothing in the library ever rounds through floating point.
using BigInt = boost::multiprecision::cpp_int;
using BigRational = boost::multiprecision::cpp_rational;

inline BigInt rat_num(const BigRational& q) { return boost::multiprecision::numerator(q); }
inline BigInt rat_den(const BigRational& q) { return boost::multiprecision::denominator(q); }

// Canonical "p/q" rendering: reduced, q > 0, q printed even when it is 1 so
// that rational-valued report fields always have the same shape.
inline std::string rat_str(const BigRational& q) {
  return rat_num(q).str() + "/" + rat_den(q).str();
}

inline BigRational make_rational(const BigInt& num, const BigInt& den) {
  if (den < 0) return BigRational(-num, -den);  // keep denominators positive
  return BigRational(num, den);
}

}  // namespace avgamma
