#pragma once
#include <boost/multiprecision/cpp_int.hpp>
#include <string>

namespace vmc {

// Exact rational arithmetic. Comparisons against 0, 1/2 and 1 must be exact,
// so no floating point anywhere near the LP.
using Rational = boost::multiprecision::cpp_rational;
using BigInt = boost::multiprecision::cpp_int;

inline std::string rational_to_string(const Rational& r) {
  if (denominator(r) == 1) return numerator(r).str();
  return numerator(r).str() + "/" + denominator(r).str();
}

inline bool is_integral(const Rational& r) { return denominator(r) == 1; }

inline bool is_half_integral_value(const Rational& r) {
  return denominator(r) == 1 || denominator(r) == 2;
}

}  // namespace vmc
