#ifndef BELL_RATIONAL_HPP
#define BELL_RATIONAL_HPP

#include <cstdint>
#include <string>

#include <boost/multiprecision/cpp_int.hpp>
#include <boost/rational.hpp>

namespace bell {

/// Exact rational used by the oracle; arbitrary-precision components so
/// sums over many mixture components can never overflow.
using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::rational<BigInt>;

inline double to_double(const Rational& r) {
  return r.numerator().convert_to<double>() / r.denominator().convert_to<double>();
}

inline Rational abs(const Rational& r) { return r < Rational(0) ? -r : r; }

inline std::string to_string(const Rational& r) {
  if (r.denominator() == 1) return r.numerator().str();
  return r.numerator().str() + "/" + r.denominator().str();
}

}  // namespace bell

#endif
