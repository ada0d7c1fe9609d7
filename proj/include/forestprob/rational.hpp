#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <string>

namespace forestprob {

// Arbitrary-precision exact arithmetic. Everything probability-valued in this
// library is a Rational; floating point appears only in display helpers and
// Monte Carlo summaries.
using Integer = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

Integer factorial(int n);

inline Integer rational_num(const Rational& q) { return boost::multiprecision::numerator(q); }
inline Integer rational_den(const Rational& q) { return boost::multiprecision::denominator(q); }

// "num/den", always with an explicit denominator ("1/1" for one).
std::string fraction_string(const Rational& q);

double to_double(const Rational& q);

}  // namespace forestprob
