#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <string>

namespace sl2branch {

// All arithmetic in this library is exact. There are no floating-point
// numbers and no tolerances anywhere.
using Int = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

inline Int rat_num(const Rational& r) { return numerator(r); }
inline Int rat_den(const Rational& r) { return denominator(r); }

inline bool is_integer(const Rational& r) { return denominator(r) == 1; }

// Requires is_integer(r).
Int to_int(const Rational& r);

// Renders "p/q", or just "p" when q == 1.
std::string rat_to_string(const Rational& r);

// Parses "p", "-p", "p/q" with optional surrounding spaces.
Rational rat_from_string(const std::string& s);

// Exact binomial C(n, k); zero for k < 0 or k > n.
Int binomial(long n, long k);

}  // namespace sl2branch
