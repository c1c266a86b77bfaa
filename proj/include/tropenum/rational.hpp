// Exact arbitrary-precision integers and rationals.
//
// Every numeric value in this project is exact: censuses reach degree 12
// in d and the coefficients (e.g. -168/5, -1341/35) must compare exactly.
// Backed by boost::multiprecision (header-only), which keeps rationals in
// lowest terms with a positive denominator.

#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <stdexcept>
#include <string>

namespace tropenum {

using Int = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

// Serializes as "p" for integers and "p/q" otherwise (q > 0 always).
std::string to_string(const Rational& r);

// Accepts "p" or "p/q" with optional leading '-'. Throws std::invalid_argument
// on malformed input or zero denominator.
Rational parse_rational(const std::string& s);

inline Int rat_num(const Rational& r) { return numerator(r); }
inline Int rat_den(const Rational& r) { return denominator(r); }

inline bool is_integer(const Rational& r) { return denominator(r) == 1; }

// Exact conversion for rationals known to be integers; throws otherwise.
Int to_integer(const Rational& r);

}  // namespace tropenum
