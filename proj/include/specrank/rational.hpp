#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <string>

namespace specrank {

// Arbitrary-precision integers and rationals. cpp_rational keeps values
// canonical: reduced, positive denominator, zero as 0/1.
using BigInt = boost::multiprecision::cpp_int;
using BigRat = boost::multiprecision::cpp_rational;

/// Parses "p/q", a plain integer, or a decimal literal such as "0.85"
/// (which becomes the exact rational 17/20).
BigRat rat_from_string(const std::string& text);

/// Canonical "num/den" form, denominator always present ("3/1").
std::string rat_to_string(const BigRat& q);

double rat_to_double(const BigRat& q);

/// Exact rational value of a finite double (doubles are binary rationals).
BigRat rat_from_double(double x);

inline int sign(const BigRat& q) { return q.sign(); }

}  // namespace specrank
