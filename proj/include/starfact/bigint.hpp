#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <string>

namespace starfact {

/// Arbitrary-precision integer used for every count and coefficient.
using Integer = boost::multiprecision::cpp_int;

/// Exact rational, used only by the truncated power series.
using Rational = boost::multiprecision::cpp_rational;

Integer factorial(int n);
Integer binomial(int n, int k);

/// Divides `num` by `den`, throwing `std::logic_error` with `what` in the
/// message when the division leaves a remainder.
Integer exact_div(const Integer& num, const Integer& den, const std::string& what);

inline std::string to_string(const Integer& x) { return x.str(); }

} // namespace starfact
