#pragma once

#include <string>

#include <boost/multiprecision/cpp_int.hpp>

namespace aclab {

/// Arbitrary-precision signed integer. Every quantity derived from a base
/// sequence (terms, partial products, member values, counts) uses this type;
/// nothing in the library truncates to machine width.
using Int = boost::multiprecision::cpp_int;

/// Exact rational built on Int. Always stored reduced: gcd(num, den) = 1,
/// den >= 1, zero is 0/1. Comparisons and arithmetic are exact.
using Rational = boost::multiprecision::cpp_rational;

/// Renders an exact rational as a decimal string with the given number of
/// significant digits (round half up on the cut digit). The output is a plain
/// decimal like "1.60000000000" or "0.000771604938271"; for a fixed input the
/// bytes are always identical, which CSV consumers rely on.
std::string to_decimal(const Rational& value, unsigned significant_digits = 12);

/// Worker count for the scan entry points that partition an x-range.
/// ACLAB_THREADS, when set to a positive integer, caps the budget; otherwise
/// the hardware concurrency (at least 1) is used. Results never depend on the
/// budget, only wall time does.
unsigned thread_budget();

}  // namespace aclab
