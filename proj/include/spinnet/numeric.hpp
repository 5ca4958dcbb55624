#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cmath>
#include <cstdint>
#include <string>

namespace spinnet {

using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

inline BigInt big_gcd(const BigInt& a, const BigInt& b) {
    return boost::multiprecision::gcd(a, b);
}

/// Integer square root (floor).
inline BigInt isqrt(const BigInt& n) { return boost::multiprecision::sqrt(n); }

inline bool is_perfect_square(const BigInt& n, BigInt& root) {
    if (n < 0) return false;
    root = isqrt(n);
    return root * root == n;
}

/// Convert a big integer to double without overflowing the exponent range.
double big_to_double(const BigInt& n);

/// n/d as a double; exact inputs, correctly scaled for huge operands.
double ratio_to_double(const BigInt& n, const BigInt& d);

inline double rational_to_double(const Rational& q) {
    return ratio_to_double(boost::multiprecision::numerator(q),
                           boost::multiprecision::denominator(q));
}

std::string rational_to_string(const Rational& q);

}  // namespace spinnet
