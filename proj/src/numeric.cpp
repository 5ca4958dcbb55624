#include "spinnet/numeric.hpp"

#include <limits>

namespace spinnet {

double big_to_double(const BigInt& n) {
    // cpp_int -> double saturates beyond DBL_MAX, so rescale by powers of two.
    const long bits = static_cast<long>(boost::multiprecision::msb(abs(n) + 1)) + 1;
    if (bits <= 900) return n.convert_to<double>();
    const long shift = bits - 900;
    const BigInt scaled = n >> shift;
    return std::ldexp(scaled.convert_to<double>(), static_cast<int>(shift));
}

double ratio_to_double(const BigInt& n, const BigInt& d) {
    if (n == 0) return 0.0;
    if (d == 0) return std::numeric_limits<double>::quiet_NaN();
    // Align magnitudes first so both halves convert without over/underflow.
    const long nb = static_cast<long>(boost::multiprecision::msb(abs(n)));
    const long db = static_cast<long>(boost::multiprecision::msb(abs(d)));
    const long k = nb - db;
    BigInt nn = n, dd = d;
    if (k > 0)
        dd <<= k;
    else if (k < 0)
        nn <<= -k;
    // now |nn/dd| is within [1/2, 2); grab 64 bits of quotient
    const BigInt q = (nn << 64) / dd;
    return std::ldexp(big_to_double(q), static_cast<int>(k - 64));
}

std::string rational_to_string(const Rational& q) {
    const BigInt num = boost::multiprecision::numerator(q);
    const BigInt den = boost::multiprecision::denominator(q);
    if (den == 1) return num.str();
    return num.str() + "/" + den.str();
}

}  // namespace spinnet
