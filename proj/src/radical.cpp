#include "spinnet/radical.hpp"

#include <sstream>

#include "spinnet/error.hpp"
#include "spinnet/factorial.hpp"

namespace spinnet {

namespace {

constexpr long kTrialLimit = 100000;

// r -> (square root of the square part, squarefree remainder)
void squarefree_split(BigInt r, BigInt& root, BigInt& core) {
    root = 1;
    core = 1;
    for (long p : primes_up_to(kTrialLimit)) {
        const BigInt pp = BigInt(p) * p;
        if (pp > r) break;
        while (r % pp == 0) {
            r /= pp;
            root *= p;
        }
        if (r % p == 0) {
            r /= p;
            core *= p;
        }
    }
    if (r == 1) return;
    BigInt s;
    if (is_perfect_square(r, s)) {
        root *= s;
        return;
    }
    // All prime factors of r now exceed kTrialLimit. If r < limit^3 it is a
    // product of at most two distinct primes, hence squarefree.
    const BigInt limit3 = BigInt(kTrialLimit) * kTrialLimit * kTrialLimit;
    if (r >= limit3)
        throw CapabilityError("radicand too large to certify squarefree: " + r.str());
    core *= r;
}

}  // namespace

RadicalRational RadicalRational::radical(const Rational& q, const BigInt& r) {
    if (r < 0) throw DomainError("negative radicand");
    RadicalRational out;
    if (q == 0 || r == 0) return out;
    BigInt root, core;
    squarefree_split(r, root, core);
    out.add_term(q * Rational(root), core);
    return out;
}

RadicalRational RadicalRational::radical_squarefree(const Rational& q, const BigInt& r) {
    RadicalRational out;
    if (q != 0 && r > 0) out.add_term(q, r);
    return out;
}

RadicalRational radical_normalize(const Rational& q, const BigInt& r) {
    return RadicalRational::radical(q, r);
}

void RadicalRational::add_term(const Rational& q, const BigInt& r) {
    if (q == 0) return;
    auto it = terms_.find(r);
    if (it == terms_.end()) {
        terms_.emplace(r, q);
        return;
    }
    it->second += q;
    if (it->second == 0) terms_.erase(it);
}

bool RadicalRational::is_rational() const {
    return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first == 1);
}

Rational RadicalRational::rational_part() const {
    auto it = terms_.find(BigInt(1));
    return it == terms_.end() ? Rational(0) : it->second;
}

RadicalRational RadicalRational::operator-() const {
    RadicalRational out;
    for (const auto& [r, q] : terms_) out.terms_.emplace(r, -q);
    return out;
}

RadicalRational& RadicalRational::operator+=(const RadicalRational& other) {
    for (const auto& [r, q] : other.terms_) add_term(q, r);
    return *this;
}

RadicalRational& RadicalRational::operator-=(const RadicalRational& other) {
    for (const auto& [r, q] : other.terms_) add_term(-q, r);
    return *this;
}

RadicalRational operator*(const RadicalRational& a, const RadicalRational& b) {
    RadicalRational out;
    for (const auto& [ra, qa] : a.terms_) {
        for (const auto& [rb, qb] : b.terms_) {
            // sqrt(ra)*sqrt(rb) = g*sqrt((ra/g)(rb/g)) with g = gcd; the
            // reduced radicand is squarefree because ra and rb are.
            const BigInt g = big_gcd(ra, rb);
            out.add_term(qa * qb * Rational(g), (ra / g) * (rb / g));
        }
    }
    return out;
}

void RadicalRational::scale(const Rational& q) {
    if (q == 0) {
        terms_.clear();
        return;
    }
    for (auto& [r, c] : terms_) c *= q;
}

namespace {

BigInt pow10(unsigned n) {
    return boost::multiprecision::pow(BigInt(10), n);
}

// floor(|value| * 10^scale) with value = sum q_i sqrt(r_i), plus a bound on
// the accumulated sqrt truncation error in the same scale.
void scaled_sum(const std::map<BigInt, Rational>& terms, unsigned scale, Rational& sum,
                Rational& err) {
    sum = 0;
    err = 0;
    const BigInt s2 = pow10(2 * scale);
    for (const auto& [r, q] : terms) {
        const BigInt root = isqrt(r * s2);  // = sqrt(r)*10^scale - eps, eps in [0,1)
        sum += q * Rational(root);
        err += abs(q);
    }
}

}  // namespace

std::string RadicalRational::to_decimal(unsigned digits) const {
    if (digits < 1) throw ArgumentError("digits must be positive");
    if (terms_.empty()) return "0";
    unsigned scale = digits + 12;
    Rational sum, err;
    for (int round = 0; round < 64; ++round, scale *= 2) {
        scaled_sum(terms_, scale, sum, err);
        // need |sum| to dominate the error by `digits`+1 decimal places
        if (abs(sum) > err * pow10(digits + 2)) break;
    }
    const bool negative = sum < 0;
    Rational mag = abs(sum);  // ~ |value| * 10^scale

    // exponent e10 with 10^e10 <= |value| < 10^(e10+1)
    const BigInt num = boost::multiprecision::numerator(mag);
    const BigInt den = boost::multiprecision::denominator(mag);
    long e10 = static_cast<long>(num.str().size()) - static_cast<long>(den.str().size()) -
               static_cast<long>(scale);
    auto cmp_pow = [&](long e) {
        // |value| >= 10^e ?
        if (e + static_cast<long>(scale) >= 0)
            return num >= den * pow10(static_cast<unsigned>(e + scale));
        return num * pow10(static_cast<unsigned>(-e - scale)) >= den;
    };
    while (!cmp_pow(e10)) --e10;
    while (cmp_pow(e10 + 1)) ++e10;

    // mantissa rounded to `digits` digits (mag carries a factor 10^scale)
    const long shift = static_cast<long>(digits) - 1 - e10 - static_cast<long>(scale);
    Rational mant = mag;
    if (shift >= 0)
        mant *= Rational(pow10(static_cast<unsigned>(shift)));
    else
        mant /= Rational(pow10(static_cast<unsigned>(-shift)));
    mant += Rational(1, 2);
    BigInt m = boost::multiprecision::numerator(mant) / boost::multiprecision::denominator(mant);
    if (m >= pow10(digits)) {
        m /= 10;
        ++e10;
    }
    std::string digits_str = m.str();

    std::ostringstream out;
    if (negative) out << '-';
    if (e10 >= static_cast<long>(digits) || e10 < -6) {
        out << digits_str.substr(0, 1);
        if (digits_str.size() > 1) out << '.' << digits_str.substr(1);
        out << 'e' << (e10 >= 0 ? "+" : "") << e10;
    } else if (e10 >= 0) {
        out << digits_str.substr(0, e10 + 1);
        if (digits_str.size() > static_cast<std::size_t>(e10 + 1))
            out << '.' << digits_str.substr(e10 + 1);
    } else {
        out << "0.";
        for (long i = 1; i < -e10; ++i) out << '0';
        out << digits_str;
    }
    return out.str();
}

double RadicalRational::to_double() const {
    if (terms_.empty()) return 0.0;
    // single radical: no cancellation possible, take the fast path
    if (terms_.size() == 1) {
        const auto& [r, q] = *terms_.begin();
        const BigInt root2 = isqrt(r << 128);
        return rational_to_double(q) * std::ldexp(big_to_double(root2), -64);
    }
    unsigned scale = 40;
    Rational sum, err;
    for (int round = 0; round < 64; ++round, scale *= 2) {
        scaled_sum(terms_, scale, sum, err);
        if (sum == 0 || abs(sum) > err * pow10(20)) break;
    }
    return rational_to_double(sum / Rational(pow10(scale)));
}

std::string RadicalRational::to_exact_string() const {
    if (terms_.empty()) return "0";
    std::ostringstream out;
    bool first = true;
    for (const auto& [r, q] : terms_) {
        if (!first) out << " + ";
        first = false;
        out << "(" << rational_to_string(q) << ")";
        if (r != 1) out << "*sqrt(" << r.str() << ")";
    }
    return out.str();
}

}  // namespace spinnet
