#pragma once

#include <map>
#include <string>

#include "spinnet/numeric.hpp"

namespace spinnet {

/// Exact number of the form sum_i q_i * sqrt(r_i) with rational q_i and
/// distinct squarefree positive-integer radicands r_i. The representation is
/// canonical: square roots of distinct squarefree integers are linearly
/// independent over Q, so value equality is term-map equality and zero is the
/// empty map.
class RadicalRational {
  public:
    RadicalRational() = default;
    RadicalRational(const Rational& q) { add_term(q, 1); }
    RadicalRational(long n) : RadicalRational(Rational(n)) {}

    /// q * sqrt(r), normalized so the stored radicand is squarefree.
    /// r = 0 collapses to zero. Throws CapabilityError if the square part of
    /// r cannot be certified by trial division (never happens for values
    /// produced by this library's own kernels).
    static RadicalRational radical(const Rational& q, const BigInt& r);

    /// q * sqrt(r) where r is already known squarefree; skips factoring.
    static RadicalRational radical_squarefree(const Rational& q, const BigInt& r);

    bool is_zero() const { return terms_.empty(); }
    bool is_rational() const;
    /// The coefficient of sqrt(1); zero if absent.
    Rational rational_part() const;

    const std::map<BigInt, Rational>& terms() const { return terms_; }

    RadicalRational operator-() const;
    RadicalRational& operator+=(const RadicalRational& other);
    RadicalRational& operator-=(const RadicalRational& other);
    friend RadicalRational operator+(RadicalRational a, const RadicalRational& b) {
        a += b;
        return a;
    }
    friend RadicalRational operator-(RadicalRational a, const RadicalRational& b) {
        a -= b;
        return a;
    }
    friend RadicalRational operator*(const RadicalRational& a, const RadicalRational& b);
    RadicalRational& operator*=(const RadicalRational& other) {
        *this = *this * other;
        return *this;
    }
    friend bool operator==(const RadicalRational& a, const RadicalRational& b) {
        return a.terms_ == b.terms_;
    }

    void scale(const Rational& q);

    /// Decimal rendering correct to `digits` significant digits (digits >= 1;
    /// callers wanting the documented API guarantee should pass >= 15).
    std::string to_decimal(unsigned digits) const;

    double to_double() const;

    /// "q1*sqrt(r1) + ..." exact form, for humans.
    std::string to_exact_string() const;

  private:
    void add_term(const Rational& q, const BigInt& r);
    std::map<BigInt, Rational> terms_;
};

/// Strip the square part of r by trial division: q*sqrt(r) with r squarefree.
/// This is the generic entry point for externally supplied radicands.
RadicalRational radical_normalize(const Rational& q, const BigInt& r);

}  // namespace spinnet
