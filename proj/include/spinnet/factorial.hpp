#pragma once

#include <deque>
#include <map>
#include <shared_mutex>
#include <vector>

#include "spinnet/numeric.hpp"

namespace spinnet {

/// Growable table of n! as arbitrary-precision integers. Internally
/// synchronized; safe to share across worker threads.
class FactorialCache {
  public:
    /// n!; grows the table on demand.
    BigInt get(long n);

    static FactorialCache& instance();

  private:
    FactorialCache() { table_.emplace_back(1); }
    mutable std::shared_mutex mutex_;
    std::deque<BigInt> table_;  // table_[n] = n * table_[n-1]
};

inline BigInt factorial(long n) { return FactorialCache::instance().get(n); }

/// Primes below `limit`, cached between calls.
const std::vector<long>& primes_up_to(long limit);

/// Exponent of prime p in n! (Legendre's formula).
long factorial_prime_exponent(long n, long p);

/// Signed prime-exponent vector describing a ratio of factorial products.
/// Used to split square parts out of radicands without factoring huge numbers.
class FactorialExponents {
  public:
    void mul_factorial(long n, int mult = 1);

    /// Split the represented rational R into R = (rational)^2 * radicand with
    /// the radicand squarefree. Returns {coefficient, radicand} so that
    /// sqrt(R) = coefficient * sqrt(radicand).
    void sqrt_split(Rational& coeff, BigInt& radicand) const;

    /// The rational value itself (no square root taken).
    Rational value() const;

  private:
    long max_arg_ = 0;
    std::map<long, long> exponents_;  // prime -> signed exponent
};

}  // namespace spinnet
