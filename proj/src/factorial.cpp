#include "spinnet/factorial.hpp"

#include <mutex>

#include "spinnet/error.hpp"

namespace spinnet {

FactorialCache& FactorialCache::instance() {
    static FactorialCache cache;
    return cache;
}

BigInt FactorialCache::get(long n) {
    if (n < 0) throw ArgumentError("factorial of negative argument");
    {
        std::shared_lock lock(mutex_);
        if (n < static_cast<long>(table_.size())) return table_[n];
    }
    std::unique_lock lock(mutex_);
    while (static_cast<long>(table_.size()) <= n)
        table_.push_back(table_.back() * static_cast<long>(table_.size()));
    return table_[n];
}

namespace {

std::mutex sieve_mutex;
std::vector<long> sieve_primes{2, 3, 5, 7, 11, 13};
long sieve_limit = 14;

void grow_sieve(long limit) {
    std::vector<bool> composite(limit + 1, false);
    std::vector<long> fresh;
    for (long p = 2; p <= limit; ++p) {
        if (composite[p]) continue;
        fresh.push_back(p);
        for (long q = p * p; q <= limit; q += p) composite[q] = true;
    }
    sieve_primes = std::move(fresh);
    sieve_limit = limit;
}

}  // namespace

const std::vector<long>& primes_up_to(long limit) {
    std::lock_guard lock(sieve_mutex);
    if (limit > sieve_limit) grow_sieve(std::max(limit, 2 * sieve_limit));
    return sieve_primes;
}

long factorial_prime_exponent(long n, long p) {
    long e = 0;
    for (long q = n / p; q > 0; q /= p) e += q;
    return e;
}

void FactorialExponents::mul_factorial(long n, int mult) {
    if (n < 0) throw ArgumentError("factorial of negative argument");
    if (n > max_arg_) max_arg_ = n;
    if (n < 2 || mult == 0) return;
    for (long p : primes_up_to(n)) {
        if (p > n) break;
        exponents_[p] += mult * factorial_prime_exponent(n, p);
    }
}

void FactorialExponents::sqrt_split(Rational& coeff, BigInt& radicand) const {
    BigInt num = 1, den = 1;
    radicand = 1;
    for (const auto& [p, e] : exponents_) {
        if (e == 0) continue;
        // p^e = (p^half)^2 * p^rem with rem in {0,1}
        const long half = (e >= 0 ? e : e - 1) / 2;  // floor division
        if (half > 0)
            num *= boost::multiprecision::pow(BigInt(p), static_cast<unsigned>(half));
        else if (half < 0)
            den *= boost::multiprecision::pow(BigInt(p), static_cast<unsigned>(-half));
        if (e - 2 * half == 1) radicand *= p;
    }
    coeff = Rational(num, den);
}

Rational FactorialExponents::value() const {
    BigInt num = 1, den = 1;
    for (const auto& [p, e] : exponents_) {
        if (e > 0)
            num *= boost::multiprecision::pow(BigInt(p), static_cast<unsigned>(e));
        else if (e < 0)
            den *= boost::multiprecision::pow(BigInt(p), static_cast<unsigned>(-e));
    }
    return Rational(num, den);
}

}  // namespace spinnet
