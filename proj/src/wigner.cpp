#include "spinnet/wigner.hpp"

#include <algorithm>
#include <istream>
#include <mutex>
#include <ostream>
#include <shared_mutex>
#include <unordered_map>

#include "spinnet/error.hpp"
#include "spinnet/factorial.hpp"

namespace spinnet {

namespace {

// Delta(abc) = (a+b-c)!(a-b+c)!(-a+b+c)!/(a+b+c+1)! accumulated as prime
// exponents so square parts can be extracted exactly.
void mul_triangle(FactorialExponents& fe, Spin a, Spin b, Spin c) {
    fe.mul_factorial((a.twice + b.twice - c.twice) / 2);
    fe.mul_factorial((a.twice - b.twice + c.twice) / 2);
    fe.mul_factorial((-a.twice + b.twice + c.twice) / 2);
    fe.mul_factorial((a.twice + b.twice + c.twice) / 2 + 1, -1);
}

Rational factorial_rational(std::initializer_list<long> numerator,
                            std::initializer_list<long> denominator) {
    BigInt num = 1, den = 1;
    for (long n : numerator) num *= factorial(n);
    for (long n : denominator) den *= factorial(n);
    return Rational(num, den);
}

}  // namespace

RadicalRational wigner_3j(const ThreeJArgs& a) {
    const auto [j1, j2, j3, m1, m2, m3] = a;
    if (m1 + m2 + m3 != 0) return {};
    if (!triad_admissible(j1, j2, j3)) return {};
    if (std::abs(m1) > j1.twice || std::abs(m2) > j2.twice || std::abs(m3) > j3.twice)
        return {};
    if (((j1.twice + m1) | (j2.twice + m2) | (j3.twice + m3)) & 1) return {};

    const long A1 = (j1.twice + j2.twice - j3.twice) / 2;  // j1+j2-j3
    const long A2 = (j1.twice - m1) / 2;                   // j1-m1
    const long A3 = (j2.twice + m2) / 2;                   // j2+m2
    const long B1 = (j3.twice - j2.twice + m1) / 2;        // j3-j2+m1
    const long B2 = (j3.twice - j1.twice - m2) / 2;        // j3-j1-m2
    const long kmin = std::max({0L, -B1, -B2});
    const long kmax = std::min({A1, A2, A3});
    if (kmin > kmax) return {};

    // alternating sum over k, accumulated relative to the first term
    Rational rel(1), term(1);
    for (long k = kmin; k < kmax; ++k) {
        term *= Rational(-(A1 - k) * (A2 - k) * (A3 - k),
                         (k + 1) * (B1 + k + 1) * (B2 + k + 1));
        rel += term;
    }
    Rational sum = factorial_rational({}, {kmin, A1 - kmin, A2 - kmin, A3 - kmin,
                                           B1 + kmin, B2 + kmin}) *
                   rel;
    if (kmin & 1) sum = -sum;
    if (sum == 0) return {};

    FactorialExponents fe;
    mul_triangle(fe, j1, j2, j3);
    fe.mul_factorial((j1.twice + m1) / 2);
    fe.mul_factorial((j1.twice - m1) / 2);
    fe.mul_factorial((j2.twice + m2) / 2);
    fe.mul_factorial((j2.twice - m2) / 2);
    fe.mul_factorial((j3.twice + m3) / 2);
    fe.mul_factorial((j3.twice - m3) / 2);
    Rational coeff;
    BigInt radicand;
    fe.sqrt_split(coeff, radicand);

    const int phase = phase_from_twice(j1.twice - j2.twice - m3);
    return RadicalRational::radical_squarefree(phase * coeff * sum, radicand);
}

std::array<Triad, 4> six_j_triads(const SixJArgs& a) {
    const auto& j = a.j;
    return {Triad{j[0], j[1], j[2]}, Triad{j[0], j[4], j[5]}, Triad{j[3], j[1], j[5]},
            Triad{j[3], j[4], j[2]}};
}

namespace {

RadicalRational six_j_uncached(const SixJArgs& a) {
    for (const Triad& t : six_j_triads(a))
        if (!t.admissible()) return {};
    const auto& j = a.j;

    const long T1 = (j[0].twice + j[1].twice + j[2].twice) / 2;
    const long T2 = (j[0].twice + j[4].twice + j[5].twice) / 2;
    const long T3 = (j[3].twice + j[1].twice + j[5].twice) / 2;
    const long T4 = (j[3].twice + j[4].twice + j[2].twice) / 2;
    const long Q1 = (j[0].twice + j[1].twice + j[3].twice + j[4].twice) / 2;
    const long Q2 = (j[1].twice + j[2].twice + j[4].twice + j[5].twice) / 2;
    const long Q3 = (j[2].twice + j[0].twice + j[5].twice + j[3].twice) / 2;
    const long zmin = std::max({T1, T2, T3, T4});
    const long zmax = std::min({Q1, Q2, Q3});
    if (zmin > zmax) return {};

    Rational rel(1), term(1);
    for (long z = zmin; z < zmax; ++z) {
        term *= Rational(-(z + 2) * (Q1 - z) * (Q2 - z) * (Q3 - z),
                         (z + 1 - T1) * (z + 1 - T2) * (z + 1 - T3) * (z + 1 - T4));
        rel += term;
    }
    Rational sum = factorial_rational({zmin + 1}, {zmin - T1, zmin - T2, zmin - T3,
                                                   zmin - T4, Q1 - zmin, Q2 - zmin,
                                                   Q3 - zmin}) *
                   rel;
    if (zmin & 1) sum = -sum;
    if (sum == 0) return {};

    FactorialExponents fe;
    mul_triangle(fe, j[0], j[1], j[2]);
    mul_triangle(fe, j[0], j[4], j[5]);
    mul_triangle(fe, j[3], j[1], j[5]);
    mul_triangle(fe, j[3], j[4], j[2]);
    Rational coeff;
    BigInt radicand;
    fe.sqrt_split(coeff, radicand);
    return RadicalRational::radical_squarefree(coeff * sum, radicand);
}

}  // namespace

std::array<int, 6> six_j_canonical_key(const SixJArgs& a) {
    static constexpr int cols[6][3] = {{0, 1, 2}, {0, 2, 1}, {1, 0, 2},
                                       {1, 2, 0}, {2, 0, 1}, {2, 1, 0}};
    // flip pattern: which two columns swap their upper/lower entries
    static constexpr int flips[4][3] = {{0, 0, 0}, {1, 1, 0}, {1, 0, 1}, {0, 1, 1}};
    const int top[3] = {a.j[0].twice, a.j[1].twice, a.j[2].twice};
    const int bot[3] = {a.j[3].twice, a.j[4].twice, a.j[5].twice};
    std::array<int, 6> best{};
    bool have = false;
    for (const auto& perm : cols) {
        for (const auto& flip : flips) {
            std::array<int, 6> key{};
            for (int c = 0; c < 3; ++c) {
                const int src = perm[c];
                key[c] = flip[c] ? bot[src] : top[src];
                key[c + 3] = flip[c] ? top[src] : bot[src];
            }
            if (!have || key < best) {
                best = key;
                have = true;
            }
        }
    }
    return best;
}

struct SixJCache::Impl {
    struct Hash {
        std::size_t operator()(const std::array<int, 6>& k) const {
            std::size_t h = 1469598103934665603ull;
            for (int v : k) {
                h ^= static_cast<std::size_t>(v) + 0x9e3779b97f4a7c15ull;
                h *= 1099511628211ull;
            }
            return h;
        }
    };
    mutable std::shared_mutex mutex;
    std::unordered_map<std::array<int, 6>, RadicalRational, Hash> map;
};

SixJCache& SixJCache::instance() {
    static SixJCache cache;
    return cache;
}

SixJCache::Impl& SixJCache::impl() const {
    static Impl impl;
    return impl;
}

std::optional<RadicalRational> SixJCache::lookup(const std::array<int, 6>& key) const {
    auto& im = impl();
    std::shared_lock lock(im.mutex);
    auto it = im.map.find(key);
    if (it == im.map.end()) return std::nullopt;
    return it->second;
}

void SixJCache::store(const std::array<int, 6>& key, const RadicalRational& value) {
    auto& im = impl();
    std::unique_lock lock(im.mutex);
    im.map.emplace(key, value);
}

std::size_t SixJCache::size() const {
    auto& im = impl();
    std::shared_lock lock(im.mutex);
    return im.map.size();
}

void SixJCache::clear() {
    auto& im = impl();
    std::unique_lock lock(im.mutex);
    im.map.clear();
}

namespace {

constexpr char kCacheMagic[8] = {'S', 'P', 'N', 'J', 'C', '0', '1', '\n'};

void write_u32(std::ostream& out, std::uint32_t v) {
    unsigned char b[4] = {static_cast<unsigned char>(v), static_cast<unsigned char>(v >> 8),
                          static_cast<unsigned char>(v >> 16),
                          static_cast<unsigned char>(v >> 24)};
    out.write(reinterpret_cast<const char*>(b), 4);
}

bool read_u32(std::istream& in, std::uint32_t& v) {
    unsigned char b[4];
    if (!in.read(reinterpret_cast<char*>(b), 4)) return false;
    v = b[0] | (b[1] << 8) | (b[2] << 16) | (std::uint32_t(b[3]) << 24);
    return true;
}

void write_bigint(std::ostream& out, const BigInt& n) {
    const std::string s = n.str();
    write_u32(out, static_cast<std::uint32_t>(s.size()));
    out.write(s.data(), static_cast<std::streamsize>(s.size()));
}

bool read_bigint(std::istream& in, BigInt& n) {
    std::uint32_t len;
    if (!read_u32(in, len) || len > (1u << 24)) return false;
    std::string s(len, '\0');
    if (!in.read(s.data(), len)) return false;
    try {
        n = BigInt(s);
    } catch (...) {
        return false;
    }
    return true;
}

}  // namespace

bool SixJCache::save(std::ostream& out) const {
    auto& im = impl();
    std::shared_lock lock(im.mutex);
    out.write(kCacheMagic, sizeof kCacheMagic);
    write_u32(out, static_cast<std::uint32_t>(im.map.size()));
    for (const auto& [key, value] : im.map) {
        for (int v : key) write_u32(out, static_cast<std::uint32_t>(v));
        write_u32(out, static_cast<std::uint32_t>(value.terms().size()));
        for (const auto& [r, q] : value.terms()) {
            write_bigint(out, r);
            write_bigint(out, boost::multiprecision::numerator(q));
            write_bigint(out, boost::multiprecision::denominator(q));
        }
    }
    return static_cast<bool>(out);
}

bool SixJCache::load(std::istream& in) {
    char magic[sizeof kCacheMagic];
    if (!in.read(magic, sizeof magic) || !std::equal(magic, magic + sizeof magic, kCacheMagic))
        return false;
    std::uint32_t count;
    if (!read_u32(in, count)) return false;
    for (std::uint32_t i = 0; i < count; ++i) {
        std::array<int, 6> key{};
        for (int& v : key) {
            std::uint32_t u;
            if (!read_u32(in, u)) return false;
            v = static_cast<int>(u);
        }
        std::uint32_t nterms;
        if (!read_u32(in, nterms) || nterms > (1u << 20)) return false;
        RadicalRational value;
        for (std::uint32_t t = 0; t < nterms; ++t) {
            BigInt r, num, den;
            if (!read_bigint(in, r) || !read_bigint(in, num) || !read_bigint(in, den) ||
                den == 0)
                return false;
            value += RadicalRational::radical_squarefree(Rational(num, den), r);
        }
        store(key, value);
    }
    return true;
}

RadicalRational wigner_6j(const SixJArgs& args) {
    const auto key = six_j_canonical_key(args);
    auto& cache = SixJCache::instance();
    if (auto hit = cache.lookup(key)) return *hit;
    RadicalRational value = six_j_uncached(args);
    cache.store(key, value);
    return value;
}

RadicalRational wigner_small_d(Spin j, int m_twice, int mp_twice, const Rational& cos_beta) {
    if (cos_beta < -1 || cos_beta > 1) throw DomainError("cos(beta) outside [-1, 1]");
    if (std::abs(m_twice) > j.twice || std::abs(mp_twice) > j.twice)
        throw ArgumentError("d-function projection exceeds principal spin");
    if (((j.twice + m_twice) & 1) || ((j.twice + mp_twice) & 1))
        throw ArgumentError("d-function projection parity mismatch");

    const Rational c2 = (1 + cos_beta) / 2;  // cos^2(beta/2)
    const Rational s2 = (1 - cos_beta) / 2;  // sin^2(beta/2)

    const long jm = (j.twice + m_twice) / 2;    // j+m
    const long jmm = (j.twice - m_twice) / 2;   // j-m
    const long jmp = (j.twice + mp_twice) / 2;  // j+mp
    const long jmpm = (j.twice - mp_twice) / 2; // j-mp
    const long dm = (m_twice - mp_twice) / 2;   // m - mp

    const long smin = std::max(0L, -dm);
    const long smax = std::min(jmp, jmm);

    FactorialExponents fe;
    fe.mul_factorial(jm);
    fe.mul_factorial(jmm);
    fe.mul_factorial(jmp);
    fe.mul_factorial(jmpm);
    Rational coeff;
    BigInt radicand;
    fe.sqrt_split(coeff, radicand);
    const RadicalRational pref = RadicalRational::radical_squarefree(coeff, radicand);

    auto rat_pow = [](const Rational& q, long e) {
        Rational out(1);
        for (long i = 0; i < e; ++i) out *= q;
        return out;
    };

    RadicalRational total;
    for (long s = smin; s <= smax; ++s) {
        const long cos_pow = j.twice - dm - 2 * s;  // exponent of cos(beta/2)
        const long sin_pow = dm + 2 * s;            // exponent of sin(beta/2)
        if (cos_pow < 0 || sin_pow < 0) continue;
        if (c2 == 0 && cos_pow > 0) continue;
        if (s2 == 0 && sin_pow > 0) continue;
        Rational mag = rat_pow(c2, cos_pow / 2) * rat_pow(s2, sin_pow / 2);
        mag /= Rational(factorial(jmp - s) * factorial(s) * factorial(dm + s) *
                        factorial(jmm - s));
        if ((dm + s) & 1) mag = -mag;
        // leftover half-angle factors of odd exponent stay under one radical
        Rational rad(1);
        if (cos_pow & 1) rad *= c2;
        if (sin_pow & 1) rad *= s2;
        if (rad == 1) {
            total += RadicalRational(mag);
        } else {
            const BigInt rn = boost::multiprecision::numerator(rad);
            const BigInt rd = boost::multiprecision::denominator(rad);
            total += RadicalRational::radical(mag / Rational(rd), rn * rd);
        }
    }
    return pref * total;
}

}  // namespace spinnet
