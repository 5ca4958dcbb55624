#pragma once

#include <string>

#include "spinnet/error.hpp"

namespace spinnet {

/// Half-integer angular momentum stored as twice its value, so j = twice/2.
/// Parity checks on spin sums become evenness checks on twice-values.
struct Spin {
    int twice = 0;

    Spin() = default;
    explicit constexpr Spin(int t) : twice(t) {}

    /// 2j+1, the dimension of the spin-j representation.
    constexpr int dim() const { return twice + 1; }
    constexpr bool is_integer() const { return (twice & 1) == 0; }
    constexpr bool valid() const { return twice >= 0; }

    friend constexpr bool operator==(Spin a, Spin b) { return a.twice == b.twice; }
    friend constexpr auto operator<=>(Spin a, Spin b) { return a.twice <=> b.twice; }

    double value() const { return 0.5 * twice; }
};

/// Make a spin from an integer j.
constexpr Spin spin_of_int(int j) { return Spin(2 * j); }

/// Make a spin from a twice-value, rejecting negatives.
inline Spin spin_from_twice(int t) {
    if (t < 0) throw ArgumentError("spin twice-value must be nonnegative");
    return Spin(t);
}

/// Parse "2", "3/2" or "7" into a spin. Only halves are allowed as fractions.
Spin parse_spin(const std::string& text);

/// Signed half-integer (projection) parser, same grammar but negative allowed.
int parse_twice(const std::string& text);

/// Render a twice-value as "2" or "3/2" (signed).
std::string format_twice(int twice);
inline std::string format_spin(Spin s) { return format_twice(s.twice); }

/// Triangle inequality plus integer perimeter.
inline bool triad_admissible(Spin a, Spin b, Spin c) {
    const int s = a.twice + b.twice + c.twice;
    if (s & 1) return false;
    return c.twice >= std::abs(a.twice - b.twice) && c.twice <= a.twice + b.twice;
}

/// A node of a recoupling diagram: three spins meeting at a trivalent vertex.
struct Triad {
    Spin a, b, c;
    bool admissible() const { return triad_admissible(a, b, c); }
};

/// (-1)^k for an exponent given in twice-value units; throws if the exponent
/// is genuinely half-integer (those phases never arise from admissible data).
inline int phase_from_twice(long long twice_exponent) {
    if (twice_exponent & 1LL)
        throw DomainError("phase exponent is half-integer; labels violate parity");
    return ((twice_exponent >> 1) & 1LL) ? -1 : 1;
}

}  // namespace spinnet
