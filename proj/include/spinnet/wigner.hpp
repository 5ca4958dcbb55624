#pragma once

#include <array>
#include <iosfwd>
#include <optional>

#include "spinnet/radical.hpp"
#include "spinnet/spin.hpp"

namespace spinnet {

/// Arguments of a 3j coefficient; projections are twice-values and may be
/// negative.
struct ThreeJArgs {
    Spin j1, j2, j3;
    int m1 = 0, m2 = 0, m3 = 0;  // twice-values
};

/// {j1 j2 j3; j4 j5 j6} in the standard two-row layout.
struct SixJArgs {
    std::array<Spin, 6> j{};
    SixJArgs() = default;
    SixJArgs(Spin a, Spin b, Spin c, Spin d, Spin e, Spin f) : j{a, b, c, d, e, f} {}
    static SixJArgs from_twice(int a, int b, int c, int d, int e, int f) {
        return SixJArgs(Spin(a), Spin(b), Spin(c), Spin(d), Spin(e), Spin(f));
    }
};

/// Exact 3j value; exact zero on any selection-rule failure.
RadicalRational wigner_3j(const ThreeJArgs& args);

/// Exact 6j value via the single-sum form: one square-root prefactor from the
/// four triangle coefficients times an exact rational alternating sum.
/// Exact zero when any of the four triads is inadmissible.
RadicalRational wigner_6j(const SixJArgs& args);

/// Exact d^j_{m,mp}(beta) for rational cos(beta); the half-angle sine and
/// cosine are carried as radicals. Throws DomainError for |cos| > 1 and
/// ArgumentError for projections outside [-j, j] or parity mismatch.
RadicalRational wigner_small_d(Spin j, int m_twice, int mp_twice, const Rational& cos_beta);

/// The four triads of a 6j, in a fixed order.
std::array<Triad, 4> six_j_triads(const SixJArgs& args);

/// Process-wide memo for 6j values, keyed by the symmetry-canonical tuple.
/// Internally synchronized.
class SixJCache {
  public:
    static SixJCache& instance();
    std::optional<RadicalRational> lookup(const std::array<int, 6>& key) const;
    void store(const std::array<int, 6>& key, const RadicalRational& value);
    std::size_t size() const;
    void clear();

    /// Length-prefixed binary snapshot with a versioned header.
    bool save(std::ostream& out) const;
    bool load(std::istream& in);

  private:
    SixJCache() = default;
    struct Impl;
    Impl& impl() const;
};

/// Lexicographically smallest image of the 6j argument tuple under its
/// 24 classical symmetries (column permutations, row flips in two columns).
std::array<int, 6> six_j_canonical_key(const SixJArgs& args);

}  // namespace spinnet
