#pragma once

#include "spinnet/recoupling.hpp"
#include "spinnet/rng.hpp"
#include "spinnet/wigner.hpp"

namespace spinnet::testing {

inline Spin random_spin(SplitMix64& rng, int max_twice) {
    return Spin(rng.uniform_int(0, max_twice));
}

/// Third spin completing an admissible triad with a and b, or twice = -1 if
/// the requested ceiling leaves no room.
inline Spin complete_triad(SplitMix64& rng, Spin a, Spin b, int max_twice) {
    const int lo = std::abs(a.twice - b.twice);
    const int hi = std::min(a.twice + b.twice, max_twice);
    if (lo > hi) return Spin(0);  // caller must check admissibility
    const int steps = (hi - lo) / 2;
    return Spin(lo + 2 * rng.uniform_int(0, steps));
}

/// Random 9-label array with all six triads admissible.
inline NineJLabels random_nine_j(SplitMix64& rng, int max_twice) {
    for (;;) {
        NineJLabels L;
        L.j[0][0] = random_spin(rng, max_twice);
        L.j[0][1] = random_spin(rng, max_twice);
        L.j[0][2] = complete_triad(rng, L.j[0][0], L.j[0][1], max_twice);
        L.j[1][0] = random_spin(rng, max_twice);
        L.j[1][1] = random_spin(rng, max_twice);
        L.j[1][2] = complete_triad(rng, L.j[1][0], L.j[1][1], max_twice);
        L.j[2][0] = complete_triad(rng, L.j[0][0], L.j[1][0], max_twice);
        L.j[2][1] = complete_triad(rng, L.j[0][1], L.j[1][1], max_twice);
        L.j[2][2] = complete_triad(rng, L.j[0][2], L.j[1][2], max_twice);
        if (L.all_triads_admissible()) return L;
    }
}

/// Random admissible type I label set, nonzero not guaranteed.
inline ThreeNJLabels random_type1(SplitMix64& rng, int n, int max_twice) {
    for (;;) {
        ThreeNJLabels L;
        L.kind = ThreeNJKind::TypeI;
        for (int i = 0; i < n; ++i) {
            L.j.push_back(random_spin(rng, max_twice));
            L.k.push_back(random_spin(rng, max_twice));
            L.l.push_back(random_spin(rng, max_twice));
        }
        if (L.all_triads_admissible()) return L;
    }
}

inline RadicalRational rr_sqrt(const Rational& r) {
    const BigInt num = boost::multiprecision::numerator(r);
    const BigInt den = boost::multiprecision::denominator(r);
    return RadicalRational::radical(Rational(1, den), num * den);
}

/// Spin arguments for the five-6j identity built triad-by-triad, so the
/// right-hand product is frequently nonzero.
struct BeArgs {
    Spin a, b, c, d, e, f, p, q, r;
};

inline BeArgs random_be_args(SplitMix64& rng, int max_twice) {
    for (int attempt = 0; attempt < 200; ++attempt) {
        BeArgs v;
        v.p = random_spin(rng, max_twice);
        v.q = random_spin(rng, max_twice);
        v.r = complete_triad(rng, v.p, v.q, max_twice);
        if (!triad_admissible(v.p, v.q, v.r)) continue;
        v.a = random_spin(rng, max_twice);
        v.d = complete_triad(rng, v.a, v.p, max_twice);
        v.e = complete_triad(rng, v.q, v.d, max_twice);
        v.b = random_spin(rng, max_twice);
        v.c = complete_triad(rng, v.b, v.p, max_twice);
        v.f = complete_triad(rng, v.q, v.c, max_twice);
        if (triad_admissible(v.e, v.a, v.r) && triad_admissible(v.f, v.b, v.r)) return v;
    }
    // fall back to unconstrained spins; the identity holds regardless
    return {random_spin(rng, max_twice), random_spin(rng, max_twice),
            random_spin(rng, max_twice), random_spin(rng, max_twice),
            random_spin(rng, max_twice), random_spin(rng, max_twice),
            random_spin(rng, max_twice), random_spin(rng, max_twice),
            random_spin(rng, max_twice)};
}

/// Random type II label set whose two separated tetrahedra are admissible,
/// so the product value is generically nonzero.
inline ThreeNJLabels random_type2_n3(SplitMix64& rng, int max_twice) {
    for (;;) {
        ThreeNJLabels L;
        L.kind = ThreeNJKind::TypeII;
        const Spin l1 = random_spin(rng, max_twice);
        const Spin l2 = random_spin(rng, max_twice);
        const Spin l3 = complete_triad(rng, l1, l2, max_twice);
        if (!triad_admissible(l1, l2, l3)) continue;
        L.l = {l1, l2, l3};
        const Spin j1 = random_spin(rng, max_twice);
        const Spin j2 = complete_triad(rng, l1, j1, max_twice);
        const Spin j3 = complete_triad(rng, j1, l3, max_twice);
        L.j = {j1, j2, j3};
        const Spin k1 = random_spin(rng, max_twice);
        const Spin k2 = complete_triad(rng, l1, k1, max_twice);
        const Spin k3 = complete_triad(rng, k1, l3, max_twice);
        L.k = {k1, k2, k3};
        if (L.all_triads_admissible()) return L;
    }
}

}  // namespace spinnet::testing
