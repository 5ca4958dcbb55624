#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "spinnet/contraction.hpp"
#include "spinnet/error.hpp"
#include "test_support.hpp"

using namespace spinnet;
using namespace spinnet::testing;

TEST_CASE("9j vanishes when any row or column triad fails") {
    CHECK(nine_j(NineJLabels::from_twice({2, 2, 6, 2, 2, 2, 2, 2, 2})).is_zero());
    CHECK(nine_j(NineJLabels::from_twice({1, 1, 2, 1, 1, 2, 1, 1, 1})).is_zero());
}

TEST_CASE("9j equals the six-3j contraction on small spins") {
    long nonzero = 0, checked = 0;
    for (int a = 0; a <= 3; ++a)
        for (int b = 0; b <= 3; ++b)
            for (int c = 0; c <= 3; ++c)
                for (int d = 0; d <= 3; ++d)
                    for (int e = 0; e <= 3; ++e)
                        for (int f = 0; f <= 3; ++f) {
                            if (!triad_admissible(Spin(a), Spin(b), Spin(c))) continue;
                            if (!triad_admissible(Spin(d), Spin(e), Spin(f))) continue;
                            for (int g = 0; g <= 3; ++g)
                                for (int h = 0; h <= 3; ++h)
                                    for (int i = 0; i <= 3; ++i) {
                                        const NineJLabels L = NineJLabels::from_twice(
                                            {a, b, c, d, e, f, g, h, i});
                                        if (!L.all_triads_admissible()) continue;
                                        ++checked;
                                        const RadicalRational lhs = nine_j(L);
                                        if (!lhs.is_zero()) ++nonzero;
                                        REQUIRE(lhs == ninej_by_contraction(L));
                                    }
                        }
    CHECK(checked > 1000);
    CHECK(nonzero > 500);
}

TEST_CASE("9j pinned values") {
    CHECK(nine_j(NineJLabels::from_twice({2, 2, 2, 2, 2, 2, 2, 2, 2})).is_zero());
    // {1 1 1; 1 1 1; 2 2 2} appears in LS-jj transformation tables
    const NineJLabels L = NineJLabels::from_twice({1, 1, 2, 1, 1, 2, 2, 2, 4});
    CHECK(nine_j(L) == ninej_by_contraction(L));
    CHECK(!nine_j(L).is_zero());
}

TEST_CASE("9j with a zero entry reduces to the forced-equal case") {
    SplitMix64 rng(41);
    int vanish = 0, nonzero = 0;
    for (int i = 0; i < 200; ++i) {
        NineJLabels L = random_nine_j(rng, 4);
        L.j[2][1] = Spin(0);  // h = 0 forces b = e and g = i
        const RadicalRational v = nine_j(L);
        if (!(L.j[0][1] == L.j[1][1]) || !(L.j[2][0] == L.j[2][2])) {
            CHECK(v.is_zero());
            ++vanish;
        } else if (!v.is_zero()) {
            CHECK(v == ninej_by_contraction(L));
            ++nonzero;
        }
    }
    CHECK(vanish > 0);
    CHECK(nonzero > 0);
}

TEST_CASE("9j symmetry: transposition and odd permutations") {
    SplitMix64 rng(43);
    for (int i = 0; i < 25; ++i) {
        const NineJLabels L = random_nine_j(rng, 5);
        const RadicalRational v = nine_j(L);
        CHECK(nine_j(L.transposed()) == v);
        // odd row permutation carries (-1)^(sum of all nine)
        const auto odd = nine_j_permute(L, {1, 0, 2}, {0, 1, 2}, false);
        RadicalRational w = nine_j(odd.labels);
        w.scale(Rational(odd.phase));
        CHECK(w == v);
        // even permutations are phase-free
        const auto even = nine_j_permute(L, {1, 2, 0}, {2, 0, 1}, true);
        CHECK(even.phase == 1);
        CHECK(nine_j(even.labels) == v);
    }
}

TEST_CASE("single-sum identity in its row form") {
    // sum_x (-1)^(2x) (2x+1) {a b x; c d p}{c d x; e f q}{e f x; a b r}
    //   = nine_j({a f r; d q e; p c b})
    SplitMix64 rng(47);
    int tested = 0;
    while (tested < 20) {
        const Spin a = random_spin(rng, 4), b = random_spin(rng, 4);
        const Spin c = random_spin(rng, 4), d = random_spin(rng, 4);
        const Spin e = random_spin(rng, 4), f = random_spin(rng, 4);
        const Spin p = complete_triad(rng, a, d, 6);
        const Spin q = complete_triad(rng, c, f, 6);
        const Spin r = complete_triad(rng, e, a, 6);
        NineJLabels R;
        R.j = {{{a, f, r}, {d, q, e}, {p, c, b}}};
        ++tested;
        RadicalRational sum;
        const int lo = std::max({std::abs(a.twice - b.twice), std::abs(c.twice - d.twice),
                                 std::abs(e.twice - f.twice)});
        const int hi = std::min({a.twice + b.twice, c.twice + d.twice, e.twice + f.twice});
        for (int tx = lo; tx <= hi; tx += 2) {
            if ((a.twice + b.twice + tx) & 1) break;
            const Spin x(tx);
            RadicalRational term = wigner_6j({a, b, x, c, d, p});
            term *= wigner_6j({c, d, x, e, f, q});
            term *= wigner_6j({e, f, x, a, b, r});
            Rational w(tx + 1);
            if (tx & 1) w = -w;
            term.scale(w);
            sum += term;
        }
        CHECK(sum == nine_j(R));
    }
}

TEST_CASE("type I chain: base case and n=3 correspondence") {
    ThreeNJLabels L;
    L.kind = ThreeNJKind::TypeI;
    L.j = {Spin(2), Spin(2)};
    L.k = {Spin(2), Spin(2)};
    L.l = {Spin(2), Spin(2)};
    CHECK(three_nj(L) == wigner_6j(SixJArgs::from_twice(2, 2, 2, 2, 2, 2)));

    long checked = 0, nonzero = 0;
    for (int tj1 = 0; tj1 <= 2; ++tj1)
        for (int tj2 = 0; tj2 <= 2; ++tj2)
            for (int tj3 = 0; tj3 <= 2; ++tj3)
                for (int tk1 = 0; tk1 <= 2; ++tk1)
                    for (int tk2 = 0; tk2 <= 2; ++tk2)
                        for (int tk3 = 0; tk3 <= 2; ++tk3)
                            for (int tl1 = 0; tl1 <= 2; ++tl1)
                                for (int tl2 = 0; tl2 <= 2; ++tl2)
                                    for (int tl3 = 0; tl3 <= 2; ++tl3) {
                                        ThreeNJLabels T;
                                        T.kind = ThreeNJKind::TypeI;
                                        T.j = {Spin(tj1), Spin(tj2), Spin(tj3)};
                                        T.k = {Spin(tk1), Spin(tk2), Spin(tk3)};
                                        T.l = {Spin(tl1), Spin(tl2), Spin(tl3)};
                                        if (!T.all_triads_admissible()) continue;
                                        ++checked;
                                        const RadicalRational lhs = three_nj(T);
                                        if (!lhs.is_zero()) ++nonzero;
                                        REQUIRE(lhs ==
                                                nine_j(nine_j_arrangement_of_type1(T)));
                                    }
    CHECK(nonzero > 100);
}

TEST_CASE("type II n=3 equals the shared-triad product of two 6j") {
    SplitMix64 rng(53);
    int nonzero = 0;
    for (int i = 0; i < 50; ++i) {
        const ThreeNJLabels T = random_type2_n3(rng, 5);
        RadicalRational want =
            wigner_6j({T.l[0], T.l[1], T.l[2], T.j[2], T.j[0], T.j[1]});
        want *= wigner_6j({T.l[0], T.l[1], T.l[2], T.k[2], T.k[0], T.k[1]});
        CHECK(three_nj(T) == want);
        if (!want.is_zero()) ++nonzero;
    }
    CHECK(nonzero > 5);
}

TEST_CASE("type I n=4 matches the eight-3j contraction") {
    // exhaustive over twice <= 2: covers the full parity lattice, so any
    // phase slip in the recurrence or its slot alignment would surface
    long checked = 0, nonzero = 0;
    int t[12];
    ThreeNJLabels L;
    L.kind = ThreeNJKind::TypeI;
    L.j.resize(4);
    L.k.resize(4);
    L.l.resize(4);
    for (t[0] = 0; t[0] <= 2; ++t[0])
        for (t[1] = 0; t[1] <= 2; ++t[1])
            for (t[2] = 0; t[2] <= 2; ++t[2])
                for (t[3] = 0; t[3] <= 2; ++t[3])
                    for (t[4] = 0; t[4] <= 2; ++t[4])
                        for (t[5] = 0; t[5] <= 2; ++t[5])
                            for (t[6] = 0; t[6] <= 2; ++t[6])
                                for (t[7] = 0; t[7] <= 2; ++t[7]) {
                                    for (int i = 0; i < 4; ++i) L.j[i] = Spin(t[i]);
                                    for (int i = 0; i < 4; ++i) L.k[i] = Spin(t[4 + i]);
                                    // the rays are forced up to small freedom;
                                    // take both parities where allowed
                                    for (t[8] = 0; t[8] <= 2; ++t[8])
                                        for (t[9] = 0; t[9] <= 2; ++t[9])
                                            for (t[10] = 0; t[10] <= 2; ++t[10])
                                                for (t[11] = 0; t[11] <= 2; ++t[11]) {
                                                    for (int i = 0; i < 4; ++i)
                                                        L.l[i] = Spin(t[8 + i]);
                                                    if (!L.all_triads_admissible())
                                                        continue;
                                                    ++checked;
                                                    const RadicalRational lhs =
                                                        three_nj(L);
                                                    if (!lhs.is_zero()) ++nonzero;
                                                    REQUIRE(lhs ==
                                                            threenj1_by_contraction(L));
                                                }
                                }
    CHECK(checked > 500);
    CHECK(nonzero > 200);

    // and random spot checks at twice <= 3 (half-integer ceilings)
    SplitMix64 rng(59);
    int wide_nonzero = 0;
    for (int i = 0; i < 25; ++i) {
        const ThreeNJLabels W = random_type1(rng, 4, 3);
        const RadicalRational lhs = three_nj(W);
        if (!lhs.is_zero()) ++wide_nonzero;
        REQUIRE(lhs == threenj1_by_contraction(W));
    }
    CHECK(wide_nonzero > 5);
}

TEST_CASE("type I closing ray set to zero collapses one step") {
    SplitMix64 rng(61);
    for (int n : {3, 4, 5}) {
        int tested = 0;
        while (tested < (n == 3 ? 15 : 6)) {
            const ThreeNJLabels base = random_type1(rng, n, 4);
            if (three_nj(base).is_zero()) continue;
            ++tested;
            ThreeNJLabels ext = base;
            ext.j.push_back(base.k[0]);
            ext.k.push_back(base.j[0]);
            ext.l.push_back(Spin(0));
            const Spin x = base.l[n - 1];
            RadicalRational want = three_nj(base);
            Rational w(x.twice + 1);
            if (x.twice & 1) w = -w;
            want.scale(w);
            want *= wigner_6j(
                {base.j[0], base.k[n - 1], x, base.l[n - 1], Spin(0), base.j[0]});
            want *= wigner_6j(
                {base.k[0], base.j[n - 1], x, base.l[n - 1], Spin(0), base.k[0]});
            CHECK(three_nj(ext) == want);
        }
    }
}

TEST_CASE("type II closing ray set to zero collapses one step") {
    SplitMix64 rng(63);
    int tested = 0, live = 0;
    while (tested < 12) {
        const ThreeNJLabels base = random_type2_n3(rng, 4);
        ++tested;
        ThreeNJLabels ext = base;
        ext.j.push_back(base.j[0]);  // the vanishing ray forces j4 = j1, k4 = k1
        ext.k.push_back(base.k[0]);
        ext.l.push_back(Spin(0));
        const Spin x = base.l[2];
        RadicalRational want = three_nj(base);
        if (!want.is_zero()) ++live;
        Rational w(x.twice + 1);
        if (x.twice & 1) w = -w;
        const int psi = phase_from_twice(base.j[0].twice - base.k[0].twice +
                                         base.j[2].twice - base.k[2].twice);
        want.scale(w * psi);
        want *= wigner_6j({base.k[0], base.k[2], x, base.l[2], Spin(0), base.k[0]});
        want *= wigner_6j({base.j[0], base.j[2], x, base.l[2], Spin(0), base.j[0]});
        CHECK(three_nj(ext) == want);
    }
    CHECK(live > 2);
}

TEST_CASE("empty summation ranges give exact zero") {
    // the two bounding triangles of the contracted ray cannot overlap
    ThreeNJLabels L;
    L.kind = ThreeNJKind::TypeI;
    L.j = {Spin(6), Spin(0), Spin(0)};
    L.k = {Spin(0), Spin(0), Spin(0)};
    L.l = {Spin(6), Spin(0), Spin(0)};
    CHECK(three_nj(L).is_zero());
    // parity-inconsistent bounds
    ThreeNJLabels P;
    P.kind = ThreeNJKind::TypeI;
    P.j = {Spin(1), Spin(2), Spin(2)};
    P.k = {Spin(2), Spin(2), Spin(2)};
    P.l = {Spin(1), Spin(2), Spin(2)};
    CHECK(three_nj(P).is_zero());
}

TEST_CASE("3nj argument validation") {
    ThreeNJLabels bad;
    bad.kind = ThreeNJKind::TypeI;
    bad.j = {Spin(2), Spin(2)};
    bad.k = {Spin(2)};
    bad.l = {Spin(2), Spin(2)};
    CHECK_THROWS_AS(three_nj(bad), ArgumentError);
    ThreeNJLabels small;
    small.kind = ThreeNJKind::TypeI;
    small.j = {Spin(2)};
    small.k = {Spin(2)};
    small.l = {Spin(2)};
    CHECK_THROWS_AS(three_nj(small), ArgumentError);
}

TEST_CASE("five-6j residual vanishes for random inputs") {
    SplitMix64 rng(67);
    for (int i = 0; i < 60; ++i) {
        auto d = [&] { return random_spin(rng, 19); };
        CHECK(be_residual(d(), d(), d(), d(), d(), d(), d(), d(), d()).is_zero());
    }
    // inputs with inadmissible triads vanish on both sides
    CHECK(be_residual(Spin(1), Spin(1), Spin(1), Spin(1), Spin(1), Spin(1), Spin(1),
                      Spin(1), Spin(1))
              .is_zero());
}

TEST_CASE("recursion coefficient examples") {
    // all-ones array in the {c a b; f d e; j g h} arrangement
    const NineJLabels ones = NineJLabels::from_twice({2, 2, 2, 2, 2, 2, 2, 2, 2});
    const RecursionCoeffs cc = recursion_coeffs(ones, RecursionVariable::C);
    CHECK(cc.cosine == Rational(2));
    // the identity fixes the sign of the d(d+1) term in the first bracket
    const RecursionCoeffs dd = recursion_coeffs(ones, RecursionVariable::D);
    CHECK(dd.cosine == Rational(2));
    // degenerate quadrilateral: q at the boundary annihilates the amplitude
    NineJLabels edge = ones;
    edge.j[0][0] = Spin(4);  // c = a + b places c-1 on the boundary factor
    const RecursionCoeffs ec = recursion_coeffs(edge, RecursionVariable::C);
    CHECK(ec.a_next.is_zero());
    CHECK_THROWS_AS(
        recursion_coeffs(NineJLabels::from_twice({0, 2, 2, 2, 2, 2, 2, 2, 2}),
                         RecursionVariable::C),
        DomainError);
}

TEST_CASE("five-term recursion residuals vanish for all three pairs") {
    SplitMix64 rng(71);
    int tested = 0;
    while (tested < 40) {
        NineJLabels L = random_nine_j(rng, 15);
        bool diag_ok = true;
        for (int d = 0; d < 3; ++d) diag_ok = diag_ok && L.j[d][d].twice >= 2;
        if (!diag_ok) continue;
        ++tested;
        CHECK(nine_j_recursion_residual(L, RecursionPair::CD).is_zero());
        CHECK(nine_j_recursion_residual(L, RecursionPair::CH).is_zero());
        CHECK(nine_j_recursion_residual(L, RecursionPair::DH).is_zero());
    }
}

TEST_CASE("recursion residual handles boundary shifts and rejects zero pivots") {
    // shifting past the triangle boundary leaves vanishing symbols behind
    const NineJLabels L = NineJLabels::from_twice({4, 2, 2, 2, 2, 2, 2, 2, 2});
    CHECK(nine_j_recursion_residual(L, RecursionPair::CD).is_zero());
    const NineJLabels z = NineJLabels::from_twice({0, 2, 2, 2, 2, 2, 2, 2, 2});
    CHECK_THROWS_AS(nine_j_recursion_residual(z, RecursionPair::CD), DomainError);
}

TEST_CASE("lambda-shift residual vanishes and the sums stay short") {
    SplitMix64 rng(73);
    int tested = 0, nontrivial = 0;
    while (tested < 30) {
        LambdaSymmetryArgs A;
        A.lambda = Spin(rng.uniform_int(0, 1) ? 2 : 1);
        A.a = random_spin(rng, 7);
        A.b = random_spin(rng, 7);
        A.d = random_spin(rng, 7);
        A.e = random_spin(rng, 7);
        A.f = random_spin(rng, 7);
        A.g = random_spin(rng, 7);
        A.h = random_spin(rng, 7);
        A.jj = random_spin(rng, 7);
        A.c = random_spin(rng, 7);
        A.a_prime =
            Spin(std::abs(A.a.twice + (rng.uniform_int(0, 1) ? 1 : -1) * A.lambda.twice));
        A.f_prime =
            Spin(std::abs(A.f.twice + (rng.uniform_int(0, 1) ? 1 : -1) * A.lambda.twice));
        ++tested;
        CHECK(lambda_symmetry_residual(A).is_zero());
        const auto [nx, ny] = lambda_symmetry_term_counts(A);
        CHECK(nx <= A.lambda.twice + 1);
        CHECK(ny <= A.lambda.twice + 1);
        if (nx > 0 && ny > 0) ++nontrivial;
    }
    // handcrafted instances where both sums carry live terms
    {
        LambdaSymmetryArgs A;  // lambda = 1
        A.lambda = Spin(2);
        A.a = A.b = A.c = A.d = A.e = A.f = A.g = A.h = A.jj = Spin(2);
        A.a_prime = Spin(4);
        A.f_prime = Spin(0);
        CHECK(lambda_symmetry_residual(A).is_zero());
        const auto [nx, ny] = lambda_symmetry_term_counts(A);
        CHECK(nx > 0);
        CHECK(ny > 0);
        ++nontrivial;
    }
    {
        LambdaSymmetryArgs A;  // lambda = 1/2 with a half-integer bridge
        A.lambda = Spin(1);
        A.a = A.b = A.d = A.e = A.f = A.g = A.h = A.jj = Spin(2);
        A.c = Spin(1);
        A.a_prime = Spin(3);
        A.f_prime = Spin(1);
        CHECK(lambda_symmetry_residual(A).is_zero());
        const auto [nx, ny] = lambda_symmetry_term_counts(A);
        CHECK(nx > 0);
        CHECK(ny > 0);
        ++nontrivial;
    }
    CHECK(nontrivial >= 2);
}
