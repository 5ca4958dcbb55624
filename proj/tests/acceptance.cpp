// Acceptance suite: one pass/fail line per criterion, nonzero exit on any
// failure. Tolerances are pinned here, not configurable.
#include <chrono>
#include <cmath>
#include <cstdarg>
#include <cstdio>
#include <vector>

#include "spinnet/asymptotics.hpp"
#include "spinnet/bench.hpp"
#include "spinnet/contraction.hpp"
#include "spinnet/recoupling.hpp"
#include "spinnet/rng.hpp"
#include "spinnet/wigner.hpp"
#include "spinnet/yutsis.hpp"
#include "test_support.hpp"

using namespace spinnet;
using namespace spinnet::testing;

namespace {

int failures = 0;
std::chrono::steady_clock::time_point t0;

void start() { t0 = std::chrono::steady_clock::now(); }

void report(const char* name, bool pass, const std::string& detail) {
    const double secs =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    std::printf("[%s] %s: %s (%.1fs)\n", pass ? "PASS" : "FAIL", name, detail.c_str(),
                secs);
    std::fflush(stdout);
    if (!pass) ++failures;
}

std::string fmt(const char* f, ...) {
    char buf[512];
    va_list args;
    va_start(args, f);
    std::vsnprintf(buf, sizeof buf, f, args);
    va_end(args);
    return buf;
}

constexpr std::uint64_t kBenchSeed = 20260808;

// ---------------------------------------------------------------- criterion 1
void criterion1() {
    start();
    long checked = 0, nonzero = 0, bad = 0;
    for (int a = 0; a <= 6; ++a)
        for (int b = 0; b <= 6; ++b)
            for (int c = 0; c <= 6; ++c)
                for (int d = 0; d <= 6; ++d)
                    for (int e = 0; e <= 6; ++e)
                        for (int f = 0; f <= 6; ++f) {
                            const SixJArgs s = SixJArgs::from_twice(a, b, c, d, e, f);
                            const RadicalRational lhs = wigner_6j(s);
                            if (!lhs.is_zero()) ++nonzero;
                            ++checked;
                            if (!(lhs == sixj_by_contraction(s))) ++bad;
                        }
    report("criterion 1a (6j = four-3j contraction, twice <= 6)", bad == 0,
           fmt("%ld tuples, %ld nonzero, %ld mismatches", checked, nonzero, bad));

    start();
    checked = nonzero = bad = 0;
    for (int a = 0; a <= 4; ++a)
        for (int b = 0; b <= 4; ++b)
            for (int c = 0; c <= 4; ++c) {
                if (!triad_admissible(Spin(a), Spin(b), Spin(c))) continue;
                for (int d = 0; d <= 4; ++d)
                    for (int e = 0; e <= 4; ++e)
                        for (int f = 0; f <= 4; ++f) {
                            if (!triad_admissible(Spin(d), Spin(e), Spin(f))) continue;
                            for (int g = 0; g <= 4; ++g) {
                                if (!triad_admissible(Spin(a), Spin(d), Spin(g)))
                                    continue;
                                for (int h = 0; h <= 4; ++h) {
                                    if (!triad_admissible(Spin(b), Spin(e), Spin(h)))
                                        continue;
                                    for (int i = 0; i <= 4; ++i) {
                                        const NineJLabels L = NineJLabels::from_twice(
                                            {a, b, c, d, e, f, g, h, i});
                                        if (!L.all_triads_admissible()) continue;
                                        ++checked;
                                        const RadicalRational lhs = nine_j(L);
                                        if (!lhs.is_zero()) ++nonzero;
                                        if (!(lhs == ninej_by_contraction(L))) ++bad;
                                    }
                                }
                            }
                        }
            }
    report("criterion 1b (9j = six-3j contraction, twice <= 4)", bad == 0,
           fmt("%ld admissible sets, %ld nonzero, %ld mismatches", checked, nonzero, bad));
}

// ---------------------------------------------------------------- criterion 2
void criterion2() {
    start();
    SplitMix64 rng(1001);
    int zero = 0, live = 0;
    const int nBE = 1000;
    for (int i = 0; i < nBE; ++i) {
        BeArgs v;
        if (i & 1) {
            v = random_be_args(rng, 19);
        } else {
            auto d = [&] { return Spin(rng.uniform_int(0, 19)); };
            v = {d(), d(), d(), d(), d(), d(), d(), d(), d()};
        }
        RadicalRational rhs = wigner_6j({v.p, v.q, v.r, v.e, v.a, v.d});
        rhs *= wigner_6j({v.p, v.q, v.r, v.f, v.b, v.c});
        if (!rhs.is_zero()) ++live;
        if (be_residual(v.a, v.b, v.c, v.d, v.e, v.f, v.p, v.q, v.r).is_zero()) ++zero;
    }
    report("criterion 2a (five-6j residual = 0, 1000 random, twice <= 19)",
           zero == nBE && live > 200, fmt("%d/%d exactly zero, %d nonvanishing", zero,
                                          nBE, live));

    start();
    SplitMix64 rng2(1002);
    int ok = 0;
    const int nRec = 500;
    int produced = 0;
    while (produced < nRec) {
        NineJLabels L = random_nine_j(rng2, 15);
        bool diag = true;
        for (int d = 0; d < 3; ++d) diag = diag && L.j[d][d].twice >= 2;
        if (!diag) continue;
        ++produced;
        bool all = true;
        for (RecursionPair p : {RecursionPair::CD, RecursionPair::CH, RecursionPair::DH})
            all = all && nine_j_recursion_residual(L, p).is_zero();
        if (all) ++ok;
    }
    report("criterion 2b (five-term recursion residual = 0, 500 x 3 pairs, twice <= 15)",
           ok == nRec, fmt("%d/%d exactly zero for all three pairs", ok, nRec));

    start();
    SplitMix64 rng3(1003);
    int lzero = 0, llive = 0;
    const int nLam = 200;
    for (int i = 0; i < nLam; ++i) {
        LambdaSymmetryArgs A;
        long guard = 0;
        for (;;) {
            A.lambda = Spin(rng3.uniform_int(0, 1) ? 2 : 1);
            auto d = [&] { return Spin(rng3.uniform_int(0, 9)); };
            A.a = d();
            A.b = d();
            A.c = d();
            A.d = d();
            A.e = d();
            A.f = d();
            A.g = d();
            A.h = d();
            A.jj = d();
            A.a_prime = Spin(
                std::abs(A.a.twice + (rng3.uniform_int(0, 1) ? 1 : -1) * A.lambda.twice));
            A.f_prime = Spin(
                std::abs(A.f.twice + (rng3.uniform_int(0, 1) ? 1 : -1) * A.lambda.twice));
            if (!(i & 1)) break;  // half the cases stay unconstrained
            const auto [nx, ny] = lambda_symmetry_term_counts(A);
            if ((nx > 0 && ny > 0) || ++guard > 4000) break;
        }
        const auto [nx, ny] = lambda_symmetry_term_counts(A);
        if (nx > 0 && ny > 0) ++llive;
        if (lambda_symmetry_residual(A).is_zero()) ++lzero;
    }
    report("criterion 2c (lambda-shift residual = 0, 200 random, lambda in {1/2,1})",
           lzero == nLam && llive > 20,
           fmt("%d/%d exactly zero, %d with live sums on both sides", lzero, nLam, llive));
}

// ---------------------------------------------------------------- criterion 3
void criterion3() {
    start();
    long checked = 0, nonzero = 0, bad = 0;
    for (int tj1 = 0; tj1 <= 4; ++tj1)
        for (int tj2 = 0; tj2 <= 4; ++tj2)
            for (int tl1 = 0; tl1 <= 4; ++tl1) {
                if (!triad_admissible(Spin(tj1), Spin(tj2), Spin(tl1))) continue;
                for (int tj3 = 0; tj3 <= 4; ++tj3)
                    for (int tl2 = 0; tl2 <= 4; ++tl2) {
                        if (!triad_admissible(Spin(tj2), Spin(tj3), Spin(tl2))) continue;
                        for (int tk1 = 0; tk1 <= 4; ++tk1)
                            for (int tk2 = 0; tk2 <= 4; ++tk2) {
                                if (!triad_admissible(Spin(tk1), Spin(tk2), Spin(tl1)))
                                    continue;
                                for (int tk3 = 0; tk3 <= 4; ++tk3) {
                                    if (!triad_admissible(Spin(tk2), Spin(tk3), Spin(tl2)))
                                        continue;
                                    for (int tl3 = 0; tl3 <= 4; ++tl3) {
                                        ThreeNJLabels L;
                                        L.kind = ThreeNJKind::TypeI;
                                        L.j = {Spin(tj1), Spin(tj2), Spin(tj3)};
                                        L.k = {Spin(tk1), Spin(tk2), Spin(tk3)};
                                        L.l = {Spin(tl1), Spin(tl2), Spin(tl3)};
                                        if (!L.all_triads_admissible()) continue;
                                        ++checked;
                                        const RadicalRational lhs = three_nj(L);
                                        if (!lhs.is_zero()) ++nonzero;
                                        if (!(lhs ==
                                              nine_j(nine_j_arrangement_of_type1(L))))
                                            ++bad;
                                    }
                                }
                            }
                    }
            }
    report("criterion 3a (type I n=3 = 9j, exhaustive twice <= 4)", bad == 0,
           fmt("%ld admissible sets, %ld nonzero, %ld mismatches", checked, nonzero, bad));

    start();
    SplitMix64 rng(1004);
    int ok = 0, live = 0;
    const int nII = 500;
    for (int i = 0; i < nII; ++i) {
        // alternate fully random label sets with constructed admissible ones
        ThreeNJLabels T;
        if (i & 1) {
            T = random_type2_n3(rng, 6);
        } else {
            T.kind = ThreeNJKind::TypeII;
            for (int t = 0; t < 3; ++t) {
                T.j.push_back(Spin(rng.uniform_int(0, 6)));
                T.k.push_back(Spin(rng.uniform_int(0, 6)));
                T.l.push_back(Spin(rng.uniform_int(0, 6)));
            }
        }
        RadicalRational want = wigner_6j({T.l[0], T.l[1], T.l[2], T.j[2], T.j[0], T.j[1]});
        want *= wigner_6j({T.l[0], T.l[1], T.l[2], T.k[2], T.k[0], T.k[1]});
        if (!want.is_zero()) ++live;
        if (three_nj(T) == want) ++ok;
    }
    report("criterion 3b (type II n=3 = two-6j product, 500 random)", ok == nII && live > 100,
           fmt("%d/%d equal, %d nonzero", ok, nII, live));
}

// ---------------------------------------------------------------- criterion 4
void criterion4() {
    start();
    bool pass = true;
    std::string notes;

    // K_{3,3} isomorphism
    YutsisGraph k33;
    k33.num_nodes = 6;
    for (int u = 0; u < 3; ++u)
        for (int v = 3; v < 6; ++v) k33.edges.push_back({u, v, ""});
    if (!isomorphic(cartwheel_type1(3), k33)) {
        pass = false;
        notes += " cartwheel(3)!~K33;";
    }

    if (girth(prism_type2(3)) != 3) pass = false;
    for (int n = 4; n <= 8; ++n)
        if (girth(prism_type2(n)) != 4) pass = false;
    for (int n = 3; n <= 8; ++n)
        if (girth(cartwheel_type1(n)) != 4) pass = false;

    for (int n = 3; n <= 8; ++n) {
        const auto hc = hamiltonian_cycle(cartwheel_type1(n));
        const auto hp = hamiltonian_cycle(prism_type2(n));
        if (!hc || static_cast<int>(hc->size()) != 2 * n) pass = false;
        if (!hp || static_cast<int>(hp->size()) != 2 * n) pass = false;
    }
    if (hamiltonian_cycle(petersen())) {
        pass = false;
        notes += " petersen hamiltonian;";
    }

    for (int n = 3; n <= 8; ++n) {
        if (euler_characteristic(prism_type2(n)).chi != 2) pass = false;
        if (euler_characteristic(cartwheel_type1(n)).chi != 1) pass = false;
    }

    for (int n = 3; n <= 7; ++n) {
        const YutsisGraph pr = prism_type2(n);
        const YutsisGraph grown =
            insert_square(pr, pr.edge_by_label("j1"), pr.edge_by_label("k1"), {});
        if (euler_characteristic(grown).chi != 2) pass = false;
        if (!isomorphic(grown, prism_type2(n + 1))) pass = false;
    }
    for (int n = 4; n <= 7; ++n) {
        const YutsisGraph cw = cartwheel_type1(n - 1);
        const YutsisGraph grown =
            insert_bowtie(cw, cw.edge_by_label("l" + std::to_string(n - 1)),
                          cw.edge_by_label("j1"), cw.edge_by_label("k1"), {});
        if (euler_characteristic(grown).chi != 1) pass = false;
        if (!isomorphic(grown, cartwheel_type1(n))) pass = false;
    }

    const auto cut = nontrivial_cut3(prism_type2(3));
    if (!cut) {
        pass = false;
    } else {
        const YutsisGraph p3 = prism_type2(3);
        for (int e : *cut)
            if (p3.edges[e].label[0] != 'l') pass = false;  // the three laterals
    }
    if (nontrivial_cut3(cartwheel_type1(3))) pass = false;
    if (nontrivial_cut3(cartwheel_type1(4))) pass = false;

    report("criterion 4 (graph facts: K33, girth, Hamiltonian, chi, insertions, cuts)",
           pass, notes.empty() ? "all facts hold for n = 3..8" : notes);
}

// ---------------------------------------------------------------- criterion 5
std::vector<BenchRecord> run_grid(AsymFormula f, Spin jm) {
    std::vector<BenchRecord> out;
    for (int J : {20, 40, 60, 80, 100}) {
        SampleConfig cfg;
        cfg.J = J;
        cfg.j_m = jm;
        cfg.count = 200;
        cfg.seed = kBenchSeed;
        cfg.formula = f;
        cfg.threads = 2;
        out.push_back(error_stats(collect_samples(cfg), cfg));
    }
    return out;
}

void criterion5() {
    start();
    const auto rec63 = run_grid(AsymFormula::Asym63, Spin(4));
    const auto rec45 = run_grid(AsymFormula::Asym45, Spin(4));

    bool pass_a = true;
    std::string detail_a;
    for (const auto& r : rec63) {
        const double target = 0.3 * 4.0 / r.J;
        const double ratio = r.frac_err / target;
        detail_a += fmt(" 63@%d:%.2f", r.J, ratio);
        if (ratio > 2.0 || ratio < 0.5) pass_a = false;
    }
    for (const auto& r : rec45) {
        const double target = 0.2 * 4.0 / r.J;
        const double ratio = r.frac_err / target;
        detail_a += fmt(" 45@%d:%.2f", r.J, ratio);
        if (ratio > 2.0 || ratio < 0.5) pass_a = false;
    }
    report("criterion 5a (frac_err within factor 2 of 0.3/0.2 jm^2/J at each J)", pass_a,
           "ratios:" + detail_a);

    start();
    auto slope_of = [](const std::vector<BenchRecord>& rs, bool mag) {
        std::vector<std::pair<double, double>> pts;
        for (const auto& r : rs) pts.push_back({double(r.J), mag ? r.rms_mag : r.frac_err});
        return scaling_fit(pts);
    };
    const double fe63 = slope_of(rec63, false), fe45 = slope_of(rec45, false);
    const bool pass_b = std::abs(fe63 + 1.0) <= 0.2 && std::abs(fe45 + 1.0) <= 0.2;
    report("criterion 5b (frac_err log-log slope = -1 +- 0.2)", pass_b,
           fmt("slope63 = %.3f, slope45 = %.3f", fe63, fe45));

    const double mg63 = slope_of(rec63, true), mg45 = slope_of(rec45, true);
    const bool pass_c = std::abs(mg63 + 2.0) <= 0.3 && std::abs(mg45 + 1.0) <= 0.3;
    report("criterion 5c (rms_mag slopes: -2 +- 0.3 and -1 +- 0.3)", pass_c,
           fmt("slope63 = %.3f, slope45 = %.3f", mg63, mg45));

    bool pass_d = true;
    std::string detail_d;
    for (const auto& r : rec45) {
        detail_d += fmt(" %d:%.3f", r.J, r.zero_frac);
        if (r.zero_frac < 0.10 || r.zero_frac > 0.25) pass_d = false;
    }
    report("criterion 5d (four-large zero fraction in [0.10, 0.25])", pass_d,
           "zero_frac:" + detail_d);
}

// ---------------------------------------------------------------- criterion 6
void criterion6() {
    start();
    bool pass = true;
    std::string detail;
    for (AsymFormula f : {AsymFormula::Asym63, AsymFormula::Asym45}) {
        SampleConfig a;
        a.J = 100;
        a.j_m = Spin(4);
        a.count = 200;
        a.seed = kBenchSeed;
        a.formula = f;
        a.threads = 2;
        SampleConfig b = a;
        b.j_m = Spin(9);
        const double fa = error_stats(collect_samples(a), a).frac_err;
        const double fb = error_stats(collect_samples(b), b).frac_err;
        const double ratio = fb / fa;
        detail += fmt(" %s:%.2f", formula_name(f).c_str(), ratio);
        if (ratio < 2.5 || ratio > 10.0) pass = false;
    }
    report("criterion 6 (frac_err(9/2)/frac_err(2) at J=100 in [2.5, 10])", pass,
           "ratios:" + detail);
}

// ---------------------------------------------------------------- criterion 7
void criterion7() {
    start();
    CampaignConfig cfg;
    cfg.J_values = {20, 60};
    cfg.jm_twices = {4};
    cfg.formulas = {AsymFormula::Asym63, AsymFormula::Asym45};
    cfg.count = 60;
    cfg.seed = 77;
    cfg.threads = 1;
    const std::string serial = run_campaign(cfg).csv;
    const std::string again = run_campaign(cfg).csv;
    cfg.threads = 2;
    const std::string threaded = run_campaign(cfg).csv;
    const bool pass = serial == again && serial == threaded;
    report("criterion 7 (byte-identical CSV across runs and thread counts)", pass,
           fmt("%zu bytes, rerun %s, threaded %s", serial.size(),
               serial == again ? "identical" : "DIFFERS",
               serial == threaded ? "identical" : "DIFFERS"));
}

}  // namespace

int main() {
    criterion1();
    criterion2();
    criterion3();
    criterion4();
    criterion5();
    criterion6();
    criterion7();
    if (failures == 0)
        std::printf("acceptance: all criteria PASS\n");
    else
        std::printf("acceptance: %d criterion check(s) FAILED\n", failures);
    return failures == 0 ? 0 : 1;
}
