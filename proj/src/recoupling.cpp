#include "spinnet/recoupling.hpp"

#include <algorithm>

#include "spinnet/error.hpp"
#include "spinnet/wigner.hpp"

namespace spinnet {

std::array<Triad, 6> NineJLabels::triads() const {
    return {Triad{j[0][0], j[0][1], j[0][2]}, Triad{j[1][0], j[1][1], j[1][2]},
            Triad{j[2][0], j[2][1], j[2][2]}, Triad{j[0][0], j[1][0], j[2][0]},
            Triad{j[0][1], j[1][1], j[2][1]}, Triad{j[0][2], j[1][2], j[2][2]}};
}

bool NineJLabels::all_triads_admissible() const {
    for (const Triad& t : triads())
        if (!t.admissible()) return false;
    return true;
}

NineJLabels NineJLabels::transposed() const {
    NineJLabels out;
    for (int r = 0; r < 3; ++r)
        for (int c = 0; c < 3; ++c) out.j[r][c] = j[c][r];
    return out;
}

RadicalRational nine_j(const NineJLabels& L) {
    if (!L.all_triads_admissible()) return {};
    const Spin a = L.j[0][0], b = L.j[0][1], c = L.j[0][2];
    const Spin d = L.j[1][0], e = L.j[1][1], f = L.j[1][2];
    const Spin g = L.j[2][0], h = L.j[2][1], i = L.j[2][2];

    const int lo = std::max({std::abs(a.twice - i.twice), std::abs(b.twice - f.twice),
                             std::abs(h.twice - d.twice)});
    const int hi = std::min({a.twice + i.twice, b.twice + f.twice, h.twice + d.twice});

    RadicalRational sum;
    for (int tx = lo; tx <= hi; tx += 2) {
        if (((a.twice + i.twice + tx) & 1) != 0) break;  // wrong parity lattice
        const Spin x(tx);
        RadicalRational term = wigner_6j({a, b, c, f, i, x});
        if (term.is_zero()) continue;
        term *= wigner_6j({d, e, f, b, x, h});
        if (term.is_zero()) continue;
        term *= wigner_6j({g, h, i, x, a, d});
        if (term.is_zero()) continue;
        Rational w(tx + 1);
        if (tx & 1) w = -w;  // (-1)^(2x)
        term.scale(w);
        sum += term;
    }
    return sum;
}

void ThreeNJLabels::validate() const {
    if (j.size() != k.size() || j.size() != l.size())
        throw ArgumentError("3nj label sequences must have equal length");
    if (j.size() < 2) throw ArgumentError("3nj needs n >= 2");
}

std::vector<Triad> ThreeNJLabels::triads() const {
    validate();
    const int m = n();
    std::vector<Triad> out;
    out.reserve(2 * m);
    for (int i = 0; i + 1 < m; ++i) {
        out.push_back({j[i], j[i + 1], l[i]});
        out.push_back({k[i], k[i + 1], l[i]});
    }
    if (kind == ThreeNJKind::TypeI) {
        out.push_back({j[0], k[m - 1], l[m - 1]});
        out.push_back({j[m - 1], k[0], l[m - 1]});
    } else {
        out.push_back({j[m - 1], j[0], l[m - 1]});
        out.push_back({k[m - 1], k[0], l[m - 1]});
    }
    return out;
}

bool ThreeNJLabels::all_triads_admissible() const {
    for (const Triad& t : triads())
        if (!t.admissible()) return false;
    return true;
}

NineJLabels nine_j_arrangement_of_type1(const ThreeNJLabels& L) {
    L.validate();
    if (L.kind != ThreeNJKind::TypeI || L.n() != 3)
        throw ArgumentError("arrangement defined for type I with n = 3");
    NineJLabels out;
    out.j = {{{L.j[0], L.j[1], L.l[0]},
              {L.l[2], L.j[2], L.k[0]},
              {L.k[2], L.l[1], L.k[1]}}};
    return out;
}

namespace {

RadicalRational three_nj_impl(const ThreeNJLabels& L) {
    const int m = L.n();
    if (m == 2)
        return wigner_6j({L.j[0], L.j[1], L.l[0], L.k[0], L.k[1], L.l[1]});

    if (L.kind == ThreeNJKind::TypeII && m == 3) {
        // the type II 9j is the product of two 6j sharing the ray triad
        RadicalRational v = wigner_6j({L.l[0], L.l[1], L.l[2], L.j[2], L.j[0], L.j[1]});
        if (v.is_zero()) return v;
        return v * wigner_6j({L.l[0], L.l[1], L.l[2], L.k[2], L.k[0], L.k[1]});
    }

    ThreeNJLabels base = L;
    base.j.pop_back();
    base.k.pop_back();
    base.l.pop_back();

    const Spin j1 = L.j[0], jn1 = L.j[m - 2], jn = L.j[m - 1];
    const Spin k1 = L.k[0], kn1 = L.k[m - 2], kn = L.k[m - 1];
    const Spin ln1 = L.l[m - 2], ln = L.l[m - 1];

    // bounds for the contracted ray
    int lo, hi;
    if (L.kind == ThreeNJKind::TypeI) {
        lo = std::max(std::abs(j1.twice - kn1.twice), std::abs(k1.twice - jn1.twice));
        hi = std::min(j1.twice + kn1.twice, k1.twice + jn1.twice);
        if (((j1.twice + kn1.twice) & 1) != ((k1.twice + jn1.twice) & 1)) return {};
    } else {
        lo = std::max(std::abs(k1.twice - kn1.twice), std::abs(j1.twice - jn1.twice));
        hi = std::min(k1.twice + kn1.twice, j1.twice + jn1.twice);
        if (((k1.twice + kn1.twice) & 1) != ((j1.twice + jn1.twice) & 1)) return {};
    }

    RadicalRational sum;
    for (int tx = lo; tx <= hi; tx += 2) {
        if (L.kind == ThreeNJKind::TypeI && ((j1.twice + kn1.twice + tx) & 1)) break;
        if (L.kind == ThreeNJKind::TypeII && ((k1.twice + kn1.twice + tx) & 1)) break;
        const Spin x(tx);
        base.l[m - 2] = x;
        RadicalRational term = three_nj_impl(base);
        if (term.is_zero()) continue;
        if (L.kind == ThreeNJKind::TypeI) {
            term *= wigner_6j({j1, kn1, x, ln1, ln, kn});
            if (term.is_zero()) continue;
            term *= wigner_6j({k1, jn1, x, ln1, ln, jn});
        } else {
            term *= wigner_6j({k1, kn1, x, ln1, ln, kn});
            if (term.is_zero()) continue;
            term *= wigner_6j({j1, jn1, x, ln1, ln, jn});
        }
        if (term.is_zero()) continue;
        Rational w(tx + 1);
        if (tx & 1) w = -w;  // (-1)^(2x), constant over the admissible lattice
        term.scale(w);
        sum += term;
    }
    if (sum.is_zero()) return sum;

    if (L.kind == ThreeNJKind::TypeII) {
        // (-1)^Psi with Psi = j1 - k1 + j_{n-1} - k_{n-1}
        const int phase =
            phase_from_twice(j1.twice - k1.twice + jn1.twice - kn1.twice);
        if (phase < 0) sum.scale(Rational(-1));
    }
    return sum;
}

}  // namespace

RadicalRational three_nj(const ThreeNJLabels& labels) {
    labels.validate();
    return three_nj_impl(labels);
}

namespace {

int perm_parity(const std::array<int, 3>& p) {
    int inv = 0;
    for (int i = 0; i < 3; ++i)
        for (int k = i + 1; k < 3; ++k)
            if (p[i] > p[k]) ++inv;
    return inv & 1;
}

}  // namespace

PermutedNineJ nine_j_permute(const NineJLabels& L, const std::array<int, 3>& row_perm,
                             const std::array<int, 3>& col_perm, bool transpose) {
    for (int i = 0; i < 3; ++i)
        if (row_perm[i] < 0 || row_perm[i] > 2 || col_perm[i] < 0 || col_perm[i] > 2)
            throw ArgumentError("permutation entries must be 0..2");
    PermutedNineJ out;
    NineJLabels base = transpose ? L.transposed() : L;
    for (int r = 0; r < 3; ++r)
        for (int c = 0; c < 3; ++c) out.labels.j[r][c] = base.j[row_perm[r]][col_perm[c]];
    if ((perm_parity(row_perm) + perm_parity(col_perm)) & 1) {
        int total = 0;
        for (int r = 0; r < 3; ++r)
            for (int c = 0; c < 3; ++c) total += L.j[r][c].twice;
        // odd twice-sums only occur for vanishing symbols; phase immaterial
        out.phase = (total & 1) ? 1 : phase_from_twice(total);
    }
    return out;
}

RadicalRational be_residual(Spin a, Spin b, Spin c, Spin d, Spin e, Spin f, Spin p, Spin q,
                            Spin r) {
    const int lo = std::max({std::abs(a.twice - b.twice), std::abs(c.twice - d.twice),
                             std::abs(e.twice - f.twice)});
    const int hi = std::min({a.twice + b.twice, c.twice + d.twice, e.twice + f.twice});
    const long tR = a.twice + b.twice + c.twice + d.twice + e.twice + f.twice + p.twice +
                    q.twice + r.twice;

    RadicalRational lhs;
    for (int tx = lo; tx <= hi; tx += 2) {
        if ((a.twice + b.twice + tx) & 1) break;
        const Spin x(tx);
        RadicalRational term = wigner_6j({a, b, x, c, d, p});
        if (term.is_zero()) continue;
        term *= wigner_6j({c, d, x, e, f, q});
        if (term.is_zero()) continue;
        term *= wigner_6j({e, f, x, b, a, r});
        if (term.is_zero()) continue;
        term.scale(Rational(tx + 1) * phase_from_twice(tR + tx));
        lhs += term;
    }

    RadicalRational rhs = wigner_6j({p, q, r, e, a, d});
    if (!rhs.is_zero()) rhs *= wigner_6j({p, q, r, f, b, c});
    return lhs - rhs;
}

namespace {

// s(s+1) as an exact rational of the twice-value
Rational qq(Spin s) { return Rational(long(s.twice) * (s.twice + 2), 4); }

// A_q(pr, st): square root of the product of eight linear factors; the
// squared area of the quadrilateral bounded by p, r, s, t split at q.
RadicalRational area_amplitude(int tq, Spin p, Spin r, Spin s, Spin t) {
    const long factors[8] = {
        (-p.twice + r.twice + tq) / 2, (p.twice - r.twice + tq) / 2,
        (p.twice + r.twice - tq + 2) / 2, (p.twice + r.twice + tq + 2) / 2,
        (-s.twice + t.twice + tq) / 2, (s.twice - t.twice + tq) / 2,
        (s.twice + t.twice - tq + 2) / 2, (s.twice + t.twice + tq + 2) / 2,
    };
    if (((p.twice + r.twice + tq) & 1) || ((s.twice + t.twice + tq) & 1))
        throw DomainError("amplitude parity mismatch");
    BigInt prod = 1;
    for (long v : factors) prod *= v;
    if (prod < 0) throw DomainError("amplitude undefined outside the admissible lattice");
    return radical_normalize(Rational(1), prod);
}

struct VariableSlots {
    int row, col;        // running entry
    int p_row, p_col;    // first quadrilateral pair
    int r_row, r_col;
    int s_row, s_col;    // second pair
    int t_row, t_col;
};

VariableSlots slots_for(RecursionVariable v) {
    switch (v) {
        case RecursionVariable::C:
            return {0, 0, 0, 1, 0, 2, 1, 0, 2, 0};  // c with (a,b) and (f,j)
        case RecursionVariable::D:
            return {1, 1, 1, 2, 1, 0, 0, 1, 2, 1};  // d with (e,f) and (a,g)
        case RecursionVariable::H:
        default:
            return {2, 2, 2, 0, 2, 1, 0, 2, 1, 2};  // h with (j,g) and (b,e)
    }
}

}  // namespace

RecursionCoeffs recursion_coeffs(const NineJLabels& L, RecursionVariable variable) {
    const VariableSlots s = slots_for(variable);
    const Spin var = L.j[s.row][s.col];
    if (var.twice == 0) throw DomainError("running variable must be nonzero");
    const Spin p = L.j[s.p_row][s.p_col], r = L.j[s.r_row][s.r_col];
    const Spin ss = L.j[s.s_row][s.s_col], t = L.j[s.t_row][s.t_col];

    RecursionCoeffs out;
    // 1/((q+1)(2q+1)) and 1/(q(2q+1)) with q = twice/2
    out.a_next = area_amplitude(var.twice + 2, p, r, ss, t);
    out.a_next.scale(Rational(2, long(var.twice + 2) * (var.twice + 1)));
    out.a_prev = area_amplitude(var.twice, p, r, ss, t);
    out.a_prev.scale(Rational(2, long(var.twice) * (var.twice + 1)));

    const Rational qv = qq(var);
    switch (variable) {
        case RecursionVariable::C:
            // [a(a+1)-b(b+1)+c(c+1)] [c(c+1)+f(f+1)-j(j+1)] / (c(c+1))
            out.cosine = (qq(p) - qq(r) + qv) * (qv + qq(ss) - qq(t)) / qv;
            break;
        case RecursionVariable::D:
            // [d(d+1)+a(a+1)-g(g+1)] [d(d+1)-e(e+1)+f(f+1)] / (d(d+1)).
            // The unit-shift identity forces +d(d+1) in the first bracket.
            out.cosine = (qv + qq(ss) - qq(t)) * (qv - qq(p) + qq(r)) / qv;
            break;
        case RecursionVariable::H:
            // [j(j+1)-g(g+1)+h(h+1)] [h(h+1)+b(b+1)-e(e+1)] / (h(h+1))
            out.cosine = (qq(p) - qq(r) + qv) * (qv + qq(ss) - qq(t)) / qv;
            break;
    }
    return out;
}

namespace {

// {c a b; f d e; j g h} with running variables on the diagonal: the
// five-term relation between the c-shifts and the d-shifts.
RadicalRational residual_cd(const NineJLabels& L) {
    for (const Triad& t : L.triads())
        if (((t.a.twice + t.b.twice + t.c.twice) & 1) != 0) return {};  // all symbols vanish

    auto shifted = [&](int dc, int dd) -> RadicalRational {
        const int tc = L.j[0][0].twice + 2 * dc;
        const int td = L.j[1][1].twice + 2 * dd;
        if (tc < 0 || td < 0) return {};
        NineJLabels M = L;
        M.j[0][0] = Spin(tc);
        M.j[1][1] = Spin(td);
        return nine_j(M);
    };

    const RecursionCoeffs cc = recursion_coeffs(L, RecursionVariable::C);
    const RecursionCoeffs dd = recursion_coeffs(L, RecursionVariable::D);
    const RadicalRational center = shifted(0, 0);

    auto weighted = [](const RadicalRational& coeff, const RadicalRational& value) {
        if (value.is_zero()) return RadicalRational();
        return coeff * value;
    };

    RadicalRational lhs = weighted(cc.a_next, shifted(+1, 0));
    lhs += weighted(cc.a_prev, shifted(-1, 0));
    lhs += weighted(RadicalRational(cc.cosine), center);
    RadicalRational rhs = weighted(dd.a_next, shifted(0, +1));
    rhs += weighted(dd.a_prev, shifted(0, -1));
    rhs += weighted(RadicalRational(dd.cosine), center);
    return lhs - rhs;
}

NineJLabels permute_for_pair(const NineJLabels& L, RecursionPair pair) {
    NineJLabels M;
    switch (pair) {
        case RecursionPair::CD:
            return L;
        case RecursionPair::CH:
            // even rearrangement putting h at (1,1) and c at (2,2)
            M.j = {{{L.j[2][2], L.j[0][2], L.j[1][2]},
                    {L.j[2][0], L.j[0][0], L.j[1][0]},
                    {L.j[2][1], L.j[0][1], L.j[1][1]}}};
            return M;
        case RecursionPair::DH:
        default:
            // 180-degree rotation: h at (1,1), d stays at (2,2)
            for (int r = 0; r < 3; ++r)
                for (int c = 0; c < 3; ++c) M.j[r][c] = L.j[2 - r][2 - c];
            return M;
    }
}

}  // namespace

RadicalRational nine_j_recursion_residual(const NineJLabels& labels, RecursionPair pair) {
    return residual_cd(permute_for_pair(labels, pair));
}

namespace {

struct LambdaRange {
    int lo, hi, parity;
    bool empty;
};

LambdaRange intersect_triangles(std::initializer_list<std::pair<Spin, Spin>> pairs) {
    int lo = 0, hi = 1 << 29, parity = -1;
    bool empty = false;
    for (const auto& [u, v] : pairs) {
        lo = std::max(lo, std::abs(u.twice - v.twice));
        hi = std::min(hi, u.twice + v.twice);
        const int p = (u.twice + v.twice) & 1;
        if (parity < 0)
            parity = p;
        else if (parity != p)
            empty = true;
    }
    if (lo > hi) empty = true;
    if (!empty && ((lo & 1) != parity)) lo += 1;
    return {lo, hi, parity, empty};
}

}  // namespace

RadicalRational lambda_symmetry_residual(const LambdaSymmetryArgs& A) {
    const Spin la = A.lambda;

    RadicalRational lhs;
    {
        const LambdaRange rx =
            intersect_triangles({{A.a, A.b}, {A.c, la}, {A.jj, A.f}});
        if (!rx.empty) {
            for (int tx = rx.lo; tx <= rx.hi; tx += 2) {
                const Spin x(tx);
                NineJLabels nj;
                nj.j = {{{A.a, A.b, x}, {A.d, A.e, A.f}, {A.g, A.h, A.jj}}};
                RadicalRational term = nine_j(nj);
                if (term.is_zero()) continue;
                term *= wigner_6j({A.a, A.b, x, A.c, la, A.a_prime});
                if (term.is_zero()) continue;
                term *= wigner_6j({A.jj, A.f, x, la, A.c, A.f_prime});
                if (term.is_zero()) continue;
                Rational w(tx + 1);
                if (tx & 1) w = -w;  // (-1)^(2x)
                const int outer = phase_from_twice(A.a.twice + A.f.twice + A.b.twice +
                                                   A.jj.twice);
                term.scale(w * outer);
                lhs += term;
            }
        }
    }

    RadicalRational rhs;
    {
        const LambdaRange ry =
            intersect_triangles({{A.f_prime, A.e}, {A.d, la}, {A.g, A.a_prime}});
        if (!ry.empty) {
            for (int ty = ry.lo; ty <= ry.hi; ty += 2) {
                const Spin y(ty);
                NineJLabels nj;
                nj.j = {{{A.a_prime, A.b, A.c}, {y, A.e, A.f_prime}, {A.g, A.h, A.jj}}};
                RadicalRational term = nine_j(nj);
                if (term.is_zero()) continue;
                term *= wigner_6j({A.f_prime, A.e, y, A.d, la, A.f});
                if (term.is_zero()) continue;
                term *= wigner_6j({A.g, A.a_prime, y, la, A.d, A.a});
                if (term.is_zero()) continue;
                Rational w(ty + 1);
                if (ty & 1) w = -w;
                const int outer = phase_from_twice(A.a_prime.twice + A.f_prime.twice +
                                                   A.g.twice + A.e.twice);
                term.scale(w * outer);
                rhs += term;
            }
        }
    }
    return lhs - rhs;
}

std::pair<int, int> lambda_symmetry_term_counts(const LambdaSymmetryArgs& A) {
    auto count = [](const LambdaRange& r) {
        if (r.empty) return 0;
        return (r.hi - r.lo) / 2 + 1;
    };
    const LambdaRange rx =
        intersect_triangles({{A.a, A.b}, {A.c, A.lambda}, {A.jj, A.f}});
    const LambdaRange ry =
        intersect_triangles({{A.f_prime, A.e}, {A.d, A.lambda}, {A.g, A.a_prime}});
    return {count(rx), count(ry)};
}

}  // namespace spinnet
