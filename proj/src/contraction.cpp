#include "spinnet/contraction.hpp"

#include <mutex>
#include <unordered_map>

#include "spinnet/error.hpp"
#include "spinnet/recoupling.hpp"

namespace spinnet {

RadicalRational contraction_3j(int tj1, int tj2, int tj3, int tm1, int tm2, int tm3) {
    struct Hash {
        std::size_t operator()(const std::array<int, 6>& k) const {
            std::size_t h = 14695981039346656037ull;
            for (int v : k) {
                h ^= static_cast<std::size_t>(v + (1 << 16));
                h *= 1099511628211ull;
            }
            return h;
        }
    };
    static std::unordered_map<std::array<int, 6>, RadicalRational, Hash> memo;
    static std::mutex mutex;
    const std::array<int, 6> key{tj1, tj2, tj3, tm1, tm2, tm3};
    {
        std::lock_guard lock(mutex);
        auto it = memo.find(key);
        if (it != memo.end()) return it->second;
    }
    ThreeJArgs args;
    args.j1 = Spin(tj1);
    args.j2 = Spin(tj2);
    args.j3 = Spin(tj3);
    args.m1 = tm1;
    args.m2 = tm2;
    args.m3 = tm3;
    RadicalRational value = wigner_3j(args);
    std::lock_guard lock(mutex);
    memo.emplace(key, value);
    return value;
}

RadicalRational sixj_by_contraction(const SixJArgs& args) {
    const int t1 = args.j[0].twice, t2 = args.j[1].twice, t3 = args.j[2].twice;
    const int t4 = args.j[3].twice, t5 = args.j[4].twice, t6 = args.j[5].twice;

    RadicalRational sum;
    for (int m1 = -t1; m1 <= t1; m1 += 2) {
        for (int m2 = -t2; m2 <= t2; m2 += 2) {
            const int m3 = -m1 - m2;
            if (std::abs(m3) > t3) continue;
            const RadicalRational f1 = contraction_3j(t1, t2, t3, -m1, -m2, -m3);
            if (f1.is_zero()) continue;
            for (int m5 = -t5; m5 <= t5; m5 += 2) {
                const int m6 = m5 - m1;  // from m1 - m5 + m6 = 0
                if (std::abs(m6) > t6) continue;
                const int m4 = m6 - m2;  // from m4 + m2 - m6 = 0
                if (std::abs(m4) > t4) continue;
                RadicalRational term = f1;
                term *= contraction_3j(t1, t5, t6, m1, -m5, m6);
                if (term.is_zero()) continue;
                term *= contraction_3j(t4, t2, t6, m4, m2, -m6);
                if (term.is_zero()) continue;
                term *= contraction_3j(t4, t5, t3, -m4, m5, m3);
                if (term.is_zero()) continue;
                const long exp_twice = (t1 - m1) + (t2 - m2) + (t3 - m3) + (t4 - m4) +
                                       (t5 - m5) + (t6 - m6);
                term.scale(Rational(phase_from_twice(exp_twice)));
                sum += term;
            }
        }
    }
    return sum;
}

RadicalRational ninej_by_contraction(const NineJLabels& L) {
    const int ta = L.j[0][0].twice, tb = L.j[0][1].twice, tc = L.j[0][2].twice;
    const int td = L.j[1][0].twice, te = L.j[1][1].twice, tf = L.j[1][2].twice;
    const int tg = L.j[2][0].twice, th = L.j[2][1].twice, ti = L.j[2][2].twice;

    RadicalRational sum;
    for (int ma = -ta; ma <= ta; ma += 2) {
        for (int mb = -tb; mb <= tb; mb += 2) {
            const int mc = -ma - mb;
            if (std::abs(mc) > tc) continue;
            const RadicalRational row1 = contraction_3j(ta, tb, tc, ma, mb, mc);
            if (row1.is_zero()) continue;
            for (int md = -td; md <= td; md += 2) {
                const int mg = -ma - md;
                if (std::abs(mg) > tg) continue;
                for (int me = -te; me <= te; me += 2) {
                    const int mf = -md - me;
                    if (std::abs(mf) > tf) continue;
                    const int mh = -mb - me;
                    if (std::abs(mh) > th) continue;
                    const int mi = -mc - mf;
                    if (std::abs(mi) > ti) continue;
                    if (mg + mh + mi != 0) continue;
                    RadicalRational term = row1;
                    term *= contraction_3j(td, te, tf, md, me, mf);
                    if (term.is_zero()) continue;
                    term *= contraction_3j(tg, th, ti, mg, mh, mi);
                    if (term.is_zero()) continue;
                    term *= contraction_3j(ta, td, tg, ma, md, mg);
                    if (term.is_zero()) continue;
                    term *= contraction_3j(tb, te, th, mb, me, mh);
                    if (term.is_zero()) continue;
                    term *= contraction_3j(tc, tf, ti, mc, mf, mi);
                    if (term.is_zero()) continue;
                    sum += term;
                }
            }
        }
    }
    return sum;
}

namespace {

struct OrientedEdge {
    int tail, head;
    int tj;
};

struct Diagram {
    std::vector<OrientedEdge> edges;
    // per node: three incident edge ids in 3j column order
    std::vector<std::array<int, 3>> nodes;
};

}  // namespace

namespace detail {

// Orientation/ordering gauge for the cartwheel contraction. Patterns index
// into pattern_on below. The mask fields override patterns bit-by-bit:
// edge_flip bit e reverses edge id e, node_swap bit v transposes the first
// two 3j columns of node v.
struct CartStyle {
    int ray_dir = 0, ln_dir = 0;
    int j_pat = 0, k_pat = 0;
    int u_ord = 0, v_ord = 0, a_ord = 0, ap_ord = 0;
    unsigned edge_flip = 0;
    unsigned node_swap = 0;
};

}  // namespace detail

namespace {

// index predicates shared by direction and ordering choices; `last` is the
// final index of the family (n for perimeter edges, n-1 for rays/spokes)
bool pattern_on(int pattern, int i, int last) {
    switch (pattern) {
        case 0: return false;           // none
        case 1: return true;            // all
        case 2: return (i % 2) == 0;    // even index
        case 3: return (i % 2) == 1;    // odd index
        case 4: return i == last;       // only last
        case 5: return i != last;       // all but last
        case 6: return i == 1;          // only first
        default: return i != 1;         // all but first
    }
}

Diagram cartwheel_diagram(const ThreeNJLabels& L, const detail::CartStyle& style) {
    const int n = L.n();
    Diagram d;
    // edge ids: j_i -> i-1, k_i -> n+i-1, l_i -> 2n+i-1
    auto J = [&](int i) { return i - 1; };
    auto K = [&](int i) { return n + i - 1; };
    auto Ray = [&](int i) { return 2 * n + i - 1; };
    // node ids as in the graph generator: A=0, U_i=i, A'=n, V_i=n+i
    const int A = 0, Ap = n;
    auto U = [&](int i) { return i; };
    auto V = [&](int i) { return n + i; };

    d.edges.resize(3 * n);
    for (int i = 1; i <= n; ++i) {
        int from = (i == 1) ? A : U(i - 1);
        int to = (i == n) ? Ap : U(i);
        if (pattern_on(style.j_pat, i, n)) std::swap(from, to);
        d.edges[J(i)] = {from, to, L.j[i - 1].twice};
    }
    for (int i = 1; i <= n; ++i) {
        int from = (i == 1) ? Ap : V(i - 1);
        int to = (i == n) ? A : V(i);
        if (pattern_on(style.k_pat, i, n)) std::swap(from, to);
        d.edges[K(i)] = {from, to, L.k[i - 1].twice};
    }
    for (int i = 1; i < n; ++i) {
        int from = U(i), to = V(i);
        if (pattern_on(style.ray_dir, i, n - 1)) std::swap(from, to);
        d.edges[Ray(i)] = {from, to, L.l[i - 1].twice};
    }
    {
        int from = A, to = Ap;
        if (style.ln_dir) std::swap(from, to);
        d.edges[Ray(n)] = {from, to, L.l[n - 1].twice};
    }

    for (int e = 0; e < 3 * n; ++e)
        if (style.edge_flip & (1u << e)) std::swap(d.edges[e].tail, d.edges[e].head);

    d.nodes.resize(2 * n);
    d.nodes[A] = style.a_ord ? std::array<int, 3>{K(n), J(1), Ray(n)}
                             : std::array<int, 3>{J(1), K(n), Ray(n)};
    d.nodes[Ap] = style.ap_ord ? std::array<int, 3>{K(1), J(n), Ray(n)}
                               : std::array<int, 3>{J(n), K(1), Ray(n)};
    for (int i = 1; i < n; ++i) {
        d.nodes[U(i)] = pattern_on(style.u_ord, i, n - 1)
                            ? std::array<int, 3>{J(i + 1), J(i), Ray(i)}
                            : std::array<int, 3>{J(i), J(i + 1), Ray(i)};
        d.nodes[V(i)] = pattern_on(style.v_ord, i, n - 1)
                            ? std::array<int, 3>{K(i + 1), K(i), Ray(i)}
                            : std::array<int, 3>{K(i), K(i + 1), Ray(i)};
    }
    for (int v = 0; v < 2 * n; ++v)
        if (style.node_swap & (1u << v)) std::swap(d.nodes[v][0], d.nodes[v][1]);
    return d;
}

// Sum over all magnetic numbers of the product of node 3j symbols with
// (-1)^(j-m) metrics on every oriented edge.
RadicalRational contract_diagram(const Diagram& d) {
    const int E = static_cast<int>(d.edges.size());
    std::vector<int> m(E, 0);
    std::vector<bool> fixed(E, false);

    // node residual bookkeeping: how many of the node's edges remain free
    auto node_free = [&](int v) {
        int free = 0;
        for (int e : d.nodes[v]) free += !fixed[e];
        return free;
    };
    // signed projection sum over the already-fixed edges of a node
    auto signed_sum = [&](int v) {
        long s = 0;
        for (int e : d.nodes[v]) {
            if (!fixed[e]) continue;
            const int sgn = (d.edges[e].tail == v) ? 1 : -1;
            s += sgn * m[e];
        }
        return s;
    };

    RadicalRational total;
    auto rec = [&](auto&& self) -> void {
        // force any edge whose node has the other two fixed
        for (int v = 0; v < static_cast<int>(d.nodes.size()); ++v) {
            if (node_free(v) != 1) continue;
            int loose = -1;
            for (int e : d.nodes[v])
                if (!fixed[e]) loose = e;
            const int sgn = (d.edges[loose].tail == v) ? 1 : -1;
            const long forced = -sgn * signed_sum(v);
            if (std::abs(forced) > d.edges[loose].tj) return;
            if (((forced + d.edges[loose].tj) & 1) != 0) return;
            m[loose] = static_cast<int>(forced);
            fixed[loose] = true;
            self(self);
            fixed[loose] = false;
            return;
        }
        int branch = -1;
        for (int e = 0; e < E; ++e)
            if (!fixed[e]) branch = e;
        if (branch < 0) {
            // all fixed: verify node constraints and accumulate
            RadicalRational term(Rational(1));
            for (int v = 0; v < static_cast<int>(d.nodes.size()); ++v)
                if (signed_sum(v) != 0) return;
            long metric_twice = 0;
            for (int e = 0; e < E; ++e) metric_twice += d.edges[e].tj - m[e];
            for (int v = 0; v < static_cast<int>(d.nodes.size()); ++v) {
                const auto& ne = d.nodes[v];
                int tj[3], tm[3];
                for (int c = 0; c < 3; ++c) {
                    tj[c] = d.edges[ne[c]].tj;
                    const int sgn = (d.edges[ne[c]].tail == v) ? 1 : -1;
                    tm[c] = sgn * m[ne[c]];
                }
                term *= contraction_3j(tj[0], tj[1], tj[2], tm[0], tm[1], tm[2]);
                if (term.is_zero()) return;
            }
            term.scale(Rational(phase_from_twice(metric_twice)));
            total += term;
            return;
        }
        for (int mv = -d.edges[branch].tj; mv <= d.edges[branch].tj; mv += 2) {
            m[branch] = mv;
            fixed[branch] = true;
            self(self);
            fixed[branch] = false;
        }
    };
    rec(rec);
    return total;
}

}  // namespace

namespace detail {

RadicalRational threenj1_contraction_styled(const ThreeNJLabels& labels,
                                            const CartStyle& style) {
    labels.validate();
    if (labels.kind != ThreeNJKind::TypeI)
        throw ArgumentError("contraction reference implemented for type I labels");
    return contract_diagram(cartwheel_diagram(labels, style));
}

}  // namespace detail

RadicalRational threenj1_by_contraction(const ThreeNJLabels& labels) {
    labels.validate();
    // Reading orders and arrow directions form a fixed per-size gauge. The
    // n=2 gauge is the four-3j form of the 6j; the n=3 and n=4 corrections
    // (edge flips and first-column swaps) were pinned once on small-spin
    // data and are frozen here.
    detail::CartStyle style{1, 0, 4, 0, 0, 0, 0, 1, 0, 0};
    switch (labels.n()) {
        case 2: break;
        case 3:
            style.edge_flip = 0x5;   // j1, j3
            style.node_swap = 0x9;   // the two crossing nodes
            break;
        case 4:
            style.edge_flip = 0xc;   // j3, j4
            style.node_swap = 0x77;  // all but U3, V3
            break;
        default:
            throw CapabilityError("contraction reference covers n <= 4");
    }
    return detail::threenj1_contraction_styled(labels, style);
}

}  // namespace spinnet
