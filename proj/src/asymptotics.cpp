#include "spinnet/asymptotics.hpp"

#include <cmath>

#include "spinnet/error.hpp"
#include "spinnet/wigner.hpp"

namespace spinnet {

NodeCase classify_node(const std::array<bool, 3>& large_marks) {
    const int n = large_marks[0] + large_marks[1] + large_marks[2];
    switch (n) {
        case 0: return NodeCase::Case03;
        case 1: return NodeCase::Inadmissible;
        case 2: return NodeCase::Case21;
        default: return NodeCase::Case30;
    }
}

NodeCase classify_node(const Triad&, const std::array<bool, 3>& large_marks) {
    return classify_node(large_marks);
}

std::string node_case_name(NodeCase c) {
    switch (c) {
        case NodeCase::Case03: return "(0,3)";
        case NodeCase::Case21: return "(2,1)";
        case NodeCase::Case30: return "(3,0)";
        default: return "inadmissible";
    }
}

Asym63Params asym63_params(const NineJLabels& L) {
    const Spin B = L.j[0][1], C = L.j[0][2], D = L.j[1][0], e = L.j[1][1];
    const Spin F = L.j[1][2], G = L.j[2][0], H = L.j[2][1];
    Asym63Params p;
    // B+F+1 and D+H+1 in ordinary units
    const Rational bf1 = Rational(B.twice + F.twice + 2, 2);
    const Rational dh1 = Rational(D.twice + H.twice + 2, 2);
    const Rational e1 = Rational(e.twice + 1);
    p.cos_theta = (e1 * e1 - bf1 * bf1 - dh1 * dh1) / (2 * bf1 * dh1);
    const double t1 = (B.twice + C.twice + F.twice) / 3.0 + 1.0;
    const double t2 = (D.twice + G.twice + H.twice) / 3.0 + 1.0;
    p.gamma1 = std::sqrt(t1 * t2);
    p.gamma2 = std::sqrt(rational_to_double(bf1 * dh1));
    p.phase = phase_from_twice(B.twice + H.twice - e.twice);
    return p;
}

double approx_9j_63(const NineJLabels& L) {
    const Spin a = L.j[0][0], B = L.j[0][1], C = L.j[0][2];
    const Spin D = L.j[1][0], F = L.j[1][2];
    const Spin G = L.j[2][0], H = L.j[2][1], i = L.j[2][2];

    const int p1 = C.twice - B.twice, p2 = G.twice - D.twice;
    const int q1 = F.twice - C.twice, q2 = H.twice - G.twice;
    if (std::abs(p1) > a.twice || std::abs(p2) > a.twice) return 0.0;
    if (std::abs(q1) > i.twice || std::abs(q2) > i.twice) return 0.0;
    if (((a.twice + p1) & 1) || ((a.twice + p2) & 1)) return 0.0;
    if (((i.twice + q1) & 1) || ((i.twice + q2) & 1)) return 0.0;

    const Asym63Params prm = asym63_params(L);
    if (prm.cos_theta < -1 || prm.cos_theta > 1)
        throw DomainError("degenerate large-spin geometry: |cos theta| > 1");

    // row index G-D, column index C-B; the transposed reading diverges
    const RadicalRational d1 = wigner_small_d(a, p2, p1, prm.cos_theta);
    const RadicalRational d2 = wigner_small_d(i, q2, q1, prm.cos_theta);
    return prm.phase * (d1 * d2).to_double() / (prm.gamma1 * prm.gamma2);
}

Asym45Params asym45_params(const NineJLabels& L) {
    const Spin A = L.j[0][0], b = L.j[0][1], C = L.j[0][2];
    const Spin d = L.j[1][0], G = L.j[2][0], I = L.j[2][2];
    Asym45Params p;
    p.two_x_plus_1 = Rational(A.twice + C.twice + G.twice + I.twice + 4, 4);
    p.epsilon_twice = A.twice - C.twice - G.twice + I.twice;
    p.phase = phase_from_twice(b.twice + C.twice - d.twice - G.twice);
    return p;
}

double approx_9j_45(const NineJLabels& L) {
    const Spin A = L.j[0][0], b = L.j[0][1], C = L.j[0][2];
    const Spin d = L.j[1][0], e = L.j[1][1], f = L.j[1][2];
    const Spin G = L.j[2][0], h = L.j[2][1], I = L.j[2][2];

    const Asym45Params prm = asym45_params(L);
    ThreeJArgs t1{b, e, h, C.twice - A.twice, prm.epsilon_twice, G.twice - I.twice};
    const RadicalRational w1 = wigner_3j(t1);
    if (w1.is_zero()) return 0.0;
    ThreeJArgs t2{d, e, f, G.twice - A.twice, prm.epsilon_twice, C.twice - I.twice};
    const RadicalRational w2 = wigner_3j(t2);
    if (w2.is_zero()) return 0.0;
    return prm.phase * (w1 * w2).to_double() / rational_to_double(prm.two_x_plus_1);
}

namespace {

std::string triad_text(const std::string& e1, const std::string& e2,
                       const std::string& e3, const Triad& t) {
    return "(" + e1 + ", " + e2 + ", " + e3 + ") = (" + format_spin(t.a) + ", " +
           format_spin(t.b) + ", " + format_spin(t.c) + ")";
}

}  // namespace

DisentanglePlan disentangle_plan(const ThreeNJLabels& L) {
    std::vector<std::string> marks;
    for (int i = 1; i <= L.n(); ++i) {
        marks.push_back("j" + std::to_string(i));
        marks.push_back("k" + std::to_string(i));
    }
    return disentangle_plan(L, marks);
}

DisentanglePlan disentangle_plan(const ThreeNJLabels& L,
                                 const std::vector<std::string>& large_edges) {
    L.validate();
    if (L.kind != ThreeNJKind::TypeI)
        throw ArgumentError("disentangling plan covers type I labels");
    if (L.n() < 3) throw ArgumentError("disentangling plan needs n >= 3");

    const int n = L.n();
    DisentanglePlan plan;
    plan.n = n;

    auto is_large = [&](const std::string& name) {
        return std::find(large_edges.begin(), large_edges.end(), name) !=
               large_edges.end();
    };
    auto jn = [](const char* stem, int i) { return std::string(stem) + std::to_string(i); };
    bool perimeter_large = true;
    for (int i = 1; i <= n; ++i)
        perimeter_large = perimeter_large && is_large(jn("j", i)) && is_large(jn("k", i)) &&
                          !is_large(jn("l", i));

    auto audit_triad = [&](const std::string& e1, const std::string& e2,
                           const std::string& e3, const Triad& t) {
        const NodeCase c = classify_node({is_large(e1), is_large(e2), is_large(e3)});
        const std::string text = triad_text(e1, e2, e3, t);
        plan.audit.push_back({text + " -> " + node_case_name(c), c});
        if (c == NodeCase::Inadmissible)
            throw DomainError("inadmissible semiclassical node at " + text);
    };
    for (int i = 0; i + 1 < n; ++i) {
        audit_triad(jn("j", i + 1), jn("j", i + 2), jn("l", i + 1),
                    {L.j[i], L.j[i + 1], L.l[i]});
        audit_triad(jn("k", i + 1), jn("k", i + 2), jn("l", i + 1),
                    {L.k[i], L.k[i + 1], L.l[i]});
    }
    audit_triad(jn("j", 1), jn("k", n), jn("l", n), {L.j[0], L.k[n - 1], L.l[n - 1]});
    audit_triad(jn("j", n), jn("k", 1), jn("l", n), {L.j[n - 1], L.k[0], L.l[n - 1]});
    // ray-ray-contracted triads of the stepwise construction stay fully small
    for (int i = 1; i + 1 < n; ++i)
        audit_triad(jn("l", i), jn("l", i + 1), "x", {L.l[i - 1], L.l[i], L.l[i]});

    if (!perimeter_large)
        throw ArgumentError("plan factors are defined for the perimeter-large marking");

    for (int i = 0; i + 1 < n; ++i) {
        DisentangleFactor f;
        f.principal = L.l[i];
        f.proj1_twice = L.j[i + 1].twice - L.j[i].twice;
        f.proj2_twice = L.k[i + 1].twice - L.k[i].twice;
        f.large = {L.j[i], L.j[i + 1], L.k[i], L.k[i + 1]};
        plan.factors.push_back(f);
    }
    return plan;
}

NineJLabels asym63_arrangement_of_type1(const ThreeNJLabels& L) {
    L.validate();
    if (L.kind != ThreeNJKind::TypeI || L.n() != 3)
        throw ArgumentError("arrangement defined for type I with n = 3");
    NineJLabels out;
    out.j = {{{L.l[0], L.j[0], L.j[1]},
              {L.k[0], L.l[2], L.j[2]},
              {L.k[1], L.k[2], L.l[1]}}};
    return out;
}

double evaluate_plan(const ThreeNJLabels& L) {
    const DisentanglePlan plan = disentangle_plan(L);
    const int n = plan.n;
    if (n == 3) return approx_9j_63(asym63_arrangement_of_type1(L));

    // Experimental extension of the n=3 pattern: shared angle through the
    // closing ray, per-family Gamma normalization.
    const Spin ln = L.l[n - 1];
    const Rational p = Rational(L.j[0].twice + L.j[n - 1].twice + 2, 2);
    const Rational q = Rational(L.k[0].twice + L.k[n - 1].twice + 2, 2);
    const Rational e1 = Rational(ln.twice + 1);
    const Rational cos_theta = (e1 * e1 - p * p - q * q) / (2 * p * q);
    if (cos_theta < -1 || cos_theta > 1)
        throw DomainError("degenerate large-spin geometry: |cos theta| > 1");

    long sj = 0, sk = 0;
    for (int i = 0; i < n; ++i) {
        sj += L.j[i].twice;
        sk += L.k[i].twice;
    }
    const double g1 = std::sqrt((double(sj) / n + 1.0) * (double(sk) / n + 1.0));
    const double g2 = std::sqrt(rational_to_double(p * q));
    const int phase = phase_from_twice(L.j[0].twice + L.k[n - 1].twice - ln.twice);

    double value = phase / (g1 * g2);
    for (const auto& f : plan.factors) {
        if (std::abs(f.proj1_twice) > f.principal.twice ||
            std::abs(f.proj2_twice) > f.principal.twice)
            return 0.0;
        value *= wigner_small_d(f.principal, f.proj2_twice, f.proj1_twice, cos_theta)
                     .to_double();
    }
    return value;
}

}  // namespace spinnet
