#include "spinnet/json_io.hpp"

namespace spinnet {

using nlohmann::json;

json to_json(const RadicalRational& v) {
    json terms = json::array();
    for (const auto& [r, q] : v.terms()) {
        json term;
        term["q"] = rational_to_string(q);
        if (r <= BigInt(9007199254740992ll))
            term["r"] = r.convert_to<long long>();
        else
            term["r"] = r.str();
        terms.push_back(term);
    }
    json out;
    out["terms"] = terms;
    out["float"] = v.to_double();
    return out;
}

json spin_json(Spin s) { return json{{"twice", s.twice}}; }

json to_json(const YutsisGraph& g) {
    json out;
    out["nodes"] = g.num_nodes;
    json edges = json::array();
    for (const auto& e : g.edges)
        edges.push_back(json{{"u", e.u}, {"v", e.v}, {"label", e.label}});
    out["edges"] = edges;
    if (g.faces) out["faces"] = *g.faces;
    return out;
}

json value_json_9j(const NineJLabels& labels, const RadicalRational& value) {
    json out;
    out["type"] = "9j";
    json rows = json::array();
    for (int r = 0; r < 3; ++r) {
        json row = json::array();
        for (int c = 0; c < 3; ++c) row.push_back(labels.j[r][c].twice);
        rows.push_back(row);
    }
    out["labels"] = rows;
    out["value"] = to_json(value);
    return out;
}

json value_json_3nj(const ThreeNJLabels& labels, const RadicalRational& value) {
    json out;
    out["type"] = "3nj";
    out["kind"] = labels.kind == ThreeNJKind::TypeI ? "I" : "II";
    out["n"] = labels.n();
    json seq = json::array();
    for (const auto& v : {labels.j, labels.k, labels.l}) {
        json row = json::array();
        for (Spin s : v) row.push_back(s.twice);
        seq.push_back(row);
    }
    out["labels"] = seq;
    out["value"] = to_json(value);
    return out;
}

json to_json(const DisentanglePlan& plan) {
    json out;
    out["n"] = plan.n;
    json factors = json::array();
    for (const auto& f : plan.factors) {
        json jf;
        jf["principal"] = f.principal.twice;
        jf["proj1"] = f.proj1_twice;
        jf["proj2"] = f.proj2_twice;
        json large = json::array();
        for (Spin s : f.large) large.push_back(s.twice);
        jf["large"] = large;
        factors.push_back(jf);
    }
    out["factors"] = factors;
    json audit = json::array();
    for (const auto& a : plan.audit)
        audit.push_back(json{{"triad", a.description}, {"case", node_case_name(a.classification)}});
    out["audit"] = audit;
    return out;
}

}  // namespace spinnet
