#include "spinnet/yutsis.hpp"

#include <algorithm>
#include <array>
#include <map>
#include <numeric>
#include <queue>
#include <set>
#include <sstream>

#include "spinnet/error.hpp"

namespace spinnet {

int YutsisGraph::degree(int node) const {
    int d = 0;
    for (const auto& e : edges) d += (e.u == node) + (e.v == node);
    return d;
}

bool YutsisGraph::is_cubic() const {
    for (int v = 0; v < num_nodes; ++v)
        if (degree(v) != 3) return false;
    return true;
}

std::vector<std::vector<int>> YutsisGraph::incidence() const {
    std::vector<std::vector<int>> inc(num_nodes);
    for (int e = 0; e < num_edges(); ++e) {
        inc[edges[e].u].push_back(e);
        inc[edges[e].v].push_back(e);
    }
    return inc;
}

int YutsisGraph::edge_by_label(const std::string& label) const {
    int found = -1;
    for (int e = 0; e < num_edges(); ++e) {
        if (edges[e].label != label) continue;
        if (found >= 0) throw ArgumentError("edge label '" + label + "' is ambiguous");
        found = e;
    }
    if (found < 0) throw ArgumentError("no edge labeled '" + label + "'");
    return found;
}

std::vector<std::vector<std::string>> YutsisGraph::node_triads() const {
    std::vector<std::vector<std::string>> out(num_nodes);
    for (const auto& e : edges) {
        out[e.u].push_back(e.label);
        out[e.v].push_back(e.label);
    }
    return out;
}

bool YutsisGraph::faces_consistent() const {
    if (!faces) return false;
    std::vector<int> count(edges.size(), 0);
    for (const auto& f : *faces)
        for (int e : f) {
            if (e < 0 || e >= num_edges()) return false;
            ++count[e];
        }
    return std::all_of(count.begin(), count.end(), [](int c) { return c == 2; });
}

namespace {

std::string name(const char* stem, int i) { return std::string(stem) + std::to_string(i); }

}  // namespace

YutsisGraph cartwheel_type1(int n) {
    if (n < 3) throw ArgumentError("cartwheel requires n >= 3");
    YutsisGraph g;
    g.num_nodes = 2 * n;
    // node ids: A=0, U_1..U_{n-1}=1..n-1, A'=n, V_1..V_{n-1}=n+1..2n-1
    const int A = 0, Ap = n;
    auto U = [&](int i) { return i; };
    auto V = [&](int i) { return n + i; };

    std::vector<int> jid(n + 1), kid(n + 1), lid(n + 1);
    for (int i = 1; i <= n; ++i) {
        const int from = (i == 1) ? A : U(i - 1);
        const int to = (i == n) ? Ap : U(i);
        jid[i] = g.num_edges();
        g.edges.push_back({from, to, name("j", i)});
    }
    for (int i = 1; i <= n; ++i) {
        const int from = (i == 1) ? Ap : V(i - 1);
        const int to = (i == n) ? A : V(i);
        kid[i] = g.num_edges();
        g.edges.push_back({from, to, name("k", i)});
    }
    for (int i = 1; i < n; ++i) {
        lid[i] = g.num_edges();
        g.edges.push_back({U(i), V(i), name("l", i)});
    }
    lid[n] = g.num_edges();
    g.edges.push_back({A, Ap, name("l", n)});

    // the n quadrilaterals through consecutive rays, then the perimeter
    std::vector<std::vector<int>> faces;
    for (int i = 1; i <= n; ++i) {
        const int prev = (i == 1) ? n : i - 1;
        faces.push_back({jid[i], lid[i], kid[i], lid[prev]});
    }
    std::vector<int> rim;
    for (int i = 1; i <= n; ++i) rim.push_back(jid[i]);
    for (int i = 1; i <= n; ++i) rim.push_back(kid[i]);
    faces.push_back(std::move(rim));
    g.faces = std::move(faces);
    return g;
}

YutsisGraph prism_type2(int n) {
    if (n < 3) throw ArgumentError("prism requires n >= 3");
    YutsisGraph g;
    g.num_nodes = 2 * n;
    auto T = [&](int i) { return i % n; };
    auto B = [&](int i) { return n + i % n; };

    std::vector<int> jid(n + 1), kid(n + 1), lid(n + 1);
    // node T(m-1) carries triad (j_m, j_{m+1}, l_m); same below with k, l
    for (int m = 1; m <= n; ++m) {
        jid[m] = g.num_edges();
        g.edges.push_back({T(m + n - 2), T(m - 1), name("j", m)});
    }
    for (int m = 1; m <= n; ++m) {
        kid[m] = g.num_edges();
        g.edges.push_back({B(m + n - 2), B(m - 1), name("k", m)});
    }
    for (int m = 1; m <= n; ++m) {
        lid[m] = g.num_edges();
        g.edges.push_back({T(m - 1), B(m - 1), name("l", m)});
    }

    std::vector<std::vector<int>> faces;
    std::vector<int> top, bottom;
    for (int m = 1; m <= n; ++m) top.push_back(jid[m]);
    for (int m = 1; m <= n; ++m) bottom.push_back(kid[m]);
    faces.push_back(top);
    faces.push_back(bottom);
    for (int m = 1; m <= n; ++m) {
        const int prev = (m == 1) ? n : m - 1;
        faces.push_back({jid[m], lid[m], kid[m], lid[prev]});
    }
    g.faces = std::move(faces);
    return g;
}

YutsisGraph tetrahedron_6j() {
    YutsisGraph g;
    g.num_nodes = 4;
    // triads: (j1,j2,l1), (k1,k2,l1), (j1,k2,l2), (j2,k1,l2)
    g.edges = {{0, 2, "j1"}, {0, 3, "j2"}, {0, 1, "l1"},
               {1, 3, "k1"}, {1, 2, "k2"}, {2, 3, "l2"}};
    g.faces = std::vector<std::vector<int>>{{0, 5, 1}, {2, 4, 0}, {2, 3, 1}, {4, 5, 3}};
    return g;
}

YutsisGraph petersen() {
    YutsisGraph g;
    g.num_nodes = 10;
    int e = 1;
    auto add = [&](int u, int v) { g.edges.push_back({u, v, name("e", e++)}); };
    for (int i = 0; i < 5; ++i) add(i, (i + 1) % 5);          // outer cycle
    for (int i = 0; i < 5; ++i) add(5 + i, 5 + (i + 2) % 5);  // pentagram
    for (int i = 0; i < 5; ++i) add(i, 5 + i);                // spokes
    return g;
}

namespace {

// nodes visited along a closed edge walk; walk[i] is entered before face[i]
std::vector<int> face_node_walk(const YutsisGraph& g, const std::vector<int>& face) {
    const int m = static_cast<int>(face.size());
    if (m < 2) throw ArgumentError("degenerate face");
    const auto& e0 = g.edges[face[0]];
    const auto& e1 = g.edges[face[1]];
    int start = (e0.v == e1.u || e0.v == e1.v) ? e0.u : e0.v;
    std::vector<int> walk(m);
    int at = start;
    for (int i = 0; i < m; ++i) {
        walk[i] = at;
        const auto& e = g.edges[face[i]];
        at = (e.u == at) ? e.v : e.u;
    }
    if (at != start) throw ArgumentError("face edge list is not a closed walk");
    return walk;
}

struct EdgeSplit {
    int original;    // edge id that was split
    int near_node;   // endpoint adjacent to the renamed half
    int first_half;  // edge id touching near_node
    int second_half; // edge id keeping the far endpoint
    int new_node;
};

}  // namespace

// Helper shared by both insertion operators: split an edge by a new midpoint.
// The half adjacent to `near` keeps or takes labels per the caller.
static EdgeSplit split_edge(YutsisGraph& g, int edge_id, int near,
                            const std::string& near_label, const std::string& far_label) {
    if (edge_id < 0 || edge_id >= g.num_edges()) throw ArgumentError("bad edge id");
    YutsisEdge e = g.edges[edge_id];
    if (e.u != near && e.v != near) throw ArgumentError("edge not incident to node");
    const int far = (e.u == near) ? e.v : e.u;
    const int w = g.num_nodes++;
    g.edges[edge_id] = {near, w, near_label};
    const int far_id = g.num_edges();
    g.edges.push_back({w, far, far_label});
    return {edge_id, near, edge_id, far_id, w};
}

namespace {

// rewrite one face after splits: wherever a split's original edge appears,
// insert its two halves in walk order
std::vector<int> rewrite_face(const std::vector<int>& face_before,
                              const std::vector<int>& walk_before,
                              const std::vector<EdgeSplit>& splits) {
    std::vector<int> out;
    for (std::size_t i = 0; i < face_before.size(); ++i) {
        const int e = face_before[i];
        const EdgeSplit* s = nullptr;
        for (const auto& cand : splits)
            if (cand.original == e) s = &cand;
        if (!s) {
            out.push_back(e);
            continue;
        }
        // traversal enters at walk_before[i]
        if (walk_before[i] == s->near_node) {
            out.push_back(s->first_half);
            out.push_back(s->second_half);
        } else {
            out.push_back(s->second_half);
            out.push_back(s->first_half);
        }
    }
    return out;
}

// split a face along a bridge between two nodes that lie on it
std::pair<std::vector<int>, std::vector<int>> split_face(const YutsisGraph& g,
                                                         const std::vector<int>& face,
                                                         int w1, int w2, int bridge_id) {
    const auto walk = face_node_walk(g, face);
    const int m = static_cast<int>(face.size());
    int p1 = -1, p2 = -1;
    for (int i = 0; i < m; ++i) {
        if (walk[i] == w1) p1 = i;
        if (walk[i] == w2) p2 = i;
    }
    if (p1 < 0 || p2 < 0) throw ArgumentError("bridge endpoints not on the face");
    std::vector<int> f1, f2;
    for (int i = p1; i != p2; i = (i + 1) % m) f1.push_back(face[i]);
    f1.push_back(bridge_id);
    for (int i = p2; i != p1; i = (i + 1) % m) f2.push_back(face[i]);
    f2.push_back(bridge_id);
    return {f1, f2};
}

}  // namespace

YutsisGraph insert_square(const YutsisGraph& g, int e1, int e2,
                          const SquareInsertLabels& labels) {
    if (e1 == e2) throw ArgumentError("insertion needs two distinct edges");
    if (e1 < 0 || e2 < 0 || e1 >= g.num_edges() || e2 >= g.num_edges())
        throw ArgumentError("bad edge id");

    // capture the face walks before connectivity changes
    std::vector<std::vector<int>> walks;
    int common_face = -1;
    if (g.faces) {
        for (std::size_t f = 0; f < g.faces->size(); ++f) {
            walks.push_back(face_node_walk(g, (*g.faces)[f]));
            const auto& face = (*g.faces)[f];
            const bool has1 = std::find(face.begin(), face.end(), e1) != face.end();
            const bool has2 = std::find(face.begin(), face.end(), e2) != face.end();
            if (has1 && has2 && common_face < 0) common_face = static_cast<int>(f);
        }
    }

    YutsisGraph out = g;
    out.faces.reset();
    const auto s1 = split_edge(out, e1, g.edges[e1].u, g.edges[e1].label, labels.split1);
    const auto s2 = split_edge(out, e2, g.edges[e2].u, g.edges[e2].label, labels.split2);
    const int bridge = out.num_edges();
    out.edges.push_back({s1.new_node, s2.new_node, labels.bridge});

    if (g.faces && common_face >= 0) {
        std::vector<std::vector<int>> faces;
        for (std::size_t f = 0; f < g.faces->size(); ++f) {
            auto rewritten = rewrite_face((*g.faces)[f], walks[f], {s1, s2});
            if (static_cast<int>(f) == common_face) {
                auto [fa, fb] = split_face(out, rewritten, s1.new_node, s2.new_node, bridge);
                faces.push_back(std::move(fa));
                faces.push_back(std::move(fb));
            } else {
                faces.push_back(std::move(rewritten));
            }
        }
        out.faces = std::move(faces);
    }
    return out;
}

YutsisGraph insert_bowtie(const YutsisGraph& g, int ray, int flank1, int flank2,
                          const BowtieInsertLabels& labels) {
    if (ray < 0 || flank1 < 0 || flank2 < 0 || ray >= g.num_edges() ||
        flank1 >= g.num_edges() || flank2 >= g.num_edges())
        throw ArgumentError("bad edge id");
    if (ray == flank1 || ray == flank2 || flank1 == flank2)
        throw ArgumentError("ray and flanking edges must be distinct");

    const auto& re = g.edges[ray];
    auto touches = [&](int edge_id, int node) {
        return g.edges[edge_id].u == node || g.edges[edge_id].v == node;
    };
    // flank1 hangs off one ray endpoint, flank2 off the other
    int seam1, seam2;
    if (touches(flank1, re.u) && touches(flank2, re.v)) {
        seam1 = re.u;
        seam2 = re.v;
    } else if (touches(flank1, re.v) && touches(flank2, re.u)) {
        seam1 = re.v;
        seam2 = re.u;
    } else {
        throw ArgumentError("flanking edges must sit on opposite endpoints of the ray");
    }

    std::vector<std::vector<int>> walks;
    int common_face = -1;
    if (g.faces) {
        for (std::size_t f = 0; f < g.faces->size(); ++f) {
            walks.push_back(face_node_walk(g, (*g.faces)[f]));
            const auto& face = (*g.faces)[f];
            const bool has1 = std::find(face.begin(), face.end(), flank1) != face.end();
            const bool has2 = std::find(face.begin(), face.end(), flank2) != face.end();
            const bool hasr = std::find(face.begin(), face.end(), ray) != face.end();
            if (has1 && has2 && hasr && common_face < 0) common_face = static_cast<int>(f);
        }
    }

    YutsisGraph out = g;
    out.faces.reset();
    // the seam-side halves take the crossed names: the j-side flank feeds the
    // new k edge and vice versa
    const std::string old1 = g.edges[flank1].label;
    const std::string old2 = g.edges[flank2].label;
    auto s1 = split_edge(out, flank1, seam1, labels.k_new, old1);
    auto s2 = split_edge(out, flank2, seam2, labels.j_new, old2);
    const int bridge = out.num_edges();
    out.edges.push_back({s1.new_node, s2.new_node, labels.l_new});

    if (g.faces && common_face >= 0) {
        std::vector<std::vector<int>> faces;
        for (std::size_t f = 0; f < g.faces->size(); ++f) {
            auto rewritten = rewrite_face((*g.faces)[f], walks[f], {s1, s2});
            if (static_cast<int>(f) == common_face) {
                auto [fa, fb] = split_face(out, rewritten, s1.new_node, s2.new_node, bridge);
                faces.push_back(std::move(fa));
                faces.push_back(std::move(fb));
            } else {
                faces.push_back(std::move(rewritten));
            }
        }
        out.faces = std::move(faces);
    }
    return out;
}

int girth(const YutsisGraph& g) {
    const auto inc = g.incidence();
    int best = 1 << 29;
    // parallel edges first: they are 2-cycles
    std::map<std::pair<int, int>, int> pair_count;
    for (const auto& e : g.edges) {
        auto key = std::minmax(e.u, e.v);
        if (++pair_count[{key.first, key.second}] > 1) best = std::min(best, 2);
    }
    for (int root = 0; root < g.num_nodes; ++root) {
        std::vector<int> dist(g.num_nodes, -1), via(g.num_nodes, -1);
        std::queue<int> q;
        dist[root] = 0;
        q.push(root);
        while (!q.empty()) {
            const int u = q.front();
            q.pop();
            for (int e : inc[u]) {
                if (e == via[u]) continue;
                const auto& ed = g.edges[e];
                const int v = (ed.u == u) ? ed.v : ed.u;
                if (v == u) {
                    best = std::min(best, 1);  // self loop
                    continue;
                }
                if (dist[v] < 0) {
                    dist[v] = dist[u] + 1;
                    via[v] = e;
                    q.push(v);
                } else if (via[v] != e) {
                    best = std::min(best, dist[u] + dist[v] + 1);
                }
            }
        }
    }
    return best;
}

std::optional<std::vector<int>> hamiltonian_cycle(const YutsisGraph& g) {
    if (g.num_nodes == 0) return std::nullopt;
    const auto inc = g.incidence();
    std::vector<bool> visited(g.num_nodes, false);
    std::vector<int> path_edges;
    visited[0] = true;

    std::optional<std::vector<int>> result;
    auto dfs = [&](auto&& self, int at, int count) -> bool {
        if (count == g.num_nodes) {
            for (int e : inc[at]) {
                const auto& ed = g.edges[e];
                const int v = (ed.u == at) ? ed.v : ed.u;
                if (v == 0) {
                    path_edges.push_back(e);
                    result = path_edges;
                    path_edges.pop_back();
                    return true;
                }
            }
            return false;
        }
        for (int e : inc[at]) {
            const auto& ed = g.edges[e];
            const int v = (ed.u == at) ? ed.v : ed.u;
            if (v == at || visited[v]) continue;
            visited[v] = true;
            path_edges.push_back(e);
            if (self(self, v, count + 1)) return true;
            path_edges.pop_back();
            visited[v] = false;
        }
        return false;
    };
    if (dfs(dfs, 0, 1)) return result;
    return std::nullopt;
}

bool has_cycle_of_length(const YutsisGraph& g, int length) {
    if (length < 1) return false;
    const auto inc = g.incidence();
    // DFS from every node for a simple cycle of exactly `length` edges
    std::vector<bool> visited(g.num_nodes, false);
    auto dfs = [&](auto&& self, int root, int at, int depth) -> bool {
        if (depth == length) return false;
        for (int e : inc[at]) {
            const auto& ed = g.edges[e];
            const int v = (ed.u == at) ? ed.v : ed.u;
            if (v == root && depth + 1 == length && length > 2) return true;
            if (v == root && length == 2 && depth == 1) {
                // need a second, distinct edge back to the root
                return true;
            }
            if (visited[v] || v == root) continue;
            visited[v] = true;
            if (self(self, root, v, depth + 1)) {
                visited[v] = false;
                return true;
            }
            visited[v] = false;
        }
        return false;
    };
    for (int root = 0; root < g.num_nodes; ++root) {
        visited[root] = true;
        if (dfs(dfs, root, root, 0)) return true;
        visited[root] = false;
    }
    return false;
}

EmbeddingData euler_characteristic(const YutsisGraph& g) {
    if (!g.faces) throw ArgumentError("graph carries no face list");
    EmbeddingData d;
    d.V = g.num_nodes;
    d.E = g.num_edges();
    d.F = static_cast<int>(g.faces->size());
    d.chi = d.V - d.E + d.F;
    return d;
}

namespace {

int component_count(const YutsisGraph& g, const std::array<int, 3>& removed,
                    std::vector<int>& comp) {
    comp.assign(g.num_nodes, -1);
    const auto inc = g.incidence();
    int ncomp = 0;
    for (int s = 0; s < g.num_nodes; ++s) {
        if (comp[s] >= 0) continue;
        std::queue<int> q;
        q.push(s);
        comp[s] = ncomp;
        while (!q.empty()) {
            const int u = q.front();
            q.pop();
            for (int e : inc[u]) {
                if (e == removed[0] || e == removed[1] || e == removed[2]) continue;
                const auto& ed = g.edges[e];
                const int v = (ed.u == u) ? ed.v : ed.u;
                if (comp[v] < 0) {
                    comp[v] = ncomp;
                    q.push(v);
                }
            }
        }
        ++ncomp;
    }
    return ncomp;
}

}  // namespace

std::optional<std::array<int, 3>> nontrivial_cut3(const YutsisGraph& g) {
    const int E = g.num_edges();
    std::vector<int> comp;
    for (int a = 0; a < E; ++a)
        for (int b = a + 1; b < E; ++b)
            for (int c = b + 1; c < E; ++c) {
                const std::array<int, 3> cut{a, b, c};
                if (component_count(g, cut, comp) != 2) continue;
                int size0 = 0;
                for (int v : comp) size0 += (v == 0);
                if (size0 >= 2 && g.num_nodes - size0 >= 2) return cut;
            }
    return std::nullopt;
}

namespace {

using AdjMatrix = std::vector<std::vector<int>>;

AdjMatrix adjacency(const YutsisGraph& g) {
    AdjMatrix adj(g.num_nodes, std::vector<int>(g.num_nodes, 0));
    for (const auto& e : g.edges) {
        ++adj[e.u][e.v];
        if (e.u != e.v) ++adj[e.v][e.u];
    }
    return adj;
}

// 1-dimensional refinement with edge multiplicities
std::vector<long> refine_colors(const AdjMatrix& adj) {
    const int n = static_cast<int>(adj.size());
    std::vector<long> color(n, 0);
    for (int round = 0; round < n; ++round) {
        std::map<std::pair<long, std::multiset<std::pair<long, int>>>, long> next_id;
        std::vector<long> next(n);
        for (int v = 0; v < n; ++v) {
            std::multiset<std::pair<long, int>> sig;
            for (int u = 0; u < n; ++u)
                if (adj[v][u]) sig.insert({color[u], adj[v][u]});
            auto key = std::make_pair(color[v], sig);
            auto it = next_id.find(key);
            if (it == next_id.end())
                it = next_id.emplace(key, static_cast<long>(next_id.size())).first;
            next[v] = it->second;
        }
        if (next == color) break;
        color = next;
    }
    return color;
}

bool match_recursive(const AdjMatrix& a, const AdjMatrix& b, const std::vector<long>& ca,
                     const std::vector<long>& cb, std::vector<int>& map_ab,
                     std::vector<bool>& used, int v) {
    const int n = static_cast<int>(a.size());
    if (v == n) return true;
    for (int w = 0; w < n; ++w) {
        if (used[w] || ca[v] != cb[w]) continue;
        bool ok = true;
        for (int u = 0; u < v && ok; ++u)
            if (a[v][u] != b[w][map_ab[u]]) ok = false;
        if (a[v][v] != b[w][w]) ok = false;
        if (!ok) continue;
        map_ab[v] = w;
        used[w] = true;
        if (match_recursive(a, b, ca, cb, map_ab, used, v + 1)) return true;
        used[w] = false;
    }
    return false;
}

}  // namespace

bool isomorphic(const YutsisGraph& g1, const YutsisGraph& g2) {
    if (g1.num_nodes > 20 || g2.num_nodes > 20)
        throw CapabilityError("isomorphism search limited to 20 nodes");
    if (g1.num_nodes != g2.num_nodes || g1.num_edges() != g2.num_edges()) return false;
    const AdjMatrix a = adjacency(g1), b = adjacency(g2);
    const auto ca = refine_colors(a), cb = refine_colors(b);
    std::multiset<long> ma(ca.begin(), ca.end()), mb(cb.begin(), cb.end());
    if (ma != mb) return false;
    std::vector<int> map_ab(g1.num_nodes, -1);
    std::vector<bool> used(g1.num_nodes, false);
    return match_recursive(a, b, ca, cb, map_ab, used, 0);
}

std::string to_dot(const YutsisGraph& g, const std::string& name) {
    std::ostringstream out;
    out << "graph " << name << " {\n";
    out << "  node [shape=point];\n";
    for (int v = 0; v < g.num_nodes; ++v) out << "  n" << v << ";\n";
    for (const auto& e : g.edges) {
        out << "  n" << e.u << " -- n" << e.v;
        if (!e.label.empty()) out << " [label=\"" << e.label << "\"]";
        out << ";\n";
    }
    out << "}\n";
    return out.str();
}

}  // namespace spinnet
