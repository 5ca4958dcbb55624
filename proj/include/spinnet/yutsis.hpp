#pragma once

#include <array>
#include <optional>
#include <string>
#include <vector>

#include "spinnet/spin.hpp"

namespace spinnet {

struct YutsisEdge {
    int u = 0, v = 0;
    std::string label;
};

/// Cubic multigraph with labeled edges and an optional face list (a rotation
/// system given as closed edge cycles; every edge lies on exactly two faces).
struct YutsisGraph {
    int num_nodes = 0;
    std::vector<YutsisEdge> edges;
    std::optional<std::vector<std::vector<int>>> faces;

    int num_edges() const { return static_cast<int>(edges.size()); }
    int degree(int node) const;
    bool is_cubic() const;
    /// Edge ids incident to each node.
    std::vector<std::vector<int>> incidence() const;
    /// Index of the edge with this label; throws if absent or ambiguous.
    int edge_by_label(const std::string& label) const;
    /// The three edge labels around each node.
    std::vector<std::vector<std::string>> node_triads() const;
    bool faces_consistent() const;
};

struct EmbeddingData {
    int V = 0, E = 0, F = 0, chi = 0;
};

/// Cartwheel diagram of the first kind: 2n nodes, perimeter j_1..j_n,
/// k_1..k_n, crossing rays l_1..l_n. Face list attached (n quadrilaterals
/// plus the perimeter region).
YutsisGraph cartwheel_type1(int n);

/// n-gonal prism of the second kind: polygons j_1..j_n and k_1..k_n joined
/// by laterals l_1..l_n. Face list attached (two polygons, n quadrilaterals).
YutsisGraph prism_type2(int n);

/// The tetrahedral 6j graph (the n = 2 seed of both families).
YutsisGraph tetrahedron_6j();

/// Petersen graph with edges e1..e15; the classic non-Hamiltonian cubic graph.
YutsisGraph petersen();

struct SquareInsertLabels {
    std::string split1 = "s1", split2 = "s2", bridge = "b";
};

/// Put one new node on each of two distinct edges and join them. Node and
/// edge counts grow by (2, 3). When the two edges bound a common face the
/// face list is carried through (the face is split in two); otherwise the
/// result has no face list.
YutsisGraph insert_square(const YutsisGraph& g, int e1, int e2,
                          const SquareInsertLabels& labels);

struct BowtieInsertLabels {
    std::string j_new = "jn", k_new = "kn", l_new = "ln";
};

/// Twisted insertion on a cartwheel-form graph: new nodes on the two
/// perimeter edges flanking `ray`, crossed relabeling of the inner halves,
/// and a new ray joining the nodes. cartwheel(n-1) -> cartwheel(n).
YutsisGraph insert_bowtie(const YutsisGraph& g, int ray, int flank1, int flank2,
                          const BowtieInsertLabels& labels);

/// Length of the shortest cycle (multigraph-aware; parallel edges give 2).
int girth(const YutsisGraph& g);

/// A Hamiltonian cycle as an edge-id sequence, if one exists. Deterministic
/// backtracking in node/edge order.
std::optional<std::vector<int>> hamiltonian_cycle(const YutsisGraph& g);

/// True if the graph contains a simple cycle of exactly this length.
bool has_cycle_of_length(const YutsisGraph& g, int length);

/// V - E + F from the stored face list; throws if faces are absent.
EmbeddingData euler_characteristic(const YutsisGraph& g);

/// A 3-edge cut separating the graph into two parts of >= 2 nodes each, if
/// one exists (exhaustive over edge triples).
std::optional<std::array<int, 3>> nontrivial_cut3(const YutsisGraph& g);

/// Unlabeled multigraph isomorphism by refinement plus backtracking;
/// capability-limited to 20 nodes.
bool isomorphic(const YutsisGraph& g1, const YutsisGraph& g2);

/// Deterministic DOT rendering with edge labels.
std::string to_dot(const YutsisGraph& g, const std::string& name = "yutsis");

}  // namespace spinnet
