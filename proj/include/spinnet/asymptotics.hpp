#pragma once

#include <array>
#include <string>
#include <vector>

#include "spinnet/recoupling.hpp"

namespace spinnet {

enum class NodeCase { Case03, Case21, Case30, Inadmissible };

/// Count the large marks on a triad: one large neighbor cannot balance, so a
/// single mark is inadmissible in any semiclassical regime.
NodeCase classify_node(const std::array<bool, 3>& large_marks);
NodeCase classify_node(const Triad& triad, const std::array<bool, 3>& large_marks);
std::string node_case_name(NodeCase c);

/// Canonical pattern {a B C; D e F; G H i}: capital positions large, diagonal
/// small. Derived quantities of the six-large approximation.
struct Asym63Params {
    Rational cos_theta;
    double gamma1 = 0, gamma2 = 0;
    int phase = 1;
};
Asym63Params asym63_params(const NineJLabels& labels);

/// Six-large approximation: phase/(Gamma1*Gamma2) * d^a * d^i, the two
/// d-functions evaluated exactly at the rational cosine and then floated.
/// Returns 0 when a projection exceeds its principal spin. Throws
/// DomainError when |cos theta| > 1.
double approx_9j_63(const NineJLabels& labels);

/// Canonical pattern {A b C; d e f; G h I}: large corners. Derived
/// quantities of the four-large approximation.
struct Asym45Params {
    Rational two_x_plus_1;
    int epsilon_twice = 0;
    int phase = 1;
};
Asym45Params asym45_params(const NineJLabels& labels);

/// Four-large (corner) approximation: phase/(2X+1) times two 3j symbols.
/// Selection-rule failures return exact zero values, not errors.
double approx_9j_45(const NineJLabels& labels);

/// One d-function factor of a disentangled product.
struct DisentangleFactor {
    Spin principal;                // one of the ray spins l_i
    int proj1_twice = 0;           // j_{i+1} - j_i
    int proj2_twice = 0;           // k_{i+1} - k_i
    std::array<Spin, 4> large{};   // j_i, j_{i+1}, k_i, k_{i+1}
};

struct TriadAudit {
    std::string description;
    NodeCase classification = NodeCase::Case03;
};

/// Structural plan: a type I symbol with all 2n perimeter spins large
/// collapses to a product of n-1 d-functions with ray principal spins.
struct DisentanglePlan {
    int n = 0;
    std::vector<DisentangleFactor> factors;
    std::vector<TriadAudit> audit;
};

/// Build the plan for a type I label set with the full j/k perimeter large.
/// Throws DomainError naming the first triad whose classification is
/// inadmissible (exactly one large spin).
DisentanglePlan disentangle_plan(const ThreeNJLabels& labels);

/// Same, but with an explicit set of large edge names ("j1".."jn", "k..",
/// "l.."); the perimeter convention is the special case marking every j and k.
DisentanglePlan disentangle_plan(const ThreeNJLabels& labels,
                                 const std::vector<std::string>& large_edges);

/// The standard arrangement on which approx_9j_63 evaluates a type I n=3
/// symbol (rays on the diagonal).
NineJLabels asym63_arrangement_of_type1(const ThreeNJLabels& labels);

/// Numeric evaluation of a plan. Exact reduction to approx_9j_63 for n=3;
/// for n >= 4 the angle and normalization generalize the n=3 pattern and the
/// result is experimental (unvalidated against exact values).
double evaluate_plan(const ThreeNJLabels& labels);

}  // namespace spinnet
