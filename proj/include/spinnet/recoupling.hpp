#pragma once

#include <array>
#include <vector>

#include "spinnet/radical.hpp"
#include "spinnet/spin.hpp"

namespace spinnet {

/// 3x3 array of spins, row-major.
struct NineJLabels {
    std::array<std::array<Spin, 3>, 3> j{};

    static NineJLabels from_twice(const std::array<int, 9>& t) {
        NineJLabels out;
        for (int r = 0; r < 3; ++r)
            for (int c = 0; c < 3; ++c) out.j[r][c] = Spin(t[3 * r + c]);
        return out;
    }
    Spin at(int r, int c) const { return j[r][c]; }

    /// Three row triads followed by three column triads.
    std::array<Triad, 6> triads() const;
    bool all_triads_admissible() const;
    NineJLabels transposed() const;
};

enum class ThreeNJKind { TypeI, TypeII };

/// Label set (j_1..j_n, k_1..k_n, l_1..l_n) of a 3nj symbol of type I or II.
/// The node triads follow the generator conventions of the graph module:
/// (j_i, j_{i+1}, l_i) and (k_i, k_{i+1}, l_i), closed off through the two
/// crossing triads (j_1, k_n, l_n), (j_n, k_1, l_n) for type I and
/// cyclically (j_n, j_1, l_n), (k_n, k_1, l_n) for type II.
struct ThreeNJLabels {
    ThreeNJKind kind = ThreeNJKind::TypeI;
    std::vector<Spin> j, k, l;

    int n() const { return static_cast<int>(j.size()); }
    void validate() const;
    std::vector<Triad> triads() const;
    bool all_triads_admissible() const;
};

/// Exact 9j via the single sum over three 6j symbols.
RadicalRational nine_j(const NineJLabels& labels);

/// Exact 3nj via the recurrence over the last ray; base n=2 is the 6j and
/// the type II chain is anchored at the n=3 two-6j product.
RadicalRational three_nj(const ThreeNJLabels& labels);

/// The standard 9j arrangement whose value equals three_nj on type I labels
/// with n=3.
NineJLabels nine_j_arrangement_of_type1(const ThreeNJLabels& labels);

/// Row/column permutation with tracked phase: returns the relabeled symbol
/// and +/-1 such that nine_j(input) = phase * nine_j(output). Odd
/// permutations contribute (-1)^(sum of all nine spins).
struct PermutedNineJ {
    NineJLabels labels;
    int phase = 1;
};
PermutedNineJ nine_j_permute(const NineJLabels& labels, const std::array<int, 3>& row_perm,
                             const std::array<int, 3>& col_perm, bool transpose);

/// LHS - RHS of the five-6j identity
///   sum_x (-1)^(R+x) (2x+1) {a b x; c d p}{c d x; e f q}{e f x; b a r}
///     = {p q r; e a d}{p q r; f b c},  R = a+b+c+d+e+f+p+q+r.
/// Exactly zero for every input.
RadicalRational be_residual(Spin a, Spin b, Spin c, Spin d, Spin e, Spin f, Spin p, Spin q,
                            Spin r);

/// Which diagonal entry of the recursion arrangement {c a b; f d e; j g h}
/// acts as the running variable. In the row-major label array these sit at
/// (1,1), (2,2) and (3,3).
enum class RecursionVariable { C, D, H };
enum class RecursionPair { CD, CH, DH };

/// Shift amplitudes and cosine coefficient for one running variable of the
/// three-term side of the 9j recursion. The 1/(q(2q+1)) normalizations are
/// folded into the A values.
struct RecursionCoeffs {
    RadicalRational a_next;  // multiplies the symbol shifted up by one
    RadicalRational a_prev;  // multiplies the symbol shifted down by one
    Rational cosine;         // multiplies the unshifted symbol
};
RecursionCoeffs recursion_coeffs(const NineJLabels& labels, RecursionVariable variable);

/// LHS - RHS of the five-term recursion for the chosen pair of running
/// variables; exactly zero. Out-of-range shifted symbols count as zero.
RadicalRational nine_j_recursion_residual(const NineJLabels& labels, RecursionPair pair);

/// Inputs of the lambda-shift symmetry between the two decompositions of a
/// 12j of the first kind.
struct LambdaSymmetryArgs {
    Spin a, b, c, d, e, f, g, h, jj;
    Spin a_prime, f_prime;
    Spin lambda;
};

/// LHS - RHS of the lambda-shift identity; exactly zero.
RadicalRational lambda_symmetry_residual(const LambdaSymmetryArgs& args);

/// Number of summation terms on each side (for the collapse assertion).
std::pair<int, int> lambda_symmetry_term_counts(const LambdaSymmetryArgs& args);

}  // namespace spinnet
