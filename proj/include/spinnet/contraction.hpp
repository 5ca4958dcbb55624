#pragma once

#include <vector>

#include "spinnet/wigner.hpp"

namespace spinnet {

struct NineJLabels;
struct ThreeNJLabels;

/// Reference evaluators built purely on 3j sums over magnetic quantum
/// numbers. They deliberately share no code with the single-sum kernels they
/// are used to check.

/// 6j as the contraction of four 3j symbols.
RadicalRational sixj_by_contraction(const SixJArgs& args);

/// 9j as the contraction of six 3j symbols (three row, three column).
RadicalRational ninej_by_contraction(const NineJLabels& labels);

/// 3nj of the first kind as the contraction of its 2n node 3j symbols,
/// with oriented edges carrying (-1)^(j-m) metrics. Cost grows as
/// (max m-range)^(n+1); intended for small spins only.
RadicalRational threenj1_by_contraction(const ThreeNJLabels& labels);

/// Memoized 3j used by the contraction evaluators.
RadicalRational contraction_3j(int tj1, int tj2, int tj3, int tm1, int tm2, int tm3);

}  // namespace spinnet
