#pragma once

// Internal: incremental Cholesky certification of (localized) Hankel
// matrices. Shared by moments.cpp and orthopoly.cpp, not installed.

#include <vector>

namespace weyl::detail {

struct HankelFactor {
    /// Largest order n with all pivots of H_0..H_n above
    /// pivot_rel_tol * max diagonal entry of H_n; -1 when order 0 fails.
    int max_pd_order = -1;
    /// max/min pivot ratio per certified order 0..max_pd_order.
    std::vector<double> condition;
    /// Pivots d_0..d_{max_pd_order} (values before the square root).
    std::vector<double> pivots;
    /// Row-major lower Cholesky factor of the certified leading block,
    /// dimension (max_pd_order + 1)^2.
    std::vector<double> factor;
};

/// Factorizes the localized Hankel matrix M[i][j] = sum_d weight[d] * s[i+j+d]
/// of the given order (dimension order+1). The plain Hankel matrix uses
/// weight = {1}. Orders are certified with the per-order pivot threshold.
HankelFactor factor_hankel(const std::vector<double>& moments,
                           const std::vector<double>& weight, int order,
                           double pivot_rel_tol = 1e-12);

/// Largest order testable for a localizer of degree weight.size()-1 given
/// moments s_0..s_m; -1 when even order 0 is out of reach.
int max_testable_order(int max_moment_index, int weight_degree);

}  // namespace weyl::detail
