#include "hankel_detail.hpp"

#include <algorithm>
#include <cmath>
#include <cstddef>

namespace weyl::detail {

int max_testable_order(int max_moment_index, int weight_degree) {
    return (max_moment_index - weight_degree) / 2;
}

HankelFactor factor_hankel(const std::vector<double>& moments,
                           const std::vector<double>& weight, int order,
                           double pivot_rel_tol) {
    HankelFactor out;
    if (order < 0) return out;

    const std::size_t dim = static_cast<std::size_t>(order) + 1;
    auto entry = [&](std::size_t i, std::size_t j) {
        double v = 0.0;
        for (std::size_t d = 0; d < weight.size(); ++d)
            v += weight[d] * moments[i + j + d];
        return v;
    };

    std::vector<double> low(dim * dim, 0.0);
    double min_pivot = 0.0, max_pivot = 0.0, max_diag = 0.0;

    for (std::size_t k = 0; k < dim; ++k) {
        // Row k of the factor, then the pivot d_k = M[k][k] - sum L[k][i]^2.
        for (std::size_t j = 0; j < k; ++j) {
            double sum = entry(k, j);
            for (std::size_t i = 0; i < j; ++i)
                sum -= low[k * dim + i] * low[j * dim + i];
            low[k * dim + j] = sum / low[j * dim + j];
        }
        double pivot = entry(k, k);
        for (std::size_t i = 0; i < k; ++i) pivot -= low[k * dim + i] * low[k * dim + i];

        if (!(pivot > 0.0) || !std::isfinite(pivot)) break;

        max_diag = std::max(max_diag, entry(k, k));
        min_pivot = k == 0 ? pivot : std::min(min_pivot, pivot);
        max_pivot = std::max(max_pivot, pivot);

        // Orders fail monotonically: the threshold grows with the diagonal
        // while the minimum pivot only shrinks.
        if (min_pivot <= pivot_rel_tol * max_diag) break;

        low[k * dim + k] = std::sqrt(pivot);
        out.max_pd_order = static_cast<int>(k);
        out.pivots.push_back(pivot);
        out.condition.push_back(max_pivot / min_pivot);
    }

    const std::size_t cert =
        out.max_pd_order < 0 ? 0 : static_cast<std::size_t>(out.max_pd_order) + 1;
    out.factor.assign(cert * cert, 0.0);
    for (std::size_t i = 0; i < cert; ++i)
        for (std::size_t j = 0; j <= i; ++j) out.factor[i * cert + j] = low[i * dim + j];
    return out;
}

}  // namespace weyl::detail
