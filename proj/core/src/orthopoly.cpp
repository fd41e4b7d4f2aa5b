#include "weyl/orthopoly.hpp"

#include <cmath>
#include <cstddef>
#include <string>

#include "hankel_detail.hpp"
#include "weyl/errors.hpp"

namespace weyl {

OrthoSystem orthonormal_system(const MomentSequence& s, int n, const OrthoOptions& opts) {
    if (n < 0) throw IndexOutOfRange("system order must be >= 0");
    if (n > opts.order_cap)
        throw IllConditioned("order " + std::to_string(n) + " above cap " +
                             std::to_string(opts.order_cap));
    if (s.values.empty()) throw EmptySequence("moment sequence has no entries");
    for (double v : s.values)
        if (!std::isfinite(v)) throw NonFiniteInput("moment sequence contains a non-finite value");
    if (2 * n > s.max_index())
        throw InsufficientMoments("order " + std::to_string(n) + " needs moments s_0..s_" +
                                  std::to_string(2 * n) + ", have s_0..s_" +
                                  std::to_string(s.max_index()));

    auto f = detail::factor_hankel(s.values, {1.0}, n, opts.pivot_rel_tol);
    if (f.max_pd_order < n)
        throw NotPositiveDefinite("Hankel matrix fails positive definiteness at order " +
                                  std::to_string(f.max_pd_order + 1));
    if (f.condition.back() > opts.condition_limit)
        throw IllConditioned("condition estimate " + std::to_string(f.condition.back()) +
                             " above limit");

    const std::size_t dim = static_cast<std::size_t>(n) + 1;
    const auto& low = f.factor;

    // Inverse of the lower factor; row k holds the coefficients of P_k.
    std::vector<double> inv(dim * dim, 0.0);
    for (std::size_t k = 0; k < dim; ++k) {
        inv[k * dim + k] = 1.0 / low[k * dim + k];
        for (std::size_t j = 0; j < k; ++j) {
            double sum = 0.0;
            for (std::size_t i = j; i < k; ++i) sum += low[k * dim + i] * inv[i * dim + j];
            inv[k * dim + j] = -sum / low[k * dim + k];
        }
    }

    OrthoSystem sys;
    sys.s = s;
    sys.condition = std::move(f.condition);
    sys.P.reserve(dim);
    sys.Q.reserve(dim);

    for (std::size_t k = 0; k < dim; ++k) {
        std::vector<double> pc(inv.begin() + static_cast<std::ptrdiff_t>(k * dim),
                               inv.begin() + static_cast<std::ptrdiff_t>(k * dim + k + 1));
        sys.P.emplace_back(std::move(pc));

        // Q_k(z): coefficient of z^i is sum_{j>i} c_j s_{j-1-i}.
        std::vector<double> qc(k, 0.0);
        for (std::size_t i = 0; i < k; ++i)
            for (std::size_t j = i + 1; j <= k; ++j)
                qc[i] += sys.P[k].coeff(j) * s.values[j - 1 - i];
        sys.Q.emplace_back(std::move(qc));
    }

    // Recurrence coefficients from leading and subleading coefficients.
    for (std::size_t k = 0; k + 1 < dim; ++k) {
        const double kap_k = sys.P[k].coeff(k);
        const double kap_k1 = sys.P[k + 1].coeff(k + 1);
        const double lam_k = k == 0 ? 0.0 : sys.P[k].coeff(k - 1);
        const double lam_k1 = sys.P[k + 1].coeff(k);
        const double ak = kap_k / kap_k1;
        sys.a.push_back(ak);
        sys.b.push_back((lam_k - ak * lam_k1) / kap_k);
    }
    return sys;
}

Complex eval_poly(const OrthoSystem& sys, PolyKind kind, int k, Complex z) {
    if (k < 0 || k > sys.max_order())
        throw IndexOutOfRange("polynomial index " + std::to_string(k) + " out of range 0.." +
                              std::to_string(sys.max_order()));
    const auto& poly = kind == PolyKind::first ? sys.P[static_cast<std::size_t>(k)]
                                               : sys.Q[static_cast<std::size_t>(k)];
    return poly(z);
}

Complex truncated_t(const OrthoSystem& sys, int n, Complex z) {
    if (n < 0 || n > sys.max_order())
        throw IndexOutOfRange("order " + std::to_string(n) + " out of range 0.." +
                              std::to_string(sys.max_order()));
    const auto& pn = sys.P[static_cast<std::size_t>(n)];

    double scale = 0.0, zpow = 1.0;
    const double az = std::abs(z);
    for (double c : pn.coeffs()) {
        scale += std::abs(c) * zpow;
        zpow *= az;
    }
    const Complex pz = pn(z);
    if (std::abs(pz) < 1e-13 * std::max(1.0, scale))
        throw PoleAtZ("P_n vanishes at the evaluation point");
    return -sys.Q[static_cast<std::size_t>(n)](z) / pz;
}

}  // namespace weyl
