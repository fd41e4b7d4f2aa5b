#pragma once

#include <vector>

#include "weyl/moments.hpp"
#include "weyl/polynomial.hpp"

namespace weyl {

enum class PolyKind { first, second };

struct OrthoOptions {
    int order_cap = 20;           ///< hard refusal above this order
    double condition_limit = 1e12;
    double pivot_rel_tol = 1e-12;
};

/// Orthonormal polynomials of first kind P_0..P_N (positive leading
/// coefficients), second kind Q_0..Q_N (Q_0 = 0, deg Q_k = k-1), and the
/// three-term recurrence data
///     x P_k = a_k P_{k+1} + b_k P_k + a_{k-1} P_{k-1},  a_k > 0.
/// Immutable after construction.
struct OrthoSystem {
    MomentSequence s;
    std::vector<Polynomial> P;
    std::vector<Polynomial> Q;
    std::vector<double> a;          ///< a_0..a_{N-1}
    std::vector<double> b;          ///< b_0..b_{N-1}
    std::vector<double> condition;  ///< Hankel pivot-ratio estimate per order 0..N

    int max_order() const noexcept { return static_cast<int>(P.size()) - 1; }
};

/// Builds the orthonormal system of order n from a moment sequence. The
/// coefficients of P_k are read off the inverse Cholesky factor of the
/// Hankel matrix; Q_k comes from the divided-difference expansion
/// (P_k(z) - P_k(x))/(z - x) with the moment functional applied in x.
///
/// Throws InsufficientMoments (2n > m), NotPositiveDefinite (with the
/// failing order), IllConditioned (condition estimate above the limit, or
/// n above the order cap).
OrthoSystem orthonormal_system(const MomentSequence& s, int n, const OrthoOptions& opts = {});

/// Horner evaluation of P_k (first) or Q_k (second) at z.
Complex eval_poly(const OrthoSystem& sys, PolyKind kind, int k, Complex z);

/// Truncated Friedrichs scalar -Q_n(z)/P_n(z). Throws PoleAtZ when |P_n(z)|
/// is below tolerance.
Complex truncated_t(const OrthoSystem& sys, int n, Complex z);

}  // namespace weyl
