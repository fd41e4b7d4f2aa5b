#pragma once

#include <complex>
#include <vector>

#include "weyl/polynomial.hpp"

namespace weyl {

struct OrthoSystem;

struct Atom {
    double x;  ///< position
    double w;  ///< weight, > 0
};

/// Finite atomic measure with distinct positions and positive weights.
struct DiscreteMeasure {
    std::vector<Atom> atoms;

    double total_mass() const noexcept;
};

/// Value of I_mu(z) = sum_k w_k / (x_k - z) together with the evaluation point.
struct TransformValue {
    Complex value;
    Complex at;
};

/// Stieltjes transform of a finite atomic measure. Throws PoleAtAtom when z
/// coincides with an atom position.
TransformValue stieltjes_transform(const DiscreteMeasure& mu, Complex z);

/// Gauss rule of the system: atoms at the n real roots of P_n, weights from
/// the Vandermonde moment system for s_0..s_{n-1}. The result reproduces
/// s_0..s_{2n-1}; a residual above tolerance throws RootFindingFailed.
DiscreteMeasure gauss_quadrature(const OrthoSystem& sys, int n);

/// Canonical (n+1)-atom solution of the order-2n truncated problem: atoms at
/// the roots of P_{n+1} - c*P_n, weights from the Vandermonde moment system.
/// Its transform traces the order-n truncated boundary circle as c varies.
DiscreteMeasure canonical_measure(const OrthoSystem& sys, int n, double c);

/// Convex mixture: atom union with weights lambda*w and (1-lambda)*w',
/// coincident positions merged, zero-weight atoms dropped.
DiscreteMeasure mix(const DiscreteMeasure& mu1, const DiscreteMeasure& mu2, double lambda);

}  // namespace weyl
