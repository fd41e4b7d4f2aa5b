#pragma once

#include <optional>
#include <variant>

#include "weyl/polynomial.hpp"

namespace weyl {

/// w(t) = (alpha t + beta) / (gamma t + delta), t real (projectively
/// including t = infinity). Not all four coefficients may vanish.
struct MoebiusMap {
    Complex alpha, beta, gamma, delta;
};

struct Circle {
    Complex center;
    double radius = 0.0;
};

/// A line given by a point on it and a nonzero direction; vertical lines
/// need no special case in this form.
struct LineImage {
    Complex point;
    Complex direction;
};

/// Classified image of the real line under a Moebius map: a circle in the
/// generic case, a point when the map is constant, a line when the
/// denominator has constant argument along R.
struct MoebiusImage {
    std::variant<Circle, Complex, LineImage> value;
    /// Determinant magnitude below which the degenerate branches were taken.
    double classification_threshold = 0.0;

    bool is_circle() const noexcept { return std::holds_alternative<Circle>(value); }
    bool is_point() const noexcept { return std::holds_alternative<Complex>(value); }
    bool is_line() const noexcept { return std::holds_alternative<LineImage>(value); }
    const Circle& circle() const { return std::get<Circle>(value); }
    Complex point() const { return std::get<Complex>(value); }
    const LineImage& line() const { return std::get<LineImage>(value); }
};

/// Image of R under the map, via the determinant formulas
///   m = |alpha beta; conj(gamma) conj(delta)| / |gamma delta; conj(gamma) conj(delta)|
///   r = | |alpha beta; gamma delta| / |gamma delta; conj(gamma) conj(delta)| |.
/// Near-degeneracy is classified when a determinant falls below
/// 1e-13 * (coefficient scale)^2. Throws DegenerateMap when all four
/// coefficients vanish or the image escapes to infinity.
MoebiusImage image_of_real_line(const MoebiusMap& map);

/// (alpha t + beta)/(gamma t + delta); nullopt encodes the point at
/// infinity. t may be +-infinity (one projective parameter value).
std::optional<Complex> eval_map(const MoebiusMap& map, double t);

/// Unique circle through three pairwise distinct, non-collinear points.
Circle circle_through(Complex p1, Complex p2, Complex p3);

}  // namespace weyl
