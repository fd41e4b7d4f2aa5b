#include "weyl/moebius.hpp"

#include <array>
#include <cmath>
#include <limits>

#include "weyl/errors.hpp"

namespace weyl {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

double coefficient_scale(const MoebiusMap& m) {
    return std::max(std::max(std::abs(m.alpha), std::abs(m.beta)),
                    std::max(std::abs(m.gamma), std::abs(m.delta)));
}

// Finite sample values of the map over a fixed parameter set, skipping poles.
std::vector<Complex> finite_samples(const MoebiusMap& map) {
    std::vector<Complex> out;
    for (double t : std::array<double, 5>{0.0, 1.0, -1.0, 2.0, kInf})
        if (auto v = eval_map(map, t)) out.push_back(*v);
    return out;
}

}  // namespace

std::optional<Complex> eval_map(const MoebiusMap& map, double t) {
    if (std::isinf(t)) {
        if (map.gamma != Complex{0.0}) return map.alpha / map.gamma;
        if (map.alpha != Complex{0.0}) return std::nullopt;
        if (map.delta != Complex{0.0}) return map.beta / map.delta;
        return std::nullopt;
    }
    const Complex den = map.gamma * t + map.delta;
    if (den == Complex{0.0}) return std::nullopt;
    return (map.alpha * t + map.beta) / den;
}

MoebiusImage image_of_real_line(const MoebiusMap& map) {
    const double scale = coefficient_scale(map);
    if (scale == 0.0) throw DegenerateMap("all four coefficients are zero");

    const double threshold = 1e-13 * scale * scale;
    const Complex d_unitary =
        map.gamma * std::conj(map.delta) - map.delta * std::conj(map.gamma);
    const Complex d_map = map.alpha * map.delta - map.beta * map.gamma;

    MoebiusImage image;
    image.classification_threshold = threshold;

    if (std::abs(d_unitary) > threshold) {
        if (std::abs(d_map) > threshold) {
            const Complex m =
                (map.alpha * std::conj(map.delta) - map.beta * std::conj(map.gamma)) / d_unitary;
            image.value = Circle{m, std::abs(d_map / d_unitary)};
            return image;
        }
        // Constant map: evaluate away from the pole.
        auto values = finite_samples(map);
        if (values.empty()) throw DegenerateMap("constant map with value at infinity");
        image.value = values.front();
        return image;
    }

    if (std::abs(d_map) > threshold) {
        // gamma, delta real-proportional: the image is a line through any two
        // distinct finite samples.
        auto values = finite_samples(map);
        for (std::size_t i = 1; i < values.size(); ++i) {
            const Complex dir = values[i] - values[0];
            if (std::abs(dir) > 1e-10 * (1.0 + std::abs(values[0]))) {
                image.value = LineImage{values[0], dir / std::abs(dir)};
                return image;
            }
        }
        throw DegenerateMap("line classification found no two distinct image points");
    }

    // Both determinants vanish: constant wherever defined. Use the sample
    // with the largest denominator for stability.
    double best = -1.0;
    std::optional<Complex> best_value;
    for (double t : std::array<double, 5>{0.0, 1.0, -1.0, 2.0, kInf}) {
        const double den = std::isinf(t) ? std::abs(map.gamma)
                                         : std::abs(map.gamma * t + map.delta);
        if (auto v = eval_map(map, t); v && den > best) {
            best = den;
            best_value = *v;
        }
    }
    if (!best_value) throw DegenerateMap("image escapes to infinity");
    image.value = *best_value;
    return image;
}

Circle circle_through(Complex p1, Complex p2, Complex p3) {
    const Complex u = p2 - p1, v = p3 - p1;
    const double cross = u.real() * v.imag() - u.imag() * v.real();
    if (std::abs(cross) <= 1e-13 * std::abs(u) * std::abs(v) || u == Complex{0.0} ||
        v == Complex{0.0})
        throw CollinearPoints("three points are collinear or coincide");

    // Perpendicular-bisector intersection as a 2x2 linear system.
    const double b1 = 0.5 * (std::norm(p2) - std::norm(p1));
    const double b2 = 0.5 * (std::norm(p3) - std::norm(p1));
    const double det = u.real() * v.imag() - v.real() * u.imag();
    const double cx = (b1 * v.imag() - b2 * u.imag()) / det;
    const double cy = (u.real() * b2 - v.real() * b1) / det;

    const Complex center{cx, cy};
    const double radius =
        (std::abs(p1 - center) + std::abs(p2 - center) + std::abs(p3 - center)) / 3.0;
    return Circle{center, radius};
}

}  // namespace weyl
