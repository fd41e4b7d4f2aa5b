#include <doctest.h>

#include <cmath>
#include <random>

#include "weyl/errors.hpp"
#include "weyl/measures.hpp"
#include "weyl/region.hpp"

using namespace weyl;

namespace {

const Complex kI{0.0, 1.0};

OrthoSystem gaussian_system(int n) {
    return orthonormal_system(classical_moments(Gaussian{}, 2 * n + 1), n);
}

OrthoSystem two_point_system() {
    return orthonormal_system(classical_moments(TwoPointFamily{-2, 0.5, 2, 0.5}, 5), 1);
}

bool close(Complex a, Complex b, double tol) { return std::abs(a - b) <= tol; }

/// Central-difference tangent oriented into the arc at the endpoint t0.
Complex tangent_into(const BoundaryArc& arc, double t0) {
    const double h = 1e-6;
    const Complex plus = *eval_map(arc.map, t0 + h);
    const Complex minus = *eval_map(arc.map, t0 - h);
    const Complex d = (plus - minus) / (2.0 * h);
    return arc.t_lo == t0 ? d : -d;
}

}  // namespace

TEST_CASE("hamburger disk fixtures and guards") {
    const OrthoSystem sys = gaussian_system(2);
    const Circle k1 = hamburger_disk(sys, 1, kI);
    CHECK(close(k1.center, Complex{0, 0.75}, 1e-12));
    CHECK(k1.radius == doctest::Approx(0.25).epsilon(1e-12));

    const Circle k2 = hamburger_disk(sys, 2, kI);
    CHECK(close(k2.center, Complex{0, 0.625}, 1e-12));
    CHECK(k2.radius == doctest::Approx(0.125).epsilon(1e-12));

    CHECK_THROWS_AS((void)hamburger_disk(sys, 1, Complex{2, 0}), RealAxisZ);
    CHECK_THROWS_AS((void)hamburger_disk(sys, 3, kI), NotCertified);
}

TEST_CASE("hamburger boundary parametrization fits the disk") {
    const OrthoSystem sys = gaussian_system(2);
    const WeylRegion region = hamburger_region(sys, 1, kI);
    REQUIRE(region.arcs.size() == 1);

    // Three samples of the truncated parametrization fix the same circle.
    const Circle fitted =
        circle_through(*eval_map(region.arcs[0].map, 0.0), *eval_map(region.arcs[0].map, 1.0),
                       *eval_map(region.arcs[0].map, -1.0));
    CHECK(close(fitted.center, region.circles[0].center, 1e-12));
    CHECK(fitted.radius == doctest::Approx(region.circles[0].radius).epsilon(1e-12));

    // t = infinity is the 1-point Gauss transform.
    const Complex gauss = stieltjes_transform(gauss_quadrature(sys, 1), kI).value;
    CHECK(close(*eval_map(region.arcs[0].map, INFINITY), gauss, 1e-13));
}

TEST_CASE("hamburger disks are nested across orders") {
    const OrthoSystem sys = orthonormal_system(classical_moments(Gaussian{}, 17), 8);
    for (const Complex z : {kI, Complex{0.7, 0.4}, Complex{-1.2, 2.0}}) {
        for (int n = 0; n < 8; ++n) {
            const Circle outer = hamburger_disk(sys, n, z);
            const Circle inner = hamburger_disk(sys, n + 1, z);
            CHECK(std::abs(inner.center - outer.center) + inner.radius <=
                  outer.radius + 1e-10);
        }
    }

    const MomentSequence ln = classical_moments(Lognormal{}, 19);
    const int cert = check_positivity(ln, AllOfR{}).max_pd_order;
    const OrthoSystem logsys = orthonormal_system(ln, cert);
    for (int n = 0; n < cert; ++n) {
        const Circle outer = hamburger_disk(logsys, n, kI);
        const Circle inner = hamburger_disk(logsys, n + 1, kI);
        CHECK(std::abs(inner.center - outer.center) + inner.radius <= outer.radius + 1e-10);
    }
}

TEST_CASE("conjugation symmetry of the disk data through the kernels") {
    const OrthoSystem sys = orthonormal_system(classical_moments(Gaussian{}, 13), 6);
    std::mt19937 rng(71);
    std::uniform_real_distribution<double> re(-2.0, 2.0), im(0.1, 2.0);
    for (int trial = 0; trial < 30; ++trial) {
        const Complex z{re(rng), im(rng)};
        for (int n = 0; n <= 6; n += 2) {
            const Complex center = -kernel(sys, KernelKind::C, n, z, std::conj(z)) /
                                   kernel(sys, KernelKind::D, n, z, std::conj(z));
            const Complex mirrored = -kernel(sys, KernelKind::C, n, std::conj(z), z) /
                                     kernel(sys, KernelKind::D, n, std::conj(z), z);
            CHECK(close(mirrored, std::conj(center), 1e-12 * (1.0 + std::abs(center))));
            CHECK(std::abs(kernel(sys, KernelKind::D, n, std::conj(z), z)) ==
                  doctest::Approx(std::abs(kernel(sys, KernelKind::D, n, z, std::conj(z))))
                      .epsilon(1e-12));
        }
    }
}

TEST_CASE("gauss transforms land on the truncated boundary") {
    const OrthoSystem sys = orthonormal_system(classical_moments(Gaussian{}, 13), 6);
    for (const Complex z : {kI, Complex{0.5, 1.5}}) {
        for (int n = 1; n <= 5; ++n) {
            const Circle disk = hamburger_disk(sys, n, z);
            const Complex v = stieltjes_transform(gauss_quadrature(sys, n), z).value;
            CHECK(std::abs(std::abs(v - disk.center) - disk.radius) <= 1e-10);
        }
    }
}

TEST_CASE("parameter-base invariance of the hamburger circle") {
    const OrthoSystem sys = orthonormal_system(classical_moments(Gaussian{}, 13), 6);
    for (int n = 1; n <= 5; ++n) {
        const Circle closed = hamburger_disk(sys, n, kI);
        for (double a : {0.0, 1.0, -2.5, 0.3, 7.0}) {
            const Complex A = kernel(sys, KernelKind::A, n, kI, Complex{a});
            const Complex B = kernel(sys, KernelKind::B, n, kI, Complex{a});
            const Complex C = kernel(sys, KernelKind::C, n, kI, Complex{a});
            const Complex D = kernel(sys, KernelKind::D, n, kI, Complex{a});
            const MoebiusImage image = image_of_real_line({-C, -A, D, B});
            REQUIRE(image.is_circle());
            CHECK(close(image.circle().center, closed.center, 1e-9));
            CHECK(image.circle().radius == doctest::Approx(closed.radius).epsilon(1e-9));
        }
    }
}

TEST_CASE("stieltjes region fixture at a = -3") {
    const OrthoSystem sys = gaussian_system(1);
    const WeylRegion region = stieltjes_region(sys, 1, kI, -3.0);

    // Kernel recomputation oracle for the hand-derived values.
    CHECK(close(kernel(sys, KernelKind::A, 1, kI, Complex{-3}), Complex{3, 1}, 1e-13));
    CHECK(close(kernel(sys, KernelKind::B, 1, kI, Complex{-3}), Complex{-2, 3}, 1e-13));
    CHECK(close(kernel(sys, KernelKind::C, 1, kI, Complex{-3}), Complex{-8, -3}, 1e-13));
    CHECK(close(kernel(sys, KernelKind::D, 1, kI, Complex{-3}), Complex{6, -8}, 1e-13));

    REQUIRE(region.vertices.size() == 2);
    CHECK(close(region.vertices[0], Complex{0.24, 0.82}, 1e-10));
    CHECK(close(region.vertices[1], kI, 1e-10));
    CHECK(region.degenerate == false);
    CHECK(region.diagnostics.empty());

    // t_a = 1/3 and the shared vertex equals the truncated Friedrichs value.
    CHECK(region.arcs[0].t_lo == doctest::Approx(1.0 / 3.0).epsilon(1e-12));
    CHECK(close(*eval_map(region.arcs[0].map, region.arcs[0].t_lo),
                truncated_t(sys, 1, kI), 1e-9));
    CHECK(close(*eval_map(region.arcs[1].map, 0.0), truncated_t(sys, 1, kI), 1e-9));

    // K1 is the hamburger circle (base invariance).
    CHECK(close(region.circles[0].center, Complex{0, 0.75}, 1e-9));
    CHECK(region.circles[0].radius == doctest::Approx(0.25).epsilon(1e-9));

    // Vertex angle: closed form and finite-difference tangents.
    const double want = std::arg(1.0 / Complex{-3.0 - 0.0, -1.0});
    REQUIRE(region.vertex_angle.has_value());
    CHECK(*region.vertex_angle == doctest::Approx(want).epsilon(1e-12));
    const Complex t1 = tangent_into(region.arcs[0], region.arcs[0].t_lo);
    const Complex t2 = tangent_into(region.arcs[1], 0.0);
    CHECK(std::abs(std::abs(std::arg(t2 / t1)) - *region.vertex_angle) <= 1e-8);

    // Vertices sit on both circles.
    for (Complex v : region.vertices)
        for (const Circle& c : region.circles)
            CHECK(std::abs(std::abs(v - c.center) - c.radius) <= 1e-9);
}

TEST_CASE("stieltjes closed-form K2 cross-check") {
    const OrthoSystem sys = gaussian_system(1);
    const WeylRegion region = stieltjes_region(sys, 1, kI, -3.0);
    const Complex z = kI, zc = std::conj(kI), a{-3.0};
    const double ta = 1.0 / 3.0;
    const Complex A = kernel(sys, KernelKind::A, 1, z, a);
    const Complex B = kernel(sys, KernelKind::B, 1, z, a);
    const Complex C = kernel(sys, KernelKind::C, 1, z, a);
    const Complex D = kernel(sys, KernelKind::D, 1, z, a);
    const Complex Bc = kernel(sys, KernelKind::B, 1, zc, a);
    const Complex Dc = kernel(sys, KernelKind::D, 1, zc, a);

    const Complex num =
        (a - z) * (A + ta * C) * Dc - C * (a - zc) * (Bc + ta * Dc);
    const Complex den =
        (a - z) * (B + ta * D) * Dc - D * (a - zc) * (Bc + ta * Dc);
    // Displayed ratio needs the global minus (see the w2 coefficient signs).
    const Complex m2 = -num / den;
    const double r2 = std::abs((a - z) / den);
    CHECK(close(region.circles[1].center, m2, 1e-10));
    CHECK(region.circles[1].radius == doctest::Approx(r2).epsilon(1e-10));
}

TEST_CASE("stieltjes pick-parameter samples stay inside the lens") {
    const OrthoSystem sys = gaussian_system(2);
    const WeylRegion region = stieltjes_region(sys, 2, Complex{0.4, 1.1}, -4.0);
    CHECK(region.diagnostics.empty());

    const Complex z{0.4, 1.1}, a{-4.0};
    const Complex A = kernel(sys, KernelKind::A, 2, z, a);
    const Complex B = kernel(sys, KernelKind::B, 2, z, a);
    const Complex C = kernel(sys, KernelKind::C, 2, z, a);
    const Complex D = kernel(sys, KernelKind::D, 2, z, a);
    const double ta = truncated_t(sys, 2, a).real();

    std::mt19937 rng(211);
    std::uniform_real_distribution<double> unit(0.0, 1.0);
    for (int trial = 0; trial < 200; ++trial) {
        const double beta = ta + unit(rng) / (1.0 - unit(rng) + 1e-12);
        const double gamma = unit(rng) / (1.0 - unit(rng) + 1e-12);
        const Complex tau = beta + gamma / (a - z);
        const Complex w = -(C * tau + A) / (D * tau + B);
        CHECK(contains(region, w, 1e-7));
    }
}

TEST_CASE("stieltjes angle fixture at a = 0 on a half-line sequence") {
    const MomentSequence s = classical_moments(TwoPointFamily{1, 0.5, 3, 0.5}, 5);
    const OrthoSystem sys = orthonormal_system(s, 1);
    const WeylRegion region = stieltjes_region(sys, 1, kI, 0.0);
    REQUIRE(region.vertex_angle.has_value());
    CHECK(*region.vertex_angle == doctest::Approx(M_PI / 2.0).epsilon(1e-12));
}

TEST_CASE("stieltjes preconditions") {
    const OrthoSystem sys = gaussian_system(1);
    CHECK_THROWS_AS((void)stieltjes_region(sys, 1, Complex{1, 0}, -3.0), RealAxisZ);
    // Gaussian moments are not a [0, inf) sequence.
    CHECK_THROWS_AS((void)stieltjes_region(sys, 1, kI, 0.0), NotCertified);
    // P_2(a) = 0 at a = -1 for the gaussian system.
    const OrthoSystem sys2 = gaussian_system(2);
    CHECK_THROWS_AS((void)stieltjes_region(sys2, 2, kI, -1.0), PoleAtA);
}

TEST_CASE("interval even case: K1 is the hamburger circle, fixture at [-1, 1]") {
    const OrthoSystem sys = gaussian_system(1);
    const WeylRegion region = interval_region(sys, 2, kI, -1.0, 1.0);

    const Circle hamburger = hamburger_disk(sys, 1, kI);
    CHECK(close(region.circles[0].center, hamburger.center, 1e-12));
    CHECK(region.circles[0].radius == doctest::Approx(hamburger.radius).epsilon(1e-12));

    // The full w1 parameter line fits the same circle.
    const MoebiusImage w1_image = image_of_real_line(region.arcs[0].map);
    if (w1_image.is_circle()) {
        CHECK(close(w1_image.circle().center, hamburger.center, 1e-12));
    } else {
        // Collapsed problem: the arc is the single point of the region.
        CHECK(w1_image.is_point());
    }

    // w1(0) = i/2 equals the transform of the unique solution.
    CHECK(close(*eval_map(region.arcs[0].map, 0.0), Complex{0, 0.5}, 1e-12));
    CHECK(close(stieltjes_transform({{{-1, 0.5}, {1, 0.5}}}, kI).value, Complex{0, 0.5},
                1e-15));
    CHECK(region.degenerate);
    CHECK(contains(region, Complex{0, 0.5}));
    CHECK(!contains(region, Complex{0.01, 0.5}));
}

TEST_CASE("interval even nondegenerate lens on [-2, 2]") {
    const OrthoSystem sys = gaussian_system(1);
    const WeylRegion region = interval_region(sys, 2, kI, -2.0, 2.0);
    CHECK(!region.degenerate);
    CHECK(region.diagnostics.empty());
    REQUIRE(region.circles.size() == 2);

    // Closed-form K2 against the full-line image of the w2 coefficients.
    const MoebiusImage w2_image = image_of_real_line(region.arcs[1].map);
    REQUIRE(w2_image.is_circle());
    CHECK(close(w2_image.circle().center, region.circles[1].center,
                1e-9 * (1.0 + std::abs(region.circles[1].center))));
    CHECK(w2_image.circle().radius ==
          doctest::Approx(region.circles[1].radius).epsilon(1e-9));

    // Vertices on both circles; arc endpoints are the vertices.
    for (Complex v : region.vertices)
        for (const Circle& c : region.circles)
            CHECK(std::abs(std::abs(v - c.center) - c.radius) <= 1e-10);

    // Two-atom solutions p, -1/p on [-2, 2] stay inside the lens.
    for (double p = -2.0; p <= -0.5 + 1e-9; p += 0.05) {
        const double q = -1.0 / p;
        const double w = q / (q - p);
        const Complex value =
            stieltjes_transform({{{p, w}, {q, 1.0 - w}}}, kI).value;
        CHECK(contains(region, value, 1e-9));
    }

    CHECK_THROWS_AS((void)interval_region(sys, 2, kI, 1.0, 1.0), BadInterval);
}

TEST_CASE("interval odd case on [-2, 2]") {
    const OrthoSystem sys = orthonormal_system(classical_moments(Gaussian{}, 7), 3);
    const WeylRegion region = interval_region(sys, 3, kI, -2.0, 2.0);
    CHECK(region.kind == RegionKind::interval_lens_odd);
    CHECK(region.diagnostics.empty());

    // Shared t = 0 vertex is -Q_2(z)/P_2(z).
    const Complex v0 = -eval_poly(sys, PolyKind::second, 2, kI) /
                       eval_poly(sys, PolyKind::first, 2, kI);
    CHECK(close(region.vertices[0], v0, 1e-12));
    CHECK(close(*eval_map(region.arcs[0].map, 0.0), v0, 1e-12));
    CHECK(close(*eval_map(region.arcs[1].map, 0.0), v0, 1e-12));

    // On-circle property along both arcs.
    for (const auto& sample : boundary_samples(region, 64)) {
        const Circle& c = region.circles[region.arcs[sample.arc].circle_index];
        CHECK(std::abs(std::abs(sample.value - c.center) - c.radius) <= 1e-9);
    }

    // Symmetric three-atom solutions of (1, 0, 1, 0) inside [-2, 2].
    for (double x = 0.75; x <= 2.0 + 1e-9; x += 0.05) {
        const double w = 0.5 / (x * x);
        const Complex value =
            stieltjes_transform({{{-x, w}, {0, 1.0 - 2.0 * w}, {x, w}}}, kI).value;
        CHECK(contains(region, value, 1e-9));
    }
}

TEST_CASE("gap region fixtures for the two-point system") {
    const OrthoSystem sys = two_point_system();
    const WeylRegion region = gap_circles(sys, 1, kI, -1.0, 1.0);

    // Kernel recomputation oracle.
    const Complex vb = -kernel(sys, KernelKind::C, 1, kI, Complex{1}) /
                       kernel(sys, KernelKind::D, 1, kI, Complex{1});
    const Complex va = -kernel(sys, KernelKind::C, 1, kI, Complex{-1}) /
                       kernel(sys, KernelKind::D, 1, kI, Complex{-1});
    CHECK(close(vb, Complex{6.0 / 17.0, 7.0 / 17.0}, 1e-13));
    CHECK(close(va, Complex{-6.0 / 17.0, 7.0 / 17.0}, 1e-13));
    REQUIRE(region.vertices.size() == 2);
    CHECK(close(region.vertices[0], vb, 1e-10));
    CHECK(close(region.vertices[1], va, 1e-10));

    // Hand-derived circles: K1 = (3i/5, 2/5), K2 = (-i/4, 3/4).
    CHECK(close(region.circles[0].center, Complex{0, 0.6}, 1e-12));
    CHECK(region.circles[0].radius == doctest::Approx(0.4).epsilon(1e-12));
    CHECK(close(region.circles[1].center, Complex{0, -0.25}, 1e-12));
    CHECK(region.circles[1].radius == doctest::Approx(0.75).epsilon(1e-12));

    // Endpoint coincidence of the two arcs.
    const auto at = [&](std::size_t arc, bool infinity) {
        const BoundaryArc& barc = region.arcs[arc];
        const double lo_end = std::isfinite(barc.t_lo) ? barc.t_lo : barc.t_hi;
        return infinity ? *eval_map(barc.map, std::isfinite(barc.t_lo) ? barc.t_hi : barc.t_lo)
                        : *eval_map(barc.map, lo_end);
    };
    CHECK(close(at(0, false), at(1, false), 1e-10));
    CHECK(close(at(0, true), at(1, true), 1e-10));

    // Solution membership: the generating measure.
    const Complex gen = stieltjes_transform({{{-2, 0.5}, {2, 0.5}}}, kI).value;
    CHECK(close(gen, Complex{0, 0.2}, 1e-15));
    CHECK(contains(region, gen, 1e-9));
    CHECK(region.diagnostics.empty());

    // Vertex angle equals the value-cone angle, cross-checked by tangents.
    REQUIRE(region.vertex_angle.has_value());
    CHECK(*region.vertex_angle == doctest::Approx(M_PI / 2.0).epsilon(1e-12));
    const Complex t1 = tangent_into(region.arcs[0], 0.0);
    const Complex t2 = tangent_into(region.arcs[1], 0.0);
    CHECK(std::abs(std::abs(std::arg(t2 / t1)) - *region.vertex_angle) <= 1e-8);

    CHECK_THROWS_AS((void)gap_circles(sys, 1, kI, 1.0, 1.0), BadInterval);
}

TEST_CASE("degenerate gap region collapses to the unique solution value") {
    const OrthoSystem sys =
        orthonormal_system(classical_moments(TwoPointFamily{-1, 0.5, 1, 0.5}, 3), 1);
    const WeylRegion region = gap_circles(sys, 1, kI, -1.0, 1.0);
    CHECK(region.degenerate);
    REQUIRE(region.vertices.size() == 2);
    CHECK(close(region.vertices[0], Complex{0, 0.5}, 1e-12));
    CHECK(close(region.vertices[1], Complex{0, 0.5}, 1e-12));
    CHECK(contains(region, Complex{0, 0.5}));
    CHECK(!contains(region, Complex{0, 0.51}));

    const Complex gen = stieltjes_transform({{{-1, 0.5}, {1, 0.5}}}, kI).value;
    CHECK(contains(region, gen));

    for (const auto& sample : boundary_samples(region, 17))
        CHECK(close(sample.value, Complex{0, 0.5}, 1e-12));
}

TEST_CASE("cone angle closed form, limit, and monte-carlo bound") {
    CHECK(cone_angle(kI, -1.0, 1.0) == doctest::Approx(M_PI / 2.0).epsilon(1e-12));
    CHECK(cone_angle(Complex{0, 100}, -1.0, 1.0) < 0.05);
    CHECK_THROWS_AS((void)cone_angle(kI, 1.0, -1.0), BadInterval);
    CHECK_THROWS_AS((void)cone_angle(Complex{1, 0}, -1.0, 1.0), RealAxisZ);

    // Step functions h = sum c_i chi_[a_i, b_i] supported in E = R \ (a, b):
    // arg F_h(z) = sum c_i (arg(z - b_i) - arg(z - a_i)) <= cone angle.
    const double a = -1.0, b = 1.0;
    for (const Complex z : {kI, Complex{0.7, 0.6}, Complex{-2.0, 1.2}}) {
        const double theta = cone_angle(z, a, b);
        std::mt19937 rng(401);
        std::uniform_real_distribution<double> unit(0.0, 1.0);
        double sup = 0.0;
        for (int trial = 0; trial < 1000; ++trial) {
            // Up to two intervals on each side of the gap, weights in [0, 1].
            double arg = 0.0;
            const int pieces = 1 + static_cast<int>(rng() % 3);
            double left_cursor = a, right_cursor = b;
            for (int k = 0; k < pieces; ++k) {
                const double c = unit(rng);
                if (unit(rng) < 0.5) {
                    const double hi = left_cursor - unit(rng);
                    const double lo = hi - 30.0 * unit(rng);
                    left_cursor = lo;
                    arg += c * (std::arg(z - hi) - std::arg(z - lo));
                } else {
                    const double lo = right_cursor + unit(rng);
                    const double hi = lo + 30.0 * unit(rng);
                    right_cursor = hi;
                    arg += c * (std::arg(z - hi) - std::arg(z - lo));
                }
            }
            sup = std::max(sup, arg);
            CHECK(arg <= theta + 1e-9);
        }
        // Wide full-weight supports approach the cone angle.
        const double wide = (std::arg(z - a) - std::arg(z + 1e7)) +
                            (std::arg(z - 1e7) - std::arg(z - b));
        sup = std::max(sup, wide);
        CHECK(wide <= theta + 1e-9);
        CHECK(sup >= theta - 1e-2);
    }
}

TEST_CASE("multi-gap regions") {
    const OrthoSystem sys = two_point_system();

    SUBCASE("single gap reduces to gap_circles with K1 once") {
        const std::vector<std::pair<double, double>> gaps{{-1.0, 1.0}};
        const WeylRegion multi = multi_gap_region(sys, 1, kI, gaps);
        const WeylRegion single = gap_circles(sys, 1, kI, -1.0, 1.0);
        CHECK(multi.kind == RegionKind::multi_gap);
        REQUIRE(multi.circles.size() == 2);
        CHECK(close(multi.circles[0].center, single.circles[0].center, 1e-14));
        CHECK(close(multi.circles[1].center, single.circles[1].center, 1e-14));
        CHECK(multi.vertices.size() == 2);
        CHECK(!multi.intersection_empty);
        CHECK(contains(multi, Complex{0, 0.2}, 1e-9));
    }

    SUBCASE("overlapping gaps are rejected") {
        const std::vector<std::pair<double, double>> gaps{{-1.0, 1.0}, {0.5, 2.0}};
        CHECK_THROWS_AS((void)multi_gap_region(sys, 1, kI, gaps), OverlappingGaps);
    }

    SUBCASE("two disjoint gaps keep a nonempty intersection") {
        const std::vector<std::pair<double, double>> gaps{{-1.0, -0.25}, {0.25, 1.0}};
        const WeylRegion multi = multi_gap_region(sys, 1, kI, gaps);
        REQUIRE(multi.circles.size() == 3);
        CHECK(!multi.intersection_empty);
        // The generating measure is supported outside both gaps.
        CHECK(contains(multi, Complex{0, 0.2}, 1e-9));
    }

    SUBCASE("a gap covering the needed support empties the intersection") {
        const std::vector<std::pair<double, double>> gaps{{-5.0, 5.0}};
        const WeylRegion multi = multi_gap_region(sys, 1, kI, gaps);
        CHECK(multi.intersection_empty);
    }
}

TEST_CASE("contains fixtures") {
    const OrthoSystem sys = gaussian_system(1);
    const WeylRegion disk = hamburger_region(sys, 1, kI);
    CHECK(contains(disk, Complex{0, 0.5}));
    CHECK(!contains(disk, Complex{0, 0}));
}

TEST_CASE("boundary samples satisfy the on-circle property everywhere") {
    const OrthoSystem gsys = orthonormal_system(classical_moments(Gaussian{}, 9), 4);
    const std::vector<WeylRegion> regions{
        hamburger_region(gsys, 2, kI),
        stieltjes_region(gsys, 2, Complex{0.4, 1.1}, -4.0),
        interval_region(gsys, 2, kI, -2.0, 2.0),
        gap_circles(two_point_system(), 1, kI, -1.0, 1.0),
    };
    for (const auto& region : regions) {
        const auto samples = boundary_samples(region, 33);
        CHECK(samples.size() >= 33 * region.arcs.size() - 2);
        for (const auto& sample : samples) {
            const Circle& c = region.circles[region.arcs[sample.arc].circle_index];
            CHECK(std::abs(std::abs(sample.value - c.center) - c.radius) <= 1e-10);
            CHECK(sample.value.imag() >= -1e-10);
        }
    }
    CHECK_THROWS_AS((void)boundary_samples(regions[0], 1), IndexOutOfRange);
}

TEST_CASE("hamburger disk count fixture: three samples on the circle") {
    const OrthoSystem sys = gaussian_system(1);
    const WeylRegion region = hamburger_region(sys, 1, kI);
    const auto samples = boundary_samples(region, 3);
    REQUIRE(samples.size() == 3);
    for (const auto& sample : samples)
        CHECK(std::abs(std::abs(sample.value - region.circles[0].center) -
                       region.circles[0].radius) <= 1e-10);
}

TEST_CASE("stieltjes endpoints reproduce the vertices") {
    const OrthoSystem sys = gaussian_system(1);
    const WeylRegion region = stieltjes_region(sys, 1, kI, -3.0);
    const auto samples = boundary_samples(region, 9);
    int vertex_hits = 0;
    for (const auto& sample : samples)
        for (Complex v : region.vertices)
            if (close(sample.value, v, 1e-9)) ++vertex_hits;
    CHECK(vertex_hits >= 4);  // both endpoints of both arcs
}

TEST_CASE("convergence monitor tracks successive truncations") {
    const OrthoSystem sys = orthonormal_system(classical_moments(Gaussian{}, 9), 4);
    CHECK(!convergence_monitor(sys, 0, kI).has_value());
    const auto info = convergence_monitor(sys, 2, kI);
    REQUIRE(info.has_value());
    CHECK(info->delta_center == doctest::Approx(0.125).epsilon(1e-12));
    CHECK(info->delta_radius == doctest::Approx(0.125).epsilon(1e-12));
}
