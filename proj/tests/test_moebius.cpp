#include <doctest.h>

#include <cmath>
#include <random>

#include "weyl/errors.hpp"
#include "weyl/moebius.hpp"

using namespace weyl;

namespace {

Complex rand_c(std::mt19937& rng) {
    std::uniform_real_distribution<double> box(-2.0, 2.0);
    return Complex{box(rng), box(rng)};
}

MoebiusMap random_nondegenerate(std::mt19937& rng) {
    for (;;) {
        const MoebiusMap map{rand_c(rng), rand_c(rng), rand_c(rng), rand_c(rng)};
        const double scale = std::max({std::abs(map.alpha), std::abs(map.beta),
                                       std::abs(map.gamma), std::abs(map.delta)});
        const Complex d1 = map.gamma * std::conj(map.delta) - map.delta * std::conj(map.gamma);
        const Complex d2 = map.alpha * map.delta - map.beta * map.gamma;
        if (scale > 0 && std::abs(d1) > 1e-3 * scale * scale &&
            std::abs(d2) > 1e-3 * scale * scale)
            return map;
    }
}

}  // namespace

TEST_CASE("w(t) = 1/(t+i) maps R onto the circle around -i/2") {
    const MoebiusImage image = image_of_real_line({0.0, 1.0, 1.0, Complex{0, 1}});
    REQUIRE(image.is_circle());
    CHECK(std::abs(image.circle().center - Complex{0, -0.5}) <= 1e-14);
    CHECK(std::abs(image.circle().radius - 0.5) <= 1e-14);
}

TEST_CASE("degenerate classifications") {
    const MoebiusImage point = image_of_real_line({2.0, 2.0, 1.0, 1.0});
    REQUIRE(point.is_point());
    CHECK(std::abs(point.point() - Complex{2, 0}) <= 1e-14);

    const MoebiusImage line = image_of_real_line({Complex{0, 1}, 0.0, 0.0, 1.0});
    REQUIRE(line.is_line());
    // passes through 0 with direction +-i
    const Complex dir = line.line().direction;
    CHECK(std::abs(dir.real()) <= 1e-14);
    CHECK(std::abs(std::abs(dir.imag()) - 1.0) <= 1e-14);
    const Complex rel = line.line().point;
    CHECK(std::abs(rel.real()) <= 1e-14);

    CHECK_THROWS_AS((void)image_of_real_line({0.0, 0.0, 0.0, 0.0}), DegenerateMap);
    CHECK(image_of_real_line({2.0, 2.0, 1.0, 1.0}).classification_threshold > 0.0);
}

TEST_CASE("eval_map handles finite, infinite, and pole parameters") {
    const MoebiusMap cayley{0.0, 1.0, 1.0, Complex{0, 1}};
    CHECK(std::abs(*eval_map(cayley, 0.0) - Complex{0, -1}) <= 1e-15);
    CHECK(std::abs(*eval_map(cayley, INFINITY)) <= 1e-15);
    CHECK(std::abs(*eval_map({1, 2, 3, 4}, 1.0) - Complex{3.0 / 7.0, 0}) <= 1e-15);
    CHECK(!eval_map({1.0, 0.0, 1.0, 0.0}, 0.0).has_value());
}

TEST_CASE("circle_through fixtures") {
    const Circle unit = circle_through({1, 0}, {0, 1}, {-1, 0});
    CHECK(std::abs(unit.center) <= 1e-14);
    CHECK(unit.radius == doctest::Approx(1.0).epsilon(1e-14));

    const Circle c = circle_through({0, 0}, {1, 0}, {0, 1});
    CHECK(std::abs(c.center - Complex{0.5, 0.5}) <= 1e-14);
    CHECK(c.radius == doctest::Approx(std::sqrt(2.0) / 2.0).epsilon(1e-14));
    // equidistance oracle
    for (Complex p : {Complex{0, 0}, Complex{1, 0}, Complex{0, 1}})
        CHECK(std::abs(p - c.center) == doctest::Approx(c.radius).epsilon(1e-14));

    CHECK_THROWS_AS((void)circle_through({0, 0}, {1, 0}, {2, 0}), CollinearPoints);
}

TEST_CASE("three-point fit agrees with the determinant formulas") {
    std::mt19937 rng(101);
    for (int trial = 0; trial < 100; ++trial) {
        const MoebiusMap map = random_nondegenerate(rng);
        const Circle circle = image_of_real_line(map).circle();

        std::vector<Complex> pts;
        for (double t : {0.0, 1.0, -1.0, 2.0, -2.0, 3.0}) {
            if (auto v = eval_map(map, t)) pts.push_back(*v);
            if (pts.size() == 3) break;
        }
        REQUIRE(pts.size() == 3);
        const Circle fitted = circle_through(pts[0], pts[1], pts[2]);
        CHECK(std::abs(fitted.center - circle.center) <= 1e-10 * (1.0 + std::abs(circle.center)));
        CHECK(std::abs(fitted.radius - circle.radius) <= 1e-10 * (1.0 + circle.radius));
    }
}

TEST_CASE("on-circle property over random parameters including infinity") {
    std::mt19937 rng(103);
    std::uniform_real_distribution<double> unit(0.0, 1.0);
    for (int trial = 0; trial < 100; ++trial) {
        const MoebiusMap map = random_nondegenerate(rng);
        const Circle circle = image_of_real_line(map).circle();
        for (int i = 0; i < 100; ++i) {
            const double t = std::tan(M_PI * (unit(rng) - 0.5));
            if (auto v = eval_map(map, t))
                CHECK(std::abs(std::abs(*v - circle.center) - circle.radius) <=
                      1e-10 * (1.0 + circle.radius));
        }
        if (auto v = eval_map(map, INFINITY))
            CHECK(std::abs(std::abs(*v - circle.center) - circle.radius) <=
                  1e-10 * (1.0 + circle.radius));
    }
}

TEST_CASE("coefficient scaling leaves the image unchanged") {
    std::mt19937 rng(107);
    for (int trial = 0; trial < 50; ++trial) {
        const MoebiusMap map = random_nondegenerate(rng);
        Complex c = rand_c(rng);
        if (std::abs(c) < 0.1) c += Complex{1.0, 1.0};
        const MoebiusMap scaled{c * map.alpha, c * map.beta, c * map.gamma, c * map.delta};
        const Circle a = image_of_real_line(map).circle();
        const Circle b = image_of_real_line(scaled).circle();
        CHECK(std::abs(a.center - b.center) <= 1e-12 * (1.0 + std::abs(a.center)));
        CHECK(std::abs(a.radius - b.radius) <= 1e-12 * (1.0 + a.radius));
    }
}
