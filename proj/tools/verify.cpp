#include "verify.hpp"

#include <algorithm>
#include <cmath>
#include <random>
#include <vector>

#include <json.hpp>

#include "weyl/errors.hpp"
#include "weyl/json_io.hpp"
#include "weyl/kernels.hpp"
#include "weyl/measures.hpp"
#include "weyl/moebius.hpp"
#include "weyl/region.hpp"

namespace weyl::cli {

namespace {

using nlohmann::json;

double rel_err(Complex got, Complex want) {
    return std::abs(got - want) / (1.0 + std::abs(want));
}

double rel_err(double got, double want) {
    return std::abs(got - want) / (1.0 + std::abs(want));
}

}  // namespace

bool run_verify(const MomentSequence& s, std::uint64_t seed, double tol, std::ostream& out) {
    std::mt19937_64 rng(seed);
    std::uniform_real_distribution<double> box(-2.0, 2.0);
    std::uniform_real_distribution<double> unit(0.0, 1.0);
    auto random_complex = [&] { return Complex{box(rng), box(rng)}; };

    const auto positivity = check_positivity(s, AllOfR{});
    if (positivity.max_pd_order < 1)
        throw NotPositiveDefinite("verification needs positive definiteness through order 1");
    const int order = std::min(positivity.max_pd_order, 4);
    const OrthoSystem sys = orthonormal_system(s, order);

    json report;
    report["seed"] = seed;
    report["tolerance"] = tol;
    report["order"] = order;
    bool all_pass = true;

    // Kernel relation identities at seeded random quadruples.
    {
        std::vector<Quadruple> quads(100);
        for (auto& q : quads)
            q = {random_complex(), random_complex(), random_complex(), random_complex()};
        const RelationReport relations = relation_residuals(sys, order, quads);
        double worst = 0.0;
        for (const auto& entry : relations.entries) worst = std::max(worst, entry.max_residual);
        const bool pass = worst <= tol;
        all_pass = all_pass && pass;
        report["relations"] = json::parse(to_json(relations));
        report["relations_pass"] = pass;
    }

    // Sum form versus determinant form.
    {
        double worst = 0.0;
        for (int i = 0; i < 100; ++i) {
            const Complex z = random_complex(), w = random_complex();
            for (KernelKind kind :
                 {KernelKind::A, KernelKind::B, KernelKind::C, KernelKind::D})
                worst = std::max(worst, rel_err(kernel_det(sys, kind, order - 1, z, w),
                                                kernel(sys, kind, order - 1, z, w)));
        }
        const bool pass = worst <= tol;
        all_pass = all_pass && pass;
        report["kernel_forms"] = {{"max_residual", worst}, {"pass", pass}};
    }

    // Double-determinant identity (system independent, exact algebra).
    {
        double worst = 0.0;
        for (int i = 0; i < 100; ++i) {
            const auto [lhs, rhs] =
                double_det(random_complex(), random_complex(), random_complex(),
                           random_complex(), random_complex(), random_complex(),
                           random_complex(), random_complex());
            worst = std::max(worst, rel_err(lhs, rhs));
        }
        const bool pass = worst <= 1e-12;
        all_pass = all_pass && pass;
        report["double_det"] = {{"max_residual", worst}, {"pass", pass}};
    }

    // Moebius circle oracle: closed form against the three-point fit and
    // the on-circle property, plus the exact 1/(t+i) fixture.
    {
        double worst_center = 0.0, worst_radius = 0.0, worst_on_circle = 0.0;
        int tested = 0;
        while (tested < 100) {
            const MoebiusMap map{random_complex(), random_complex(), random_complex(),
                                 random_complex()};
            double scale = std::max({std::abs(map.alpha), std::abs(map.beta),
                                     std::abs(map.gamma), std::abs(map.delta)});
            const Complex d1 = map.gamma * std::conj(map.delta) -
                               map.delta * std::conj(map.gamma);
            const Complex d2 = map.alpha * map.delta - map.beta * map.gamma;
            if (scale == 0.0 || std::abs(d1) < 1e-3 * scale * scale ||
                std::abs(d2) < 1e-3 * scale * scale)
                continue;
            ++tested;

            const Circle circle = image_of_real_line(map).circle();
            std::vector<Complex> pts;
            for (double t : {0.0, 1.0, -1.0, 2.0, -2.0, 3.0}) {
                if (auto v = eval_map(map, t)) pts.push_back(*v);
                if (pts.size() == 3) break;
            }
            const Circle fitted = circle_through(pts[0], pts[1], pts[2]);
            worst_center = std::max(worst_center, rel_err(fitted.center, circle.center));
            worst_radius = std::max(worst_radius, rel_err(fitted.radius, circle.radius));

            for (int i = 0; i < 100; ++i) {
                const double t = std::tan(M_PI * (unit(rng) - 0.5));
                if (auto v = eval_map(map, t))
                    worst_on_circle = std::max(
                        worst_on_circle, rel_err(std::abs(*v - circle.center), circle.radius));
            }
        }

        const Circle fixture = image_of_real_line(MoebiusMap{0.0, 1.0, 1.0, Complex{0.0, 1.0}})
                                   .circle();
        const double fixture_err = std::max(std::abs(fixture.center - Complex{0.0, -0.5}),
                                            std::abs(fixture.radius - 0.5));

        const bool pass = worst_center <= 1e-10 && worst_radius <= 1e-10 &&
                          worst_on_circle <= 1e-10 && fixture_err <= 1e-14;
        all_pass = all_pass && pass;
        report["moebius"] = {{"max_center_err", worst_center},
                             {"max_radius_err", worst_radius},
                             {"max_on_circle_err", worst_on_circle},
                             {"fixture_err", fixture_err},
                             {"pass", pass}};
    }

    // Membership: mixtures of canonical solutions stay inside the disk;
    // the Gauss transform sits on the boundary.
    {
        const int n = order - 1;
        const Complex z{0.3, 1.0};
        const Circle disk = hamburger_disk(sys, n, z);

        int violations = 0, checked = 0;
        for (double c : {0.0, 1.0, -1.0, 0.5}) {
            const DiscreteMeasure base = canonical_measure(sys, n, c);
            for (int i = 0; i < 10; ++i) {
                const DiscreteMeasure mixture =
                    mix(base, canonical_measure(sys, n, -2.0 + i * 0.4), unit(rng));
                const Complex value = stieltjes_transform(mixture, z).value;
                ++checked;
                if (std::abs(value - disk.center) > disk.radius + 1e-8 * (1.0 + std::abs(value)))
                    ++violations;
            }
        }
        const Complex gauss_value =
            stieltjes_transform(gauss_quadrature(sys, std::max(1, n)), z).value;
        const Circle gauss_disk = hamburger_disk(sys, std::max(1, n), z);
        const double boundary_err =
            rel_err(std::abs(gauss_value - gauss_disk.center), gauss_disk.radius);

        const bool pass = violations == 0 && boundary_err <= 1e-9;
        all_pass = all_pass && pass;
        report["membership"] = {{"checked", checked},
                                {"violations", violations},
                                {"gauss_boundary_err", boundary_err},
                                {"pass", pass}};
    }

    report["pass"] = all_pass;
    out << report.dump() << '\n';
    return all_pass;
}

}  // namespace weyl::cli
