#include "weyl/measures.hpp"

#include <algorithm>
#include <cmath>
#include <string>
#include <utility>

#include "weyl/errors.hpp"
#include "weyl/moments.hpp"
#include "weyl/orthopoly.hpp"

namespace weyl {

namespace {

double refine_root(const Polynomial& p, const Polynomial& dp, double lo, double hi) {
    double flo = p(lo);
    if (flo == 0.0) return lo;
    if (p(hi) == 0.0) return hi;
    double mid = 0.5 * (lo + hi);
    for (int iter = 0; iter < 80 && hi - lo > 1e-16 * (1.0 + std::abs(mid)); ++iter) {
        mid = 0.5 * (lo + hi);
        const double fm = p(mid);
        if (fm == 0.0) return mid;
        if ((flo < 0.0) == (fm < 0.0)) {
            lo = mid;
            flo = fm;
        } else {
            hi = mid;
        }
    }
    // Newton polish inside the final bracket.
    double x = mid;
    for (int iter = 0; iter < 4; ++iter) {
        const double d = dp(x);
        if (d == 0.0) break;
        const double next = x - p(x) / d;
        if (next < lo || next > hi) break;
        x = next;
    }
    return x;
}

double poly_scale_at(const Polynomial& p, double x) {
    double scale = 0.0, pw = 1.0;
    const double ax = std::abs(x);
    for (double c : p.coeffs()) {
        scale += std::abs(c) * pw;
        pw *= ax;
    }
    return scale;
}

/// All roots of a polynomial known to have exactly `expected` real simple
/// roots inside (lo, hi): bracketing grid, bisection, Newton polish.
std::vector<double> real_simple_roots(const Polynomial& p, double lo, double hi, int expected) {
    const Polynomial dp = p.derivative();
    for (int grid = 64 * expected; grid <= 65536 * expected; grid *= 4) {
        std::vector<std::pair<double, double>> brackets;
        double x0 = lo, f0 = p(x0);
        for (int i = 1; i <= grid; ++i) {
            const double x1 = lo + (hi - lo) * static_cast<double>(i) / grid;
            const double f1 = p(x1);
            if (f1 == 0.0) {
                brackets.emplace_back(x1, x1);
            } else if (f0 != 0.0 && (f0 < 0.0) != (f1 < 0.0)) {
                brackets.emplace_back(x0, x1);
            }
            x0 = x1;
            f0 = f1;
        }
        if (static_cast<int>(brackets.size()) != expected) continue;

        std::vector<double> roots;
        roots.reserve(brackets.size());
        for (const auto& [blo, bhi] : brackets)
            roots.push_back(blo == bhi ? blo : refine_root(p, dp, blo, bhi));
        std::sort(roots.begin(), roots.end());

        bool ok = true;
        for (double r : roots)
            if (std::abs(p(r)) > 1e-13 * std::max(1.0, poly_scale_at(p, r))) ok = false;
        for (std::size_t i = 1; i < roots.size(); ++i)
            if (roots[i] <= roots[i - 1]) ok = false;
        if (ok) return roots;
    }
    throw RootFindingFailed("could not isolate " + std::to_string(expected) +
                            " simple real roots");
}

/// Gershgorin enclosure of the Jacobi-matrix spectrum for rows 0..dim-1,
/// with an optional shift added to the last diagonal entry.
std::pair<double, double> root_bounds(const OrthoSystem& sys, int dim, double last_shift) {
    double lo = 0.0, hi = 0.0;
    for (int k = 0; k < dim; ++k) {
        const double center =
            sys.b[static_cast<std::size_t>(k)] + (k == dim - 1 ? last_shift : 0.0);
        double radius = 0.0;
        if (k > 0) radius += sys.a[static_cast<std::size_t>(k - 1)];
        if (k < dim - 1) radius += sys.a[static_cast<std::size_t>(k)];
        lo = k == 0 ? center - radius : std::min(lo, center - radius);
        hi = k == 0 ? center + radius : std::max(hi, center + radius);
    }
    const double margin = 0.5 + 0.01 * (hi - lo);
    return {lo - margin, hi + margin};
}

/// Weights making the rule at the given nodes exact on degree < node count:
/// w_k = L_s(lagrange_k). This is the Vandermonde moment system solved in
/// its Lagrange form.
std::vector<double> moment_weights(const MomentSequence& s, const std::vector<double>& nodes) {
    std::vector<double> weights(nodes.size());
    for (std::size_t k = 0; k < nodes.size(); ++k) {
        Polynomial numerator({1.0});
        double denominator = 1.0;
        for (std::size_t j = 0; j < nodes.size(); ++j) {
            if (j == k) continue;
            numerator = numerator * Polynomial({-nodes[j], 1.0});
            denominator *= nodes[k] - nodes[j];
        }
        weights[k] = apply_functional(s, numerator) / denominator;
    }
    return weights;
}

DiscreteMeasure assemble_rule(const OrthoSystem& sys, const std::vector<double>& nodes,
                              int matched_count) {
    DiscreteMeasure mu;
    mu.atoms.reserve(nodes.size());
    const auto weights = moment_weights(sys.s, nodes);
    for (std::size_t k = 0; k < nodes.size(); ++k) {
        if (!(weights[k] > 0.0))
            throw RootFindingFailed("quadrature weight " + std::to_string(weights[k]) +
                                    " is not positive");
        mu.atoms.push_back({nodes[k], weights[k]});
    }

    const MomentSequence reproduced = moments_of(mu, matched_count);
    for (int j = 0; j < matched_count; ++j) {
        const double target = sys.s.values[static_cast<std::size_t>(j)];
        if (std::abs(reproduced.values[static_cast<std::size_t>(j)] - target) >
            1e-9 * (1.0 + std::abs(target)))
            throw RootFindingFailed("moment reproduction residual above tolerance at index " +
                                    std::to_string(j));
    }
    return mu;
}

}  // namespace

double DiscreteMeasure::total_mass() const noexcept {
    double m = 0.0;
    for (const auto& atom : atoms) m += atom.w;
    return m;
}

TransformValue stieltjes_transform(const DiscreteMeasure& mu, Complex z) {
    if (mu.atoms.empty()) throw EmptySequence("measure has no atoms");
    Complex acc = 0.0;
    for (const auto& atom : mu.atoms) {
        const Complex den = atom.x - z;
        if (std::abs(den) <= 1e-14 * (1.0 + std::abs(atom.x)))
            throw PoleAtAtom("z coincides with the atom at " + std::to_string(atom.x));
        acc += atom.w / den;
    }
    return TransformValue{acc, z};
}

DiscreteMeasure gauss_quadrature(const OrthoSystem& sys, int n) {
    if (n < 1 || n > sys.max_order())
        throw IndexOutOfRange("gauss_quadrature order " + std::to_string(n) +
                              " outside 1.." + std::to_string(sys.max_order()));
    const auto [lo, hi] = root_bounds(sys, n, 0.0);
    const auto nodes = real_simple_roots(sys.P[static_cast<std::size_t>(n)], lo, hi, n);
    return assemble_rule(sys, nodes, 2 * n);
}

DiscreteMeasure canonical_measure(const OrthoSystem& sys, int n, double c) {
    if (n < 0 || n + 1 > sys.max_order())
        throw IndexOutOfRange("canonical_measure needs system order " + std::to_string(n + 1));
    const Polynomial quasi =
        sys.P[static_cast<std::size_t>(n + 1)] - c * sys.P[static_cast<std::size_t>(n)];
    // Roots are the eigenvalues of the Jacobi matrix with b_n shifted by c*a_n.
    const auto [lo, hi] = root_bounds(sys, n + 1, c * sys.a[static_cast<std::size_t>(n)]);
    const auto nodes = real_simple_roots(quasi, lo, hi, n + 1);
    return assemble_rule(sys, nodes, 2 * n + 1);
}

DiscreteMeasure mix(const DiscreteMeasure& mu1, const DiscreteMeasure& mu2, double lambda) {
    if (!(lambda >= 0.0 && lambda <= 1.0)) throw BadInterval("mix requires lambda in [0, 1]");
    if (lambda == 0.0) return mu2;
    if (lambda == 1.0) return mu1;

    std::vector<Atom> combined;
    combined.reserve(mu1.atoms.size() + mu2.atoms.size());
    for (const auto& atom : mu1.atoms) combined.push_back({atom.x, lambda * atom.w});
    for (const auto& atom : mu2.atoms) combined.push_back({atom.x, (1.0 - lambda) * atom.w});
    std::sort(combined.begin(), combined.end(),
              [](const Atom& p, const Atom& q) { return p.x < q.x; });

    DiscreteMeasure out;
    for (const auto& atom : combined) {
        if (!out.atoms.empty() &&
            std::abs(atom.x - out.atoms.back().x) <= 1e-14 * (1.0 + std::abs(atom.x)))
            out.atoms.back().w += atom.w;
        else
            out.atoms.push_back(atom);
    }
    return out;
}

}  // namespace weyl
