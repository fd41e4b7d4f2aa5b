#include "weyl/region.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <random>
#include <sstream>
#include <string>

#include "weyl/errors.hpp"

namespace weyl {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

void require_upper_half(Complex z) {
    if (!(z.imag() > 1e-12 * (1.0 + std::abs(z))))
        throw RealAxisZ("z must lie in the open upper half-plane");
}

void require_certified(const OrthoSystem& sys, int n) {
    if (n < 0 || n > sys.max_order())
        throw NotCertified("order " + std::to_string(n) + " outside the certified range 0.." +
                           std::to_string(sys.max_order()));
}

Complex det2(Complex a, Complex b, Complex c, Complex d) { return a * d - b * c; }

Complex det3(const Complex m[3][3]) {
    return m[0][0] * det2(m[1][1], m[1][2], m[2][1], m[2][2]) -
           m[0][1] * det2(m[1][0], m[1][2], m[2][0], m[2][2]) +
           m[0][2] * det2(m[1][0], m[1][1], m[2][0], m[2][1]);
}

struct KernelsAt {
    Complex A, B, C, D;
};

KernelsAt kernels_at(const OrthoSystem& sys, int n, Complex z, Complex w) {
    return {kernel(sys, KernelKind::A, n, z, w), kernel(sys, KernelKind::B, n, z, w),
            kernel(sys, KernelKind::C, n, z, w), kernel(sys, KernelKind::D, n, z, w)};
}

/// Circle carrying the image of R; a constant map yields a zero-radius
/// circle, a line image is rejected (the region would be unbounded).
Circle expect_bounded(const MoebiusMap& map, const char* what) {
    const MoebiusImage image = image_of_real_line(map);
    if (image.is_circle()) return image.circle();
    if (image.is_point()) return Circle{image.point(), 0.0};
    throw DegenerateMap(std::string(what) + " degenerates to a line");
}

bool in_disk(const Circle& c, Complex w, double tol) {
    return std::abs(w - c.center) <= c.radius + tol;
}

/// Central-difference tangent of the parametrization at t (step per the
/// vertex-angle convention).
Complex arc_tangent(const MoebiusMap& map, double t) {
    const double h = 1e-6;
    const auto p = eval_map(map, t + h);
    const auto m = eval_map(map, t - h);
    if (!p || !m) return Complex{0.0};
    return (*p - *m) / (2.0 * h);
}

/// |arg(t2/t1)| folded into [0, pi]; 0 when either tangent vanishes.
double tangent_angle(Complex t1, Complex t2) {
    if (std::abs(t1) == 0.0 || std::abs(t2) == 0.0) return 0.0;
    return std::abs(std::arg(t2 / t1));
}

bool region_membership(const std::vector<Circle>& circles, Complex w, double tol) {
    for (const auto& c : circles)
        if (!in_disk(c, w, tol)) return false;
    return true;
}

void record_violation(WeylRegion& region, Complex w, const char* label) {
    if (region.diagnostics.size() >= 5) return;
    std::ostringstream os;
    os << label << " sample (" << w.real() << "," << w.imag()
       << ") escapes the disk intersection";
    region.diagnostics.push_back(os.str());
}

/// Empirical check of the disk-intersection membership model against
/// parameter-sampled solution values; discrepancies become diagnostics.
template <typename Sampler>
void validate_membership(WeylRegion& region, const char* label, int count, Sampler&& sample) {
    std::mt19937 rng(12345);
    std::uniform_real_distribution<double> unit(0.0, 1.0);
    for (int i = 0; i < count; ++i) {
        const std::optional<Complex> w = sample(unit(rng), unit(rng));
        if (!w) continue;
        if (!region_membership(region.circles, *w, 1e-7 * (1.0 + std::abs(*w))))
            record_violation(region, *w, label);
    }
}

void detect_degenerate(WeylRegion& region) {
    if (region.vertices.size() != 2) return;
    const Complex v0 = region.vertices[0], v1 = region.vertices[1];
    if (std::abs(v0 - v1) <= 1e-10 * (1.0 + std::abs(v0))) {
        region.degenerate = true;
        region.vertex_angle.reset();
    }
}

/// Scale-relative guard for the denominator determinant of the closed-form
/// circle data; mirrors the moebius classification threshold.
void require_denominator(Complex den, std::initializer_list<Complex> tuple, const char* what) {
    double scale = 0.0;
    for (Complex c : tuple) scale = std::max(scale, std::abs(c));
    if (std::abs(den) <= 1e-13 * scale * scale)
        throw DegenerateMap(std::string(what) + " degenerates to a line");
}

/// The full real parameter line covers both sub-arcs between the t = 0 and
/// t = infinity vertices; the lens boundary arc is the one staying inside
/// the other disk. Probes t = +-1 and returns the matching range.
std::pair<double, double> select_subarc(const MoebiusMap& map, const Circle& other) {
    const auto inside = [&](double t) {
        const auto w = eval_map(map, t);
        return w && in_disk(other, *w, 1e-7 * (1.0 + std::abs(*w)));
    };
    if (inside(1.0)) return {0.0, kInf};
    if (inside(-1.0)) return {-kInf, 0.0};
    return {0.0, kInf};
}

}  // namespace

const char* to_string(RegionKind kind) noexcept {
    switch (kind) {
        case RegionKind::hamburger_disk: return "hamburger_disk";
        case RegionKind::stieltjes_lens: return "stieltjes_lens";
        case RegionKind::interval_lens_even: return "interval_lens_even";
        case RegionKind::interval_lens_odd: return "interval_lens_odd";
        case RegionKind::gap_lens: return "gap_lens";
        case RegionKind::multi_gap: return "multi_gap";
    }
    return "unknown";
}

Circle hamburger_disk(const OrthoSystem& sys, int n, Complex z) {
    require_upper_half(z);
    require_certified(sys, n);
    const Complex c = kernel(sys, KernelKind::C, n, z, std::conj(z));
    const Complex d = kernel(sys, KernelKind::D, n, z, std::conj(z));
    return Circle{-c / d, 1.0 / std::abs(d)};
}

std::optional<ConvergenceInfo> convergence_monitor(const OrthoSystem& sys, int n, Complex z) {
    if (n < 1) return std::nullopt;
    const Circle cur = hamburger_disk(sys, n, z);
    const Circle prev = hamburger_disk(sys, n - 1, z);
    return ConvergenceInfo{std::abs(cur.center - prev.center),
                           std::abs(cur.radius - prev.radius)};
}

WeylRegion hamburger_region(const OrthoSystem& sys, int n, Complex z) {
    WeylRegion region;
    region.kind = RegionKind::hamburger_disk;
    region.order = n;
    region.circles.push_back(hamburger_disk(sys, n, z));

    MoebiusMap arc;
    if (n + 1 <= sys.max_order()) {
        // w_n(t) = -(Q_n(z) t - Q_{n+1}(z)) / (P_n(z) t - P_{n+1}(z));
        // t = infinity is the n-point Gauss transform -Q_n(z)/P_n(z).
        const auto k = static_cast<std::size_t>(n);
        arc = MoebiusMap{-sys.Q[k](z), sys.Q[k + 1](z), sys.P[k](z), -sys.P[k + 1](z)};
    } else {
        // Base-point form: the same circle for every real base (here 0).
        const auto k = kernels_at(sys, n, z, Complex{0.0});
        arc = MoebiusMap{-k.C, -k.A, k.D, k.B};
    }
    region.arcs.push_back({arc, -kInf, kInf, 0});
    region.convergence = convergence_monitor(sys, n, z);
    return region;
}

WeylRegion stieltjes_region(const OrthoSystem& sys, int n, Complex z, double a) {
    require_upper_half(z);
    require_certified(sys, n);
    if (!std::isfinite(a)) throw NonFiniteInput("half-line endpoint must be finite");

    if (n >= 1) {
        const auto report = check_positivity(sys.s, HalfLine{a});
        if (report.shifted.front().max_pd_order < n - 1)
            throw NotCertified("half-line positivity certified only to order " +
                               std::to_string(report.shifted.front().max_pd_order) +
                               ", order " + std::to_string(n) + " needs " +
                               std::to_string(n - 1));
    }

    double t_a = 0.0;
    try {
        t_a = truncated_t(sys, n, Complex{a}).real();
    } catch (const PoleAtZ&) {
        throw PoleAtA("P_n vanishes at the half-line endpoint a");
    }

    const auto k = kernels_at(sys, n, z, Complex{a});
    const Complex az = Complex{a} - z;

    WeylRegion region;
    region.kind = RegionKind::stieltjes_lens;
    region.order = n;

    const MoebiusMap w1{-k.C, -k.A, k.D, k.B};
    const MoebiusMap w2{-k.C, -az * (k.A + t_a * k.C), k.D, az * (k.B + t_a * k.D)};
    region.circles.push_back(expect_bounded(w1, "Stieltjes circle K1"));
    region.circles.push_back(expect_bounded(w2, "Stieltjes circle K2"));
    region.arcs.push_back({w1, t_a, kInf, 0});
    region.arcs.push_back({w2, 0.0, kInf, 1});

    region.vertices.push_back(-k.C / k.D);          // t = infinity on both arcs
    region.vertices.push_back(truncated_t(sys, n, z));  // w1(t_a) = w2(0)
    region.vertex_angle = std::arg(1.0 / az);
    region.convergence = convergence_monitor(sys, n, z);
    detect_degenerate(region);

    // Pick-parameter sampling (beta >= t_a, gamma >= 0) must stay inside.
    validate_membership(region, "stieltjes", 200, [&](double u1, double u2) {
        const double beta = t_a + u1 / (1.0 - u1 + 1e-300);
        const double gamma = u2 / (1.0 - u2 + 1e-300);
        const Complex tau = beta + gamma / az;
        return std::optional<Complex>{-(k.C * tau + k.A) / (k.D * tau + k.B)};
    });
    return region;
}

WeylRegion interval_region(const OrthoSystem& sys, int m, Complex z, double a, double b) {
    require_upper_half(z);
    if (!(a < b)) throw BadInterval("interval requires a < b");
    if (m < 0) throw IndexOutOfRange("truncation index m must be >= 0");

    const int n = m / 2;
    const bool even = m % 2 == 0;
    require_certified(sys, even ? n : n + 2);
    const double sgn = n % 2 == 0 ? 1.0 : -1.0;  // (-1)^n

    WeylRegion region;
    region.kind = even ? RegionKind::interval_lens_even : RegionKind::interval_lens_odd;
    region.order = m;

    if (even) {
        const Complex ca = kernel(sys, KernelKind::C, n, z, Complex{a});
        const Complex cb = kernel(sys, KernelKind::C, n, z, Complex{b});
        const Complex da = kernel(sys, KernelKind::D, n, z, Complex{a});
        const Complex db = kernel(sys, KernelKind::D, n, z, Complex{b});
        const Complex zc = std::conj(z);
        const Complex dca = kernel(sys, KernelKind::D, n, zc, Complex{a});
        const Complex dcb = kernel(sys, KernelKind::D, n, zc, Complex{b});
        const Complex dab = kernel(sys, KernelKind::D, n, Complex{a}, Complex{b});

        region.circles.push_back(hamburger_disk(sys, n, z));

        const Complex num = det2((z - b) * ca, (z - a) * cb, (zc - b) * dca, (zc - a) * dcb);
        const Complex den = det2((z - b) * da, (z - a) * db, (zc - b) * dca, (zc - a) * dcb);
        require_denominator(den, {(z - b) * da, (z - a) * db, (zc - b) * dca, (zc - a) * dcb},
                            "interval restriction circle");
        region.circles.push_back(Circle{-num / den, std::abs((z - a) * (z - b) * dab / den)});

        const MoebiusMap w1{-sgn * ca, -cb, sgn * da, db};
        const MoebiusMap w2{-sgn * (z - b) * ca, -(z - a) * cb, sgn * (z - b) * da,
                            (z - a) * db};
        const auto [lo1, hi1] = select_subarc(w1, region.circles[1]);
        const auto [lo2, hi2] = select_subarc(w2, region.circles[0]);
        region.arcs.push_back({w1, lo1, hi1, 0});
        region.arcs.push_back({w2, lo2, hi2, 1});
        region.vertices.push_back(-cb / db);  // t = 0
        region.vertices.push_back(-ca / da);  // t = infinity
    } else {
        const auto kq = [&](int j, Complex at) { return sys.Q[static_cast<std::size_t>(j)](at); };
        const auto kp = [&](int j, Complex at) { return sys.P[static_cast<std::size_t>(j)](at); };
        const Complex A{a}, B{b};

        const Complex mq[3][3] = {{kq(n + 2, z), kq(n + 1, z), kq(n, z)},
                                  {kp(n + 2, A), kp(n + 1, A), kp(n, A)},
                                  {kp(n + 2, B), kp(n + 1, B), kp(n, B)}};
        const Complex mp[3][3] = {{kp(n + 2, z), kp(n + 1, z), kp(n, z)},
                                  {kp(n + 2, A), kp(n + 1, A), kp(n, A)},
                                  {kp(n + 2, B), kp(n + 1, B), kp(n, B)}};
        const Complex gq = det3(mq);
        const Complex gp = det3(mp);
        const Complex qn1 = kq(n + 1, z), pn1 = kp(n + 1, z);

        const MoebiusMap w3{-sgn * gq, -(z - a) * qn1, sgn * gp, (z - a) * pn1};
        const MoebiusMap w4{-sgn * gq, -(z - b) * qn1, sgn * gp, (z - b) * pn1};
        region.circles.push_back(expect_bounded(w3, "interval circle K1 (odd)"));
        region.circles.push_back(expect_bounded(w4, "interval circle K2 (odd)"));
        const auto [lo3, hi3] = select_subarc(w3, region.circles[1]);
        const auto [lo4, hi4] = select_subarc(w4, region.circles[0]);
        region.arcs.push_back({w3, lo3, hi3, 0});
        region.arcs.push_back({w4, lo4, hi4, 1});

        region.vertices.push_back(-qn1 / pn1);  // t = 0 on both arcs
        const double gp_scale = std::max({std::abs(mp[0][0]), std::abs(mp[0][1]),
                                          std::abs(mp[0][2]), std::abs(mp[1][0]),
                                          std::abs(mp[2][0])});
        if (std::abs(gp) <= 1e-13 * gp_scale * gp_scale) {
            // Both 3x3 determinants vanish together only in the collapsed
            // case; reuse the finite vertex.
            region.vertices.push_back(-qn1 / pn1);
        } else {
            region.vertices.push_back(-gq / gp);  // t = infinity
        }
    }

    // No closed-form vertex angle is stated for [a, b]; report the numeric
    // tangent angle at the shared t = 0 vertex, with tangents oriented into
    // each arc.
    const auto tangent_into = [](const BoundaryArc& arc) {
        const Complex d = arc_tangent(arc.map, 0.0);
        return arc.t_lo == 0.0 ? d : -d;
    };
    const double angle =
        tangent_angle(tangent_into(region.arcs[0]), tangent_into(region.arcs[1]));
    if (angle > 0.0) region.vertex_angle = angle;
    region.convergence = convergence_monitor(sys, n, z);
    detect_degenerate(region);

    // Boundary arcs must lie inside both closed disks.
    validate_membership(region, "interval", 100,
                        [&](double u1, double u2) -> std::optional<Complex> {
                            const BoundaryArc& arc = region.arcs[u2 < 0.5 ? 0 : 1];
                            const double magnitude = u1 / (1.0 - u1 + 1e-300);
                            return eval_map(arc.map,
                                            arc.t_lo == 0.0 ? magnitude : -magnitude);
                        });
    return region;
}

namespace {

WeylRegion single_gap_region(const OrthoSystem& sys, int n, Complex z, double a, double b) {
    const Complex zc = std::conj(z);
    const Complex ca = kernel(sys, KernelKind::C, n, z, Complex{a});
    const Complex cb = kernel(sys, KernelKind::C, n, z, Complex{b});
    const Complex da = kernel(sys, KernelKind::D, n, z, Complex{a});
    const Complex db = kernel(sys, KernelKind::D, n, z, Complex{b});
    const Complex dca = kernel(sys, KernelKind::D, n, zc, Complex{a});
    const Complex dcb = kernel(sys, KernelKind::D, n, zc, Complex{b});
    const Complex dab = kernel(sys, KernelKind::D, n, Complex{a}, Complex{b});

    WeylRegion region;
    region.kind = RegionKind::gap_lens;
    region.order = n;
    region.circles.push_back(hamburger_disk(sys, n, z));

    const Complex num = det2((z - a) * ca, (z - b) * cb, (zc - a) * dca, (zc - b) * dcb);
    const Complex den = det2((z - a) * da, (z - b) * db, (zc - a) * dca, (zc - b) * dcb);
    require_denominator(den, {(z - a) * da, (z - b) * db, (zc - a) * dca, (zc - b) * dcb},
                        "gap restriction circle");
    region.circles.push_back(Circle{-num / den, std::abs((z - a) * (z - b) * dab / den)});

    // Real-ray arc of the value cone (on K1) and the rotated-ray arc (on K2).
    const MoebiusMap w1{-ca, cb, da, -db};
    const MoebiusMap w2{-(z - a) * ca, -(z - b) * cb, (z - a) * da, (z - b) * db};
    const auto [lo1, hi1] = select_subarc(w1, region.circles[1]);
    const auto [lo2, hi2] = select_subarc(w2, region.circles[0]);
    region.arcs.push_back({w1, lo1, hi1, 0});
    region.arcs.push_back({w2, lo2, hi2, 1});

    region.vertices.push_back(-cb / db);  // t = 0
    region.vertices.push_back(-ca / da);  // t = infinity
    region.vertex_angle = cone_angle(z, a, b);
    region.convergence = convergence_monitor(sys, n, z);
    detect_degenerate(region);

    // Solution values correspond to the conjugate ray set of the cone,
    // tau = rho * exp(-i*phi) with phi in [0, cone angle].
    const double theta = cone_angle(z, a, b);
    validate_membership(region, "gap", 200, [&](double u1, double u2) {
        const double rho = u1 / (1.0 - u1 + 1e-300);
        const Complex tau = rho * std::exp(Complex{0.0, -theta * u2});
        return std::optional<Complex>{-(ca * tau - cb) / (da * tau - db)};
    });
    return region;
}

}  // namespace

WeylRegion gap_circles(const OrthoSystem& sys, int n, Complex z, double a, double b) {
    require_upper_half(z);
    if (!(a < b)) throw BadInterval("gap requires a < b");
    require_certified(sys, n);
    return single_gap_region(sys, n, z, a, b);
}

WeylRegion multi_gap_region(const OrthoSystem& sys, int n, Complex z,
                            std::span<const std::pair<double, double>> gaps) {
    require_upper_half(z);
    require_certified(sys, n);
    if (gaps.empty()) throw BadInterval("at least one gap is required");
    for (const auto& [a, b] : gaps)
        if (!(a < b)) throw BadInterval("every gap requires a < b");
    for (std::size_t i = 1; i < gaps.size(); ++i)
        if (!(gaps[i - 1].second < gaps[i].first))
            throw OverlappingGaps("gaps must be ordered and pairwise disjoint");

    WeylRegion region;
    region.kind = RegionKind::multi_gap;
    region.order = n;
    region.circles.push_back(hamburger_disk(sys, n, z));

    for (const auto& [a, b] : gaps) {
        WeylRegion single = single_gap_region(sys, n, z, a, b);
        const std::size_t k2_index = region.circles.size();
        region.circles.push_back(single.circles[1]);
        single.arcs[0].circle_index = 0;
        single.arcs[1].circle_index = k2_index;
        region.arcs.push_back(single.arcs[0]);
        region.arcs.push_back(single.arcs[1]);
        for (auto& note : single.diagnostics) region.diagnostics.push_back(std::move(note));
        if (gaps.size() == 1) {
            region.vertices = single.vertices;
            region.vertex_angle = single.vertex_angle;
            region.degenerate = single.degenerate;
        }
    }
    region.convergence = convergence_monitor(sys, n, z);

    // Nonemptiness of the disk intersection: some center or pairwise
    // boundary intersection point must lie in every disk.
    std::vector<Complex> candidates;
    double scale = 0.0;
    for (const auto& c : region.circles) {
        candidates.push_back(c.center);
        scale = std::max(scale, std::abs(c.center) + c.radius);
    }
    for (std::size_t i = 0; i < region.circles.size(); ++i) {
        for (std::size_t j = i + 1; j < region.circles.size(); ++j) {
            const Circle &ci = region.circles[i], &cj = region.circles[j];
            const Complex delta = cj.center - ci.center;
            const double d = std::abs(delta);
            if (d == 0.0) continue;
            const double ell = (d * d + ci.radius * ci.radius - cj.radius * cj.radius) / (2.0 * d);
            const double h2 = ci.radius * ci.radius - ell * ell;
            if (h2 < -1e-12 * scale * scale) continue;
            const Complex base = ci.center + ell * delta / d;
            const double h = std::sqrt(std::max(0.0, h2));
            const Complex offset = Complex{0.0, 1.0} * delta / d * h;
            candidates.push_back(base + offset);
            candidates.push_back(base - offset);
        }
    }
    const double tol = 1e-9 * (1.0 + scale);
    region.intersection_empty = true;
    for (Complex p : candidates) {
        if (region_membership(region.circles, p, tol)) {
            region.intersection_empty = false;
            break;
        }
    }
    return region;
}

bool contains(const WeylRegion& region, Complex w, double tol) {
    return region_membership(region.circles, w, tol * (1.0 + std::abs(w)));
}

double cone_angle(Complex z, double a, double b) {
    require_upper_half(z);
    if (!(a < b)) throw BadInterval("cone_angle requires a < b");
    return std::arg(-(z - a) / (z - b));
}

std::vector<BoundarySample> boundary_samples(const WeylRegion& region, int count) {
    if (count < 2) throw IndexOutOfRange("boundary_samples requires count >= 2");

    std::vector<BoundarySample> out;
    out.reserve(region.arcs.size() * static_cast<std::size_t>(count));
    for (std::size_t arc_index = 0; arc_index < region.arcs.size(); ++arc_index) {
        const BoundaryArc& arc = region.arcs[arc_index];
        for (int i = 0; i < count; ++i) {
            double u = static_cast<double>(i) / (count - 1);
            double t;
            if (std::isfinite(arc.t_lo) && std::isfinite(arc.t_hi)) {
                t = arc.t_lo + (arc.t_hi - arc.t_lo) * u;
            } else if (std::isfinite(arc.t_lo)) {
                t = u >= 1.0 ? kInf : arc.t_lo + u / (1.0 - u);
            } else if (std::isfinite(arc.t_hi)) {
                t = u >= 1.0 ? -kInf : arc.t_hi - u / (1.0 - u);
            } else {
                t = u <= 0.0 ? -kInf : (u >= 1.0 ? kInf : std::tan(M_PI * (u - 0.5)));
            }
            auto value = eval_map(arc.map, t);
            if (!value) {
                // A parameter landing exactly on a pole: nudge inward.
                u = std::min(std::max(u + 1e-9, 0.0), 1.0 - 1e-9);
                t = std::isfinite(t) ? t + 1e-9 : (t > 0 ? 1e9 : -1e9);
                value = eval_map(arc.map, t);
                if (!value) continue;
            }
            out.push_back({arc_index, t, *value});
        }
    }
    return out;
}

}  // namespace weyl
