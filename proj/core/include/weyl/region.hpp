#pragma once

#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "weyl/kernels.hpp"
#include "weyl/moebius.hpp"

namespace weyl {

enum class RegionKind {
    hamburger_disk,
    stieltjes_lens,
    interval_lens_even,
    interval_lens_odd,
    gap_lens,
    multi_gap,
};

const char* to_string(RegionKind kind) noexcept;

/// One boundary arc: a Moebius parametrization over [t_lo, t_hi]
/// (projective endpoints, +-infinity allowed) lying on
/// circles[circle_index] of the owning region.
struct BoundaryArc {
    MoebiusMap map;
    double t_lo = 0.0;
    double t_hi = 0.0;
    std::size_t circle_index = 0;
};

/// Difference of the truncated circle data against the previous order.
struct ConvergenceInfo {
    double delta_center = 0.0;
    double delta_radius = 0.0;
};

/// A Weyl circle or lens region: the set of Stieltjes-transform values at a
/// fixed upper half-plane point over all solutions of the moment problem.
/// Membership is the intersection of the listed closed disks; the boundary
/// is carried explicitly as parametrized arcs.
struct WeylRegion {
    RegionKind kind = RegionKind::hamburger_disk;
    std::vector<Circle> circles;          ///< 1 disk, 2 lens, 1+m multi-gap
    std::vector<Complex> vertices;        ///< empty or two arc endpoints
    std::optional<double> vertex_angle;   ///< radians in (0, pi], lens kinds only
    std::vector<BoundaryArc> arcs;
    bool degenerate = false;              ///< region collapsed to a point
    int order = 0;
    std::optional<ConvergenceInfo> convergence;
    bool intersection_empty = false;      ///< multi-gap: no common point found
    std::vector<std::string> diagnostics; ///< empirical membership-validation findings
};

/// Truncated Hamburger circle: center -C_n(z, conj z)/D_n(z, conj z),
/// radius 1/|D_n(z, conj z)|. Throws RealAxisZ for Im z below tolerance and
/// NotCertified when the system does not reach order n.
Circle hamburger_disk(const OrthoSystem& sys, int n, Complex z);

/// Hamburger circle wrapped as a region with its boundary parametrization.
WeylRegion hamburger_region(const OrthoSystem& sys, int n, Complex z);

/// Lens for the truncated [a, infinity) problem: arcs
///   w1(t) = -(C t + A)/(D t + B),  t in [t_a, inf],
///   w2(t) = -(C t + (a-z)[A + t_a C])/(D t + (a-z)[B + t_a D]), t in [0, inf]
/// with kernels at (z, a) and t_a = -Q_n(a)/P_n(a). Vertices -C/D and
/// -Q_n(z)/P_n(z); vertex angle arg(1/(a-z)).
WeylRegion stieltjes_region(const OrthoSystem& sys, int n, Complex z, double a);

/// Lens for the truncated [a, b] problem with m prescribed moment indices
/// s_0..s_m. Even m = 2n: K1 is the truncated Hamburger circle and K2 comes
/// from the weighted 2x2 determinant formulas. Odd m = 2n+1: both circles
/// come from the 3x3-determinant parametrizations (needs system order n+2).
WeylRegion interval_region(const OrthoSystem& sys, int m, Complex z, double a, double b);

/// Lens for the truncated problem on R \ (a, b): K1 is the truncated
/// Hamburger circle, K2 the gap restriction circle; vertices
/// -C_n(z,b)/D_n(z,b) (t=0) and -C_n(z,a)/D_n(z,a) (t=inf). The degenerate
/// flag is set when the vertices coincide.
WeylRegion gap_circles(const OrthoSystem& sys, int n, Complex z, double a, double b);

/// Region for R \ union of disjoint open gaps: the Hamburger disk
/// intersected with every single-gap restriction circle. Reports whether
/// the intersection of all closed disks is empty.
WeylRegion multi_gap_region(const OrthoSystem& sys, int n, Complex z,
                            std::span<const std::pair<double, double>> gaps);

/// Closed-disk intersection membership (distance to each center at most
/// radius + tol, tol scaled by 1 + |w|).
bool contains(const WeylRegion& region, Complex w, double tol = 1e-8);

/// Opening angle arg(-(z-a)/(z-b)) of the value cone of Pick functions
/// positive on (a, b), principal branch, in (0, pi].
double cone_angle(Complex z, double a, double b);

struct BoundarySample {
    std::size_t arc = 0;
    double t = 0.0;
    Complex value;
};

/// `count` samples per arc including endpoints (projective t handled by
/// substitution). Samples satisfy the on-circle property of their arc.
std::vector<BoundarySample> boundary_samples(const WeylRegion& region, int count);

/// |m_n - m_{n-1}| and |r_n - r_{n-1}| of the truncated Hamburger circle;
/// nullopt at order 0.
std::optional<ConvergenceInfo> convergence_monitor(const OrthoSystem& sys, int n, Complex z);

}  // namespace weyl
