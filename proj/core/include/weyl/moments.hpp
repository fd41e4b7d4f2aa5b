#pragma once

#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "weyl/measures.hpp"
#include "weyl/polynomial.hpp"

namespace weyl {

/// Finite real moment sequence s_0..s_m. Values are stored raw; s_0 = 1 is
/// not forced. A genuine moment sequence has s_0 > 0 and all values finite;
/// check_positivity reports how far positive definiteness actually extends.
struct MomentSequence {
    std::vector<double> values;
    std::string label;

    /// Highest moment index m (size - 1).
    int max_index() const noexcept { return static_cast<int>(values.size()) - 1; }
};

// Support specifications for positivity screening.
struct AllOfR {};
struct HalfLine {
    double a;
};
struct Interval {
    double a, b;
};
struct GapComplement {
    std::vector<std::pair<double, double>> gaps;
};
using SupportSpec = std::variant<AllOfR, HalfLine, Interval, GapComplement>;

/// PD orders of one localized Hankel family (s_{i+j} weighted by a support
/// localizer such as x-a or (x-a)(x-b)).
struct ShiftedPositivity {
    std::string constraint;                  ///< e.g. "x-(-3)" or "(x-a)(x-b), a=-1, b=1"
    int max_pd_order = -1;                   ///< -1: fails already at order 0
    std::vector<double> condition_estimates; ///< per order 0..max_pd_order
};

struct PositivityReport {
    int max_pd_order = -1;                   ///< plain Hankel; -1 sentinel when s_0 <= 0
    std::vector<double> condition_estimates; ///< max/min pivot ratio per order
    std::vector<ShiftedPositivity> shifted;  ///< localized families for the support spec
};

/// Reports the largest order n for which the Hankel matrices H_0..H_n (and
/// the support-localized variants) are numerically positive definite. A
/// pivot below 1e-12 times the largest diagonal entry of H_n fails order n.
PositivityReport check_positivity(const MomentSequence& s, const SupportSpec& support);

// Classical example families.
struct Gaussian {};
struct Lognormal {};
struct UniformFamily {
    double a, b;
};
struct TwoPointFamily {
    double x1, w1, x2, w2;
};
using ClassicalFamily = std::variant<Gaussian, Lognormal, UniformFamily, TwoPointFamily>;

/// First `count` moments of a classical family. Gaussian: (n-1)!! for even n;
/// lognormal: exp(n^2/2); uniform(a,b); two_point atomic sums. Throws
/// OverflowRisk when a requested moment leaves the finite double range.
MomentSequence classical_moments(const ClassicalFamily& family, int count);

/// s_n = sum_k w_k x_k^n for n = 0..count-1.
MomentSequence moments_of(const DiscreteMeasure& mu, int count);

/// The moment functional L_s applied to p: sum_k c_k s_k. Throws
/// DegreeExceedsMoments when deg p > m.
double apply_functional(const MomentSequence& s, const Polynomial& p);

}  // namespace weyl
