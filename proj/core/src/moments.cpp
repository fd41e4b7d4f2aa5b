#include "weyl/moments.hpp"

#include <cmath>
#include <sstream>

#include "hankel_detail.hpp"
#include "weyl/errors.hpp"

namespace weyl {

namespace {

void require_valid(const MomentSequence& s) {
    if (s.values.empty()) throw EmptySequence("moment sequence has no entries");
    for (double v : s.values)
        if (!std::isfinite(v)) throw NonFiniteInput("moment sequence contains a non-finite value");
}

std::string fmt(double x) {
    std::ostringstream os;
    os << x;
    return os.str();
}

ShiftedPositivity certify_localized(const MomentSequence& s, std::string constraint,
                                    const std::vector<double>& weight) {
    const int order = detail::max_testable_order(s.max_index(), static_cast<int>(weight.size()) - 1);
    auto f = detail::factor_hankel(s.values, weight, order);
    return ShiftedPositivity{std::move(constraint), f.max_pd_order, std::move(f.condition)};
}

void append_localizers(const MomentSequence& s, const SupportSpec& support,
                       std::vector<ShiftedPositivity>& out) {
    if (std::holds_alternative<AllOfR>(support)) return;
    if (const auto* h = std::get_if<HalfLine>(&support)) {
        out.push_back(certify_localized(s, "x-a, a=" + fmt(h->a), {-h->a, 1.0}));
        return;
    }
    if (const auto* iv = std::get_if<Interval>(&support)) {
        out.push_back(certify_localized(s, "x-a, a=" + fmt(iv->a), {-iv->a, 1.0}));
        out.push_back(certify_localized(s, "b-x, b=" + fmt(iv->b), {iv->b, -1.0}));
        return;
    }
    const auto& gaps = std::get<GapComplement>(support).gaps;
    for (const auto& [a, b] : gaps)
        out.push_back(certify_localized(s, "(x-a)(x-b), a=" + fmt(a) + ", b=" + fmt(b),
                                        {a * b, -(a + b), 1.0}));
}

}  // namespace

PositivityReport check_positivity(const MomentSequence& s, const SupportSpec& support) {
    require_valid(s);

    PositivityReport report;
    if (s.values[0] <= 0.0) {
        // s_0 <= 0 fails at order 0; reported as the -1 sentinel, not an error.
        report.max_pd_order = -1;
        append_localizers(s, support, report.shifted);
        return report;
    }

    auto plain = detail::factor_hankel(s.values, {1.0}, s.max_index() / 2);
    report.max_pd_order = plain.max_pd_order;
    report.condition_estimates = std::move(plain.condition);
    append_localizers(s, support, report.shifted);
    return report;
}

MomentSequence classical_moments(const ClassicalFamily& family, int count) {
    if (count < 1) throw EmptySequence("classical_moments requires count >= 1");

    MomentSequence s;
    s.values.resize(static_cast<std::size_t>(count));

    if (std::holds_alternative<Gaussian>(family)) {
        s.label = "gaussian";
        s.values[0] = 1.0;
        for (int n = 1; n < count; ++n)
            s.values[n] = n % 2 == 1 ? 0.0 : s.values[n - 2] * static_cast<double>(n - 1);
    } else if (std::holds_alternative<Lognormal>(family)) {
        s.label = "lognormal";
        for (int n = 0; n < count; ++n)
            s.values[n] = std::exp(0.5 * static_cast<double>(n) * static_cast<double>(n));
    } else if (const auto* u = std::get_if<UniformFamily>(&family)) {
        if (!(u->a < u->b)) throw BadInterval("uniform family requires a < b");
        s.label = "uniform[" + fmt(u->a) + "," + fmt(u->b) + "]";
        double pa = u->a, pb = u->b;  // a^{n+1}, b^{n+1}
        for (int n = 0; n < count; ++n) {
            s.values[n] = (pb - pa) / (static_cast<double>(n + 1) * (u->b - u->a));
            pa *= u->a;
            pb *= u->b;
        }
    } else {
        const auto& tp = std::get<TwoPointFamily>(family);
        s.label = "two_point(" + fmt(tp.x1) + "," + fmt(tp.w1) + "," + fmt(tp.x2) + "," +
                  fmt(tp.w2) + ")";
        double p1 = 1.0, p2 = 1.0;
        for (int n = 0; n < count; ++n) {
            s.values[n] = tp.w1 * p1 + tp.w2 * p2;
            p1 *= tp.x1;
            p2 *= tp.x2;
        }
    }

    for (double v : s.values)
        if (!std::isfinite(v))
            throw OverflowRisk("requested moment exceeds the finite double range");
    return s;
}

MomentSequence moments_of(const DiscreteMeasure& mu, int count) {
    if (mu.atoms.empty()) throw EmptySequence("measure has no atoms");
    if (count < 1) throw EmptySequence("moments_of requires count >= 1");
    for (const auto& atom : mu.atoms) {
        if (!std::isfinite(atom.x) || !std::isfinite(atom.w))
            throw NonFiniteInput("measure has a non-finite atom");
        if (atom.w <= 0.0) throw NonFiniteInput("measure weights must be positive");
    }

    MomentSequence s;
    s.label = "moments_of";
    s.values.assign(static_cast<std::size_t>(count), 0.0);
    std::vector<double> pw(mu.atoms.size(), 1.0);
    for (int n = 0; n < count; ++n) {
        double v = 0.0;
        for (std::size_t k = 0; k < mu.atoms.size(); ++k) {
            v += mu.atoms[k].w * pw[k];
            pw[k] *= mu.atoms[k].x;
        }
        s.values[n] = v;
    }
    return s;
}

double apply_functional(const MomentSequence& s, const Polynomial& p) {
    require_valid(s);
    if (p.degree() > s.max_index())
        throw DegreeExceedsMoments("polynomial degree " + std::to_string(p.degree()) +
                                   " exceeds moment index " + std::to_string(s.max_index()));
    double acc = 0.0;
    for (std::size_t k = 0; k < p.coeffs().size(); ++k) acc += p.coeffs()[k] * s.values[k];
    return acc;
}

}  // namespace weyl
