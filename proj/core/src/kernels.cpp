#include "weyl/kernels.hpp"

#include <cmath>
#include <string>

#include "weyl/errors.hpp"

namespace weyl {

namespace {

void check_order(const OrthoSystem& sys, int n, int needed_degree) {
    if (n < 0 || needed_degree > sys.max_order())
        throw IndexOutOfRange("kernel order " + std::to_string(n) +
                              " needs polynomials up to degree " + std::to_string(needed_degree) +
                              ", system has " + std::to_string(sys.max_order()));
}

Complex det2(Complex a, Complex b, Complex c, Complex d) { return a * d - b * c; }

}  // namespace

Complex kernel(const OrthoSystem& sys, KernelKind kind, int n, Complex z, Complex w) {
    check_order(sys, n, n);
    const bool z_first = kind == KernelKind::B || kind == KernelKind::D;
    const bool w_first = kind == KernelKind::C || kind == KernelKind::D;

    Complex acc = 0.0;
    for (int k = 0; k <= n; ++k) {
        const auto& xz = z_first ? sys.P[static_cast<std::size_t>(k)]
                                 : sys.Q[static_cast<std::size_t>(k)];
        const auto& yw = w_first ? sys.P[static_cast<std::size_t>(k)]
                                 : sys.Q[static_cast<std::size_t>(k)];
        acc += xz(z) * yw(w);
    }
    acc *= z - w;
    if (kind == KernelKind::B) acc -= 1.0;
    if (kind == KernelKind::C) acc += 1.0;
    return acc;
}

Complex kernel_det(const OrthoSystem& sys, KernelKind kind, int n, Complex z, Complex w) {
    check_order(sys, n, n + 1);
    const bool z_first = kind == KernelKind::B || kind == KernelKind::D;
    const bool w_first = kind == KernelKind::C || kind == KernelKind::D;
    const auto& xz = z_first ? sys.P : sys.Q;
    const auto& yw = w_first ? sys.P : sys.Q;

    const auto k = static_cast<std::size_t>(n);
    return sys.a[k] * det2(xz[k + 1](z), xz[k](z), yw[k + 1](w), yw[k](w));
}

RelationReport relation_residuals(const OrthoSystem& sys, int n,
                                  std::span<const Quadruple> quadruples) {
    check_order(sys, n, n);
    auto A = [&](Complex u, Complex v) { return kernel(sys, KernelKind::A, n, u, v); };
    auto B = [&](Complex u, Complex v) { return kernel(sys, KernelKind::B, n, u, v); };
    auto C = [&](Complex u, Complex v) { return kernel(sys, KernelKind::C, n, u, v); };
    auto D = [&](Complex u, Complex v) { return kernel(sys, KernelKind::D, n, u, v); };

    RelationReport report;
    report.entries.resize(9);
    const char* names[9] = {"i", "ii", "iii", "iv", "v", "vi", "vii", "viii", "ix"};
    for (int r = 0; r < 9; ++r) report.entries[static_cast<std::size_t>(r)].relation = names[r];

    for (const auto& q : quadruples) {
        const Complex z1 = q[0], z2 = q[1], z3 = q[2], z4 = q[3];
        const std::pair<Complex, Complex> sides[9] = {
            {A(z1, z2), -A(z2, z1)},
            {B(z1, z2), -C(z2, z1)},
            {D(z1, z2), -D(z2, z1)},
            {det2(A(z1, z2), C(z1, z4), B(z3, z2), D(z3, z4)), C(z1, z3) * C(z2, z4)},
            {det2(A(z1, z2), A(z1, z4), A(z3, z2), A(z3, z4)), A(z1, z3) * A(z2, z4)},
            {det2(A(z1, z2), C(z1, z4), A(z3, z2), C(z3, z4)), A(z1, z3) * C(z2, z4)},
            {det2(B(z1, z2), B(z1, z4), B(z3, z2), B(z3, z4)), D(z1, z3) * A(z2, z4)},
            {det2(B(z1, z2), D(z1, z4), B(z3, z2), D(z3, z4)), D(z1, z3) * C(z2, z4)},
            {det2(D(z1, z2), D(z1, z4), D(z3, z2), D(z3, z4)), D(z1, z3) * D(z2, z4)},
        };
        for (int r = 0; r < 9; ++r) {
            const auto& [lhs, rhs] = sides[r];
            const double res = std::abs(lhs - rhs) / (1.0 + std::abs(rhs));
            auto& entry = report.entries[static_cast<std::size_t>(r)];
            if (res >= entry.max_residual) {
                entry.max_residual = res;
                entry.worst_input = q;
            }
        }
    }
    return report;
}

std::pair<Complex, Complex> double_det(Complex a, Complex b, Complex c, Complex d,
                                       Complex alpha, Complex beta, Complex gamma,
                                       Complex delta) {
    const Complex lhs = det2(det2(a, b, c, d), det2(a, b, gamma, delta),
                             det2(alpha, beta, c, d), det2(alpha, beta, gamma, delta));
    const Complex rhs = det2(a, b, alpha, beta) * det2(c, d, gamma, delta);
    return {lhs, rhs};
}

}  // namespace weyl
