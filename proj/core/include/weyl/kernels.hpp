#pragma once

#include <array>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "weyl/orthopoly.hpp"

namespace weyl {

/// The four Nevanlinna kernels:
///   A_n(z,w) =      (z-w) sum_{k<=n} Q_k(z) Q_k(w)
///   B_n(z,w) = -1 + (z-w) sum_{k<=n} P_k(z) Q_k(w)
///   C_n(z,w) =  1 + (z-w) sum_{k<=n} Q_k(z) P_k(w)
///   D_n(z,w) =      (z-w) sum_{k<=n} P_k(z) P_k(w)
enum class KernelKind { A, B, C, D };

/// Sum-form kernel value (the primary evaluation path).
Complex kernel(const OrthoSystem& sys, KernelKind kind, int n, Complex z, Complex w);

/// Determinant form: a_n times the 2x2 determinant of the degree n+1/n
/// polynomial pairs. Needs n+1 <= system order. Agrees with the sum form
/// identically; kept as a diagnostic route.
Complex kernel_det(const OrthoSystem& sys, KernelKind kind, int n, Complex z, Complex w);

using Quadruple = std::array<Complex, 4>;

struct RelationEntry {
    std::string relation;  ///< "i".."ix"
    double max_residual = 0.0;
    Quadruple worst_input{};
};

/// Max residuals of the nine kernel determinant identities over the sampled
/// quadruples; residual = |LHS - RHS| / (1 + |RHS|).
struct RelationReport {
    std::vector<RelationEntry> entries;
};

RelationReport relation_residuals(const OrthoSystem& sys, int n,
                                  std::span<const Quadruple> quadruples);

/// Both sides of the 2x2-of-2x2 determinant identity
///   det [[|a b; c d|, |a b; g h|], [|e f; c d|, |e f; g h|]]
///     = |a b; e f| * |c d; g h|
/// with (e,f,g,h) named (alpha,beta,gamma,delta).
std::pair<Complex, Complex> double_det(Complex a, Complex b, Complex c, Complex d,
                                       Complex alpha, Complex beta, Complex gamma,
                                       Complex delta);

}  // namespace weyl
