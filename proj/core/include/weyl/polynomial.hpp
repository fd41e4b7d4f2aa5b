#pragma once

#include <complex>
#include <cstddef>
#include <vector>

namespace weyl {

using Complex = std::complex<double>;

/// Real-coefficient polynomial, coefficients stored in ascending degree
/// order. Trailing zero coefficients are trimmed, so the leading
/// coefficient is nonzero unless the polynomial is identically zero.
class Polynomial {
public:
    Polynomial() = default;
    explicit Polynomial(std::vector<double> coeffs);

    static Polynomial zero() { return Polynomial{}; }
    static Polynomial monomial(int degree, double coeff = 1.0);

    bool is_zero() const noexcept { return coeffs_.empty(); }

    /// Degree, with -1 for the zero polynomial.
    int degree() const noexcept { return static_cast<int>(coeffs_.size()) - 1; }

    const std::vector<double>& coeffs() const noexcept { return coeffs_; }

    /// Coefficient of x^k (0 when k exceeds the degree).
    double coeff(std::size_t k) const noexcept {
        return k < coeffs_.size() ? coeffs_[k] : 0.0;
    }

    double leading() const noexcept { return coeffs_.empty() ? 0.0 : coeffs_.back(); }

    double operator()(double x) const noexcept;
    Complex operator()(Complex z) const;

    Polynomial derivative() const;

    friend Polynomial operator+(const Polynomial& p, const Polynomial& q);
    friend Polynomial operator-(const Polynomial& p, const Polynomial& q);
    friend Polynomial operator*(const Polynomial& p, const Polynomial& q);
    friend Polynomial operator*(double c, const Polynomial& p);

private:
    std::vector<double> coeffs_;
};

}  // namespace weyl
