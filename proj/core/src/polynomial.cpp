#include "weyl/polynomial.hpp"

#include <algorithm>
#include <utility>

namespace weyl {

namespace {

void trim(std::vector<double>& c) {
    while (!c.empty() && c.back() == 0.0) c.pop_back();
}

}  // namespace

Polynomial::Polynomial(std::vector<double> coeffs) : coeffs_(std::move(coeffs)) {
    trim(coeffs_);
}

Polynomial Polynomial::monomial(int degree, double coeff) {
    std::vector<double> c(static_cast<std::size_t>(degree) + 1, 0.0);
    c.back() = coeff;
    return Polynomial(std::move(c));
}

double Polynomial::operator()(double x) const noexcept {
    double acc = 0.0;
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * x + *it;
    return acc;
}

Complex Polynomial::operator()(Complex z) const {
    Complex acc = 0.0;
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * z + *it;
    return acc;
}

Polynomial Polynomial::derivative() const {
    if (coeffs_.size() <= 1) return Polynomial{};
    std::vector<double> d(coeffs_.size() - 1);
    for (std::size_t k = 1; k < coeffs_.size(); ++k)
        d[k - 1] = static_cast<double>(k) * coeffs_[k];
    return Polynomial(std::move(d));
}

Polynomial operator+(const Polynomial& p, const Polynomial& q) {
    std::vector<double> c(std::max(p.coeffs_.size(), q.coeffs_.size()), 0.0);
    for (std::size_t k = 0; k < c.size(); ++k) c[k] = p.coeff(k) + q.coeff(k);
    return Polynomial(std::move(c));
}

Polynomial operator-(const Polynomial& p, const Polynomial& q) {
    std::vector<double> c(std::max(p.coeffs_.size(), q.coeffs_.size()), 0.0);
    for (std::size_t k = 0; k < c.size(); ++k) c[k] = p.coeff(k) - q.coeff(k);
    return Polynomial(std::move(c));
}

Polynomial operator*(const Polynomial& p, const Polynomial& q) {
    if (p.is_zero() || q.is_zero()) return Polynomial{};
    std::vector<double> c(p.coeffs_.size() + q.coeffs_.size() - 1, 0.0);
    for (std::size_t i = 0; i < p.coeffs_.size(); ++i)
        for (std::size_t j = 0; j < q.coeffs_.size(); ++j)
            c[i + j] += p.coeffs_[i] * q.coeffs_[j];
    return Polynomial(std::move(c));
}

Polynomial operator*(double c, const Polynomial& p) {
    std::vector<double> out(p.coeffs_);
    for (double& v : out) v *= c;
    return Polynomial(std::move(out));
}

}  // namespace weyl
