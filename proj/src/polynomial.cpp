#include "appell/polynomial.hpp"

#include <stdexcept>
#include <utility>

namespace appell {

namespace {

void strip_trailing_zeros(std::vector<Rational>& c) {
    while (!c.empty() && c.back().is_zero()) c.pop_back();
}

}  // namespace

Polynomial::Polynomial(std::vector<Rational> coeffs) : coeffs_(std::move(coeffs)) {
    strip_trailing_zeros(coeffs_);
}

Polynomial Polynomial::constant(Rational c) {
    return Polynomial(std::vector<Rational>{std::move(c)});
}

Polynomial Polynomial::monomial(int degree, Rational c) {
    if (degree < 0) throw std::invalid_argument("Polynomial::monomial: degree must be >= 0");
    std::vector<Rational> v(static_cast<size_t>(degree) + 1, Rational(0));
    v.back() = std::move(c);
    return Polynomial(std::move(v));
}

Rational Polynomial::coeff(int j) const {
    if (j < 0 || j > degree()) return Rational(0);
    return coeffs_[static_cast<size_t>(j)];
}

Rational Polynomial::operator()(const Rational& x) const {
    Rational acc(0);
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * x + *it;
    return acc;
}

Polynomial operator+(const Polynomial& a, const Polynomial& b) {
    std::vector<Rational> c(static_cast<size_t>(std::max(a.degree(), b.degree()) + 1), Rational(0));
    for (int j = 0; j < static_cast<int>(c.size()); ++j) c[static_cast<size_t>(j)] = a.coeff(j) + b.coeff(j);
    return Polynomial(std::move(c));
}

Polynomial operator-(const Polynomial& a, const Polynomial& b) {
    std::vector<Rational> c(static_cast<size_t>(std::max(a.degree(), b.degree()) + 1), Rational(0));
    for (int j = 0; j < static_cast<int>(c.size()); ++j) c[static_cast<size_t>(j)] = a.coeff(j) - b.coeff(j);
    return Polynomial(std::move(c));
}

Polynomial operator-(const Polynomial& a) {
    std::vector<Rational> c(a.coeffs());
    for (auto& v : c) v = -v;
    return Polynomial(std::move(c));
}

Polynomial operator*(const Polynomial& a, const Polynomial& b) {
    if (a.is_zero() || b.is_zero()) return Polynomial();
    std::vector<Rational> c(static_cast<size_t>(a.degree() + b.degree() + 1), Rational(0));
    for (int i = 0; i <= a.degree(); ++i) {
        if (a.coeff(i).is_zero()) continue;
        for (int j = 0; j <= b.degree(); ++j)
            c[static_cast<size_t>(i + j)] += a.coeff(i) * b.coeff(j);
    }
    return Polynomial(std::move(c));
}

Polynomial operator*(const Rational& c, const Polynomial& p) {
    std::vector<Rational> v(p.coeffs());
    for (auto& x : v) x = c * x;
    return Polynomial(std::move(v));
}

Polynomial operator*(const Polynomial& p, const Rational& c) { return c * p; }

Polynomial derivative(const Polynomial& p, int j) {
    if (j < 0) throw std::invalid_argument("derivative: order must be >= 0");
    Polynomial cur = p;
    for (int step = 0; step < j; ++step) {
        if (cur.degree() < 1) return Polynomial();
        std::vector<Rational> c(static_cast<size_t>(cur.degree()), Rational(0));
        for (int i = 1; i <= cur.degree(); ++i)
            c[static_cast<size_t>(i - 1)] = Rational(i) * cur.coeff(i);
        cur = Polynomial(std::move(c));
    }
    return cur;
}

Polynomial antiderivative(const Polynomial& p) {
    if (p.is_zero()) return Polynomial();
    std::vector<Rational> c(static_cast<size_t>(p.degree()) + 2, Rational(0));
    for (int i = 0; i <= p.degree(); ++i)
        c[static_cast<size_t>(i + 1)] = p.coeff(i) / Rational(i + 1);
    return Polynomial(std::move(c));
}

Rational integrate(const Polynomial& p, const Rational& a, const Rational& b) {
    const Polynomial f = antiderivative(p);
    return f(b) - f(a);
}

Polynomial affine_substitute(const Polynomial& p, const Rational& alpha, const Rational& beta) {
    // Horner scheme with polynomial accumulator: acc -> acc*(alpha x + beta) + c_i.
    const Polynomial inner(std::vector<Rational>{beta, alpha});
    Polynomial acc;
    for (int i = p.degree(); i >= 0; --i)
        acc = acc * inner + Polynomial::constant(p.coeff(i));
    return acc;
}

Polynomial reflect(const Polynomial& p, int k) {
    return affine_substitute(p, Rational(-1), Rational(k));
}

}  // namespace appell
