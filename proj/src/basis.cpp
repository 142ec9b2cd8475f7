#include "appell/basis.hpp"

#include <stdexcept>
#include <utility>

namespace appell {

namespace {

int basis_offset(const FamilySpec& spec) {
    return spec.family == Family::genocchi ? spec.order_k : 0;
}

void check_product_spec(const ProductPolynomialSpec& spec) {
    if (spec.n < 0) throw std::invalid_argument("product polynomial: n must be >= 0");
    if (spec.k < 1) throw std::domain_error("product polynomial: k must be >= 1");
}

}  // namespace

std::vector<Polynomial> basis_set(const FamilySpec& spec, int n) {
    if (n < 0) throw std::invalid_argument("basis_set: n must be >= 0");
    const int offset = basis_offset(spec);
    const NumberTable table = higher_order_numbers(spec, n + offset);
    std::vector<Polynomial> basis;
    basis.reserve(static_cast<size_t>(n) + 1);
    for (int d = 0; d <= n; ++d) basis.push_back(higher_order_polynomial(table, d + offset));
    return basis;
}

BasisExpansion to_basis(const Polynomial& p, const FamilySpec& spec) {
    const int n = std::max(p.degree(), 0);
    const std::vector<Polynomial> basis = basis_set(spec, n);
    std::vector<Rational> coeffs(static_cast<size_t>(n) + 1, Rational(0));
    Polynomial residual = p;
    for (int d = n; d >= 0; --d) {
        const Rational c = residual.coeff(d) / basis[static_cast<size_t>(d)].coeff(d);
        if (!c.is_zero()) residual = residual - c * basis[static_cast<size_t>(d)];
        coeffs[static_cast<size_t>(d)] = c;
    }
    return BasisExpansion{spec, n, basis_offset(spec), std::move(coeffs)};
}

Polynomial from_basis(const BasisExpansion& e) {
    if (e.coefficients.size() != static_cast<size_t>(e.degree_bound) + 1)
        throw std::invalid_argument("from_basis: coefficient list length must be degree_bound + 1");
    const std::vector<Polynomial> basis = basis_set(e.spec, e.degree_bound);
    Polynomial acc;
    for (int d = 0; d <= e.degree_bound; ++d)
        acc = acc + e.coefficients[static_cast<size_t>(d)] * basis[static_cast<size_t>(d)];
    return acc;
}

Polynomial product_poly(const ProductPolynomialSpec& spec) {
    check_product_spec(spec);
    const int top = spec.n + spec.k;
    const NumberTable table = higher_order_numbers(FamilySpec{Family::genocchi, spec.k}, top);
    Polynomial acc;
    for (int l = spec.k; l <= top; ++l) {
        Polynomial term = higher_order_polynomial(table, l) * Polynomial::monomial(top - l);
        if (spec.weighted)
            term = term * (Rational(1) / Rational(factorial(l) * factorial(top - l)));
        acc = acc + term;
    }
    return acc;
}

Polynomial product_poly_derivative_closed_form(const ProductPolynomialSpec& spec, int j) {
    check_product_spec(spec);
    if (j < 0 || j > spec.n)
        throw std::domain_error("product_poly_derivative_closed_form: j must satisfy 0 <= j <= n");
    const int top = spec.n + spec.k;
    const NumberTable table = higher_order_numbers(FamilySpec{Family::genocchi, spec.k}, top);
    Polynomial acc;
    for (int l = spec.k + j; l <= top; ++l) {
        Polynomial term = higher_order_polynomial(table, l - j) * Polynomial::monomial(top - l);
        if (spec.weighted)
            term = term * (Rational(1) / Rational(factorial(l - j) * factorial(top - l)));
        acc = acc + term;
    }
    const Rational prefactor =
        spec.weighted ? power_of_two(j) : Rational(falling_factorial(top + 1, j));
    return prefactor * acc;
}

Rational bernoulli_coeff_from_endpoints(const Polynomial& p, int j) {
    if (j < 1)
        throw std::domain_error("bernoulli_coeff_from_endpoints: j must be >= 1");
    const Polynomial d = derivative(p, j - 1);
    return (d(Rational(1)) - d(Rational(0))) / Rational(factorial(j));
}

Rational euler_coeff_from_endpoints(const Polynomial& p, int j) {
    if (j < 0)
        throw std::domain_error("euler_coeff_from_endpoints: j must be >= 0");
    const Polynomial d = derivative(p, j);
    return (d(Rational(1)) + d(Rational(0))) / (Rational(2) * Rational(factorial(j)));
}

Rational genocchi_coeff_from_endpoints(const Polynomial& p, int j, int k) {
    if (k < 1)
        throw std::domain_error("genocchi_coeff_from_endpoints: k must be >= 1");
    if (j < k)
        throw std::domain_error("genocchi_coeff_from_endpoints: j must be >= k");
    const Polynomial d = derivative(p, j - k);
    return (d(Rational(1)) + d(Rational(0))) / (Rational(2) * Rational(factorial(j)));
}

}  // namespace appell
