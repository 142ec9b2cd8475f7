#pragma once

#include <vector>

#include "appell/rational.hpp"

namespace appell {

// Dense univariate polynomial over Rational, coefficients stored in ascending
// degree order with no trailing zeros.  The zero polynomial is the empty
// coefficient list and reports degree -1.
class Polynomial {
public:
    Polynomial() = default;  // the zero polynomial
    explicit Polynomial(std::vector<Rational> coeffs);

    static Polynomial constant(Rational c);
    static Polynomial monomial(int degree, Rational c = Rational(1));

    int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
    bool is_zero() const { return coeffs_.empty(); }

    // Coefficient of x^j; zero outside [0, degree()].
    Rational coeff(int j) const;
    const std::vector<Rational>& coeffs() const { return coeffs_; }

    Rational operator()(const Rational& x) const;

    friend bool operator==(const Polynomial&, const Polynomial&) = default;

private:
    std::vector<Rational> coeffs_;
};

Polynomial operator+(const Polynomial& a, const Polynomial& b);
Polynomial operator-(const Polynomial& a, const Polynomial& b);
Polynomial operator-(const Polynomial& a);
Polynomial operator*(const Polynomial& a, const Polynomial& b);
Polynomial operator*(const Rational& c, const Polynomial& p);
Polynomial operator*(const Polynomial& p, const Rational& c);

// j-th derivative (j >= 0; j = 0 returns p unchanged).
Polynomial derivative(const Polynomial& p, int j = 1);

// Antiderivative with zero constant term, i.e. the integral from 0 to x.
Polynomial antiderivative(const Polynomial& p);

// Exact definite integral over [a, b].
Rational integrate(const Polynomial& p, const Rational& a, const Rational& b);

// Substitution x -> alpha*x + beta.
Polynomial affine_substitute(const Polynomial& p, const Rational& alpha, const Rational& beta);

// Reflection about the midpoint k/2, i.e. p(k - x) in the monomial basis.
Polynomial reflect(const Polynomial& p, int k);

}  // namespace appell
