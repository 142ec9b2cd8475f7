#include <doctest.h>

#include <random>
#include <stdexcept>
#include <vector>

#include "appell/basis.hpp"

using appell::BasisExpansion;
using appell::Family;
using appell::FamilySpec;
using appell::Polynomial;
using appell::ProductPolynomialSpec;
using appell::Rational;

namespace {

Polynomial random_poly(std::mt19937& rng, int degree) {
    std::uniform_int_distribution<int> num(-9, 9);
    std::uniform_int_distribution<int> den(1, 9);
    std::vector<Rational> cs;
    for (int j = 0; j < degree; ++j) cs.emplace_back(num(rng), den(rng));
    cs.emplace_back(den(rng));  // force exact degree
    return Polynomial(std::move(cs));
}

}  // namespace

TEST_SUITE("basis") {

TEST_CASE("basis sets have the advertised shape") {
    const std::vector<Polynomial> b = appell::basis_set({Family::bernoulli, 2}, 4);
    REQUIRE(b.size() == 5);
    for (int d = 0; d <= 4; ++d) {
        CHECK(b[static_cast<size_t>(d)].degree() == d);
        CHECK(b[static_cast<size_t>(d)].coeff(d) == Rational(1));  // Appell bases are monic
    }
    const std::vector<Polynomial> g = appell::basis_set({Family::genocchi, 3}, 2);
    REQUIRE(g.size() == 3);
    for (int d = 0; d <= 2; ++d) {
        CHECK(g[static_cast<size_t>(d)].degree() == d);
        // Element of degree d is the index-(k+d) Genocchi polynomial.
        CHECK(g[static_cast<size_t>(d)].coeff(d) ==
              Rational(appell::falling_factorial(3 + d, 3)));
    }
}

TEST_CASE("frozen conversions") {
    // x^2 in the order-1 Euler basis: x^2 = E_2 + E_1 + (1/2) E_0.
    const BasisExpansion e = appell::to_basis(Polynomial::monomial(2), {Family::euler, 1});
    CHECK(e.offset == 0);
    CHECK(e.degree_bound == 2);
    CHECK(e.coefficients ==
          std::vector<Rational>{Rational(1, 2), Rational(1), Rational(1)});

    // The constant 1 in the order-2 Genocchi basis: 1 = (1/2) G_2^2.
    const BasisExpansion g = appell::to_basis(Polynomial::constant(Rational(1)),
                                              {Family::genocchi, 2});
    CHECK(g.offset == 2);
    CHECK(g.degree_bound == 0);
    CHECK(g.coefficients == std::vector<Rational>{Rational(1, 2)});

    // The zero polynomial expands with a single zero coefficient.
    const BasisExpansion z = appell::to_basis(Polynomial(), {Family::bernoulli, 1});
    CHECK(z.degree_bound == 0);
    CHECK(z.coefficients == std::vector<Rational>{Rational(0)});
    CHECK(appell::from_basis(z) == Polynomial());
}

TEST_CASE("seeded random round trips through every family basis") {
    std::mt19937 rng(46812);
    std::uniform_int_distribution<int> deg(0, 12);
    std::uniform_int_distribution<int> order(1, 5);
    const Family families[] = {Family::bernoulli, Family::euler, Family::genocchi};
    for (int i = 0; i < 120; ++i) {
        const Polynomial p = random_poly(rng, deg(rng));
        const FamilySpec spec{families[i % 3], order(rng)};
        const BasisExpansion e = appell::to_basis(p, spec);
        CHECK(e.degree_bound == p.degree());  // random_poly always has degree >= 0
        CHECK(appell::from_basis(e) == p);
    }
}

TEST_CASE("from_basis validates its input") {
    BasisExpansion e = appell::to_basis(Polynomial::monomial(3), {Family::euler, 2});
    e.coefficients.pop_back();
    CHECK_THROWS_AS(appell::from_basis(e), std::invalid_argument);
}

TEST_CASE("product polynomials have degree n and frozen small cases") {
    // n = 0, k = 1 unweighted: G_1^1(x) x^0 = 1.
    CHECK(appell::product_poly({0, 1, false}) == Polynomial::constant(Rational(1)));
    // n = 1, k = 1 unweighted: G_1(x) x + G_2(x) = x + (2x - 1) = 3x - 1.
    CHECK(appell::product_poly({1, 1, false}) ==
          Polynomial({Rational(-1), Rational(3)}));
    // n = 1, k = 1 weighted: G_1(x) x / 1! 1! + G_2(x) / 2! 0! = 2x - 1/2.
    CHECK(appell::product_poly({1, 1, true}) ==
          Polynomial({Rational(-1, 2), Rational(2)}));

    for (int k = 1; k <= 4; ++k)
        for (int n = 0; n <= 8; ++n)
            for (bool weighted : {false, true})
                CHECK(appell::product_poly({n, k, weighted}).degree() == n);

    CHECK_THROWS_AS(appell::product_poly({-1, 1, false}), std::invalid_argument);
    CHECK_THROWS_AS(appell::product_poly({2, 0, false}), std::domain_error);
}

TEST_CASE("closed-form derivatives match iterated symbolic differentiation") {
    for (int k = 1; k <= 4; ++k) {
        for (int n = 0; n <= 8; ++n) {
            for (bool weighted : {false, true}) {
                const ProductPolynomialSpec spec{n, k, weighted};
                const Polynomial base = appell::product_poly(spec);
                for (int j = 0; j <= n; ++j)
                    CHECK(appell::product_poly_derivative_closed_form(spec, j) ==
                          appell::derivative(base, j));
            }
        }
    }
    CHECK_THROWS_AS(appell::product_poly_derivative_closed_form({3, 1, false}, 4),
                    std::domain_error);
    CHECK_THROWS_AS(appell::product_poly_derivative_closed_form({3, 1, false}, -1),
                    std::domain_error);
}

TEST_CASE("endpoint rules agree with back-substitution exactly at order 1") {
    std::mt19937 rng(271828);
    std::uniform_int_distribution<int> deg(0, 10);
    for (int i = 0; i < 40; ++i) {
        const Polynomial p = random_poly(rng, deg(rng));
        const int n = p.degree();

        const BasisExpansion b = appell::to_basis(p, {Family::bernoulli, 1});
        for (int j = 1; j <= n; ++j)
            CHECK(appell::bernoulli_coeff_from_endpoints(p, j) ==
                  b.coefficients[static_cast<size_t>(j)]);

        const BasisExpansion e = appell::to_basis(p, {Family::euler, 1});
        for (int j = 0; j <= n; ++j)
            CHECK(appell::euler_coeff_from_endpoints(p, j) ==
                  e.coefficients[static_cast<size_t>(j)]);

        const BasisExpansion g = appell::to_basis(p, {Family::genocchi, 1});
        for (int j = 1; j <= n + 1; ++j)
            CHECK(appell::genocchi_coeff_from_endpoints(p, j, 1) ==
                  g.coefficients[static_cast<size_t>(j - 1)]);
    }
}

TEST_CASE("endpoint rules validate their ranges") {
    const Polynomial p = Polynomial::monomial(2);
    CHECK_THROWS_AS(appell::bernoulli_coeff_from_endpoints(p, 0), std::domain_error);
    CHECK_THROWS_AS(appell::euler_coeff_from_endpoints(p, -1), std::domain_error);
    CHECK_THROWS_AS(appell::genocchi_coeff_from_endpoints(p, 1, 2), std::domain_error);
    CHECK_THROWS_AS(appell::genocchi_coeff_from_endpoints(p, 2, 0), std::domain_error);
}

}  // TEST_SUITE
