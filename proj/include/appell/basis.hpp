#pragma once

#include <vector>

#include "appell/family.hpp"
#include "appell/polynomial.hpp"
#include "appell/rational.hpp"

namespace appell {

// Expansion of a polynomial in a higher-order family basis.  coefficients[i]
// multiplies the degree-i basis element, whose family index is offset + i
// (offset = k for Genocchi bases, 0 for Bernoulli and Euler).
struct BasisExpansion {
    FamilySpec spec;
    int degree_bound = 0;
    int offset = 0;
    std::vector<Rational> coefficients;  // length degree_bound + 1
};

// The family basis of the degree <= n polynomials: n + 1 elements of strictly
// increasing degree 0..n.  For Genocchi these are the polynomials of index
// k..k+n, with leading coefficients (k+d)!/d!.
std::vector<Polynomial> basis_set(const FamilySpec& spec, int n);

// Exact conversion into the family basis by triangular back-substitution from
// the top degree downward.  This is the authoritative conversion: it depends
// only on the basis elements having distinct degrees and nonzero leading
// coefficients, with no assumption about endpoint-derivative shortcuts.
BasisExpansion to_basis(const Polynomial& p, const FamilySpec& spec);

// Reconstruction sum; exact inverse of to_basis.
Polynomial from_basis(const BasisExpansion& e);

// The two product polynomials built on the order-k Genocchi family:
//   unweighted: sum_{l=k..n+k}              G_l^k(x) x^(n+k-l)
//   weighted:   sum_{l=k..n+k} G_l^k(x) x^(n+k-l) / (l! (n+k-l)!)
// Both have degree exactly n.
struct ProductPolynomialSpec {
    int n = 0;
    int k = 1;
    bool weighted = false;
};

Polynomial product_poly(const ProductPolynomialSpec& spec);

// Closed form of the j-th derivative of product_poly, 0 <= j <= n:
//   unweighted: ((n+k+1)!/(n+k+1-j)!) sum_{l=k+j..n+k} G_(l-j)^k(x) x^(n+k-l)
//   weighted:   2^j sum_{l=k+j..n+k} G_(l-j)^k(x) x^(n+k-l) / ((l-j)! (n+k-l)!)
// Equality with the iterated symbolic derivative is checked by the audit,
// never assumed.
Polynomial product_poly_derivative_closed_form(const ProductPolynomialSpec& spec, int j);

// Endpoint-derivative coefficient rules, evaluated verbatim for an arbitrary
// polynomial.  Their agreement with to_basis is a property of the order-1
// bases (established by test), not a general fact; the audit probes k >= 2.
//   a_j = (1/j!)     [p^(j-1)(1) - p^(j-1)(0)]   (Bernoulli, j >= 1)
//   b_j = (1/(2 j!)) [p^(j)(1)   + p^(j)(0)]     (Euler, j >= 0)
//   c_j = (1/(2 j!)) [p^(j-k)(1) + p^(j-k)(0)]   (Genocchi, j >= k >= 1)
Rational bernoulli_coeff_from_endpoints(const Polynomial& p, int j);
Rational euler_coeff_from_endpoints(const Polynomial& p, int j);
Rational genocchi_coeff_from_endpoints(const Polynomial& p, int j, int k);

}  // namespace appell
