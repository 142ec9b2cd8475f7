#pragma once

#include <vector>

#include "appell/polynomial.hpp"
#include "appell/rational.hpp"
#include "appell/series.hpp"

namespace appell {

// A family together with its order k (the exponent of the base generating
// function).  Order 0 degenerates to the monomial sequence x^n; Genocchi
// number tables additionally require order >= 1.
struct FamilySpec {
    Family family;
    int order_k;

    friend bool operator==(const FamilySpec&, const FamilySpec&) = default;
};

// Numbers a_n = n! * [t^n] base_series(family, k), n = 0..n_max.
struct NumberTable {
    FamilySpec spec;
    std::vector<Rational> values;
};

// Exact number table of length n_max + 1.  Genocchi demands order >= 1.
NumberTable higher_order_numbers(const FamilySpec& spec, int n_max);

// The degree-n family polynomial, via the binomial expansion
//   A_n(x) = sum_{m=0..n} C(n,m) a_m x^{n-m}
// over the number table.  Order 0 gives x^n for every family.  Genocchi
// polynomials have degree n - k and vanish identically for n < k.
Polynomial higher_order_polynomial(const FamilySpec& spec, int n);

// Same, reusing a precomputed table (values must extend through index n).
Polynomial higher_order_polynomial(const NumberTable& table, int n);

// The bridge from the Euler side: (n!/(n-k)!) times the order-k Euler
// polynomial of degree n-k, which coincides with the order-k Genocchi
// polynomial of index n.  Refuses n < k rather than returning zero.
Polynomial genocchi_from_euler(int n, int k);

}  // namespace appell
