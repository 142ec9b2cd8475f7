#pragma once

// Independent oracles for the test suite.  Everything here is derived from
// classical single-order facts plus exponential-generating-function algebra,
// on purpose avoiding the library's series inversion / powering code paths:
//
//   - classical Bernoulli numbers from the defining recurrence
//     sum_{j=0..n} C(n+1,j) B_j = 0  (n >= 1), B_0 = 1;
//   - classical Genocchi numbers via G_n = 2 (1 - 2^n) B_n;
//   - classical Euler-polynomial constant terms via
//     E_n(0) = 2 (1 - 2^(n+1)) B_(n+1) / (n+1)  (n >= 1), E_0(0) = 1;
//   - order-k number sequences as (k-1)-fold binomial convolutions of the
//     order-1 sequence, because a product of exponential generating
//     functions convolves coefficient sequences binomially.

#include <vector>

#include "appell/rational.hpp"

namespace oracle {

using appell::binomial;
using appell::Rational;

inline std::vector<Rational> classical_bernoulli(int n_max) {
    std::vector<Rational> b(static_cast<size_t>(n_max) + 1);
    b[0] = Rational(1);
    for (int n = 1; n <= n_max; ++n) {
        Rational acc(0);
        for (int j = 0; j < n; ++j) acc += Rational(binomial(n + 1, j)) * b[static_cast<size_t>(j)];
        b[static_cast<size_t>(n)] = -acc / Rational(n + 1);
    }
    return b;
}

inline std::vector<Rational> classical_genocchi(int n_max) {
    const std::vector<Rational> b = classical_bernoulli(n_max);
    std::vector<Rational> g(static_cast<size_t>(n_max) + 1);
    for (int n = 0; n <= n_max; ++n)
        g[static_cast<size_t>(n)] =
            Rational(2) * (Rational(1) - appell::power_of_two(n)) * b[static_cast<size_t>(n)];
    return g;
}

inline std::vector<Rational> classical_euler_at_zero(int n_max) {
    const std::vector<Rational> b = classical_bernoulli(n_max + 1);
    std::vector<Rational> e(static_cast<size_t>(n_max) + 1);
    e[0] = Rational(1);
    for (int n = 1; n <= n_max; ++n)
        e[static_cast<size_t>(n)] = Rational(2) * (Rational(1) - appell::power_of_two(n + 1)) *
                                    b[static_cast<size_t>(n) + 1] / Rational(n + 1);
    return e;
}

// Binomial convolution c_n = sum_j C(n,j) a_j b_(n-j): the number-sequence
// image of multiplying two exponential generating functions.
inline std::vector<Rational> binomial_convolve(const std::vector<Rational>& a,
                                               const std::vector<Rational>& b) {
    std::vector<Rational> c(std::min(a.size(), b.size()), Rational(0));
    for (size_t n = 0; n < c.size(); ++n)
        for (size_t j = 0; j <= n; ++j)
            c[n] += Rational(binomial(static_cast<long>(n), static_cast<long>(j))) * a[j] * b[n - j];
    return c;
}

inline std::vector<Rational> convolution_power(const std::vector<Rational>& a, int k) {
    std::vector<Rational> r(a.size(), Rational(0));
    r[0] = Rational(1);
    for (int i = 0; i < k; ++i) r = binomial_convolve(r, a);
    return r;
}

}  // namespace oracle
