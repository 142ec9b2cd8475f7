#include "appell/family.hpp"

#include <stdexcept>
#include <utility>

namespace appell {

namespace {

void check_spec(const FamilySpec& spec) {
    if (spec.order_k < 0)
        throw std::domain_error("FamilySpec: order must be >= 0");
}

}  // namespace

NumberTable higher_order_numbers(const FamilySpec& spec, int n_max) {
    check_spec(spec);
    if (n_max < 0)
        throw std::invalid_argument("higher_order_numbers: n_max must be >= 0");
    if (spec.family == Family::genocchi && spec.order_k == 0)
        throw std::domain_error("higher_order_numbers: Genocchi requires order >= 1");
    const Series s = base_series(spec.family, spec.order_k, n_max);
    std::vector<Rational> values(static_cast<size_t>(n_max) + 1);
    for (int n = 0; n <= n_max; ++n)
        values[static_cast<size_t>(n)] = Rational(factorial(n)) * s[n];
    return NumberTable{spec, std::move(values)};
}

Polynomial higher_order_polynomial(const FamilySpec& spec, int n) {
    check_spec(spec);
    if (n < 0)
        throw std::invalid_argument("higher_order_polynomial: n must be >= 0");
    if (spec.order_k == 0) return Polynomial::monomial(n);
    return higher_order_polynomial(higher_order_numbers(spec, n), n);
}

Polynomial higher_order_polynomial(const NumberTable& table, int n) {
    if (n < 0)
        throw std::invalid_argument("higher_order_polynomial: n must be >= 0");
    if (static_cast<size_t>(n) >= table.values.size())
        throw std::invalid_argument("higher_order_polynomial: number table too short");
    std::vector<Rational> c(static_cast<size_t>(n) + 1, Rational(0));
    for (int m = 0; m <= n; ++m)
        c[static_cast<size_t>(n - m)] = Rational(binomial(n, m)) * table.values[static_cast<size_t>(m)];
    return Polynomial(std::move(c));
}

Polynomial genocchi_from_euler(int n, int k) {
    if (k < 1) throw std::domain_error("genocchi_from_euler: order k must be >= 1");
    if (n < k) throw std::domain_error("genocchi_from_euler: requires n >= k");
    const Rational scale(falling_factorial(n, k));
    return scale * higher_order_polynomial(FamilySpec{Family::euler, k}, n - k);
}

}  // namespace appell
