#pragma once

#include <optional>
#include <string_view>
#include <vector>

#include "appell/rational.hpp"

namespace appell {

enum class Family { bernoulli, euler, genocchi };

std::string_view family_name(Family f);
std::optional<Family> family_from_name(std::string_view name);

// Formal power series in t, truncated at a fixed order N.  Coefficients are
// ordinary: coeffs()[j] is the coefficient of t^j.  Truncation only discards
// degrees above N; every retained coefficient of every operation is exact.
class Series {
public:
    explicit Series(std::vector<Rational> coeffs);

    // The multiplicative identity [1, 0, ..., 0] at the given order.
    static Series one(int order);

    int order() const { return static_cast<int>(coeffs_.size()) - 1; }
    const Rational& operator[](int j) const { return coeffs_.at(static_cast<size_t>(j)); }
    const std::vector<Rational>& coeffs() const { return coeffs_; }

    friend bool operator==(const Series&, const Series&) = default;

private:
    std::vector<Rational> coeffs_;
};

// Cauchy product; both operands must share the same truncation order.
Series operator*(const Series& a, const Series& b);

// k-fold product by binary exponentiation; k = 0 gives the identity series.
Series power(const Series& a, long k);

// Multiplicative inverse to the common truncation order; the constant term
// must be nonzero.
Series inverse(const Series& a);

// Truncation to order `truncation` of the order-k base generating function:
//   bernoulli  (t/(e^t-1))^k
//   euler      (2/(e^t+1))^k
//   genocchi   (2t/(e^t+1))^k      (coefficients below t^k vanish)
// Order 0 yields the identity series for every family.
Series base_series(Family family, int order_k, int truncation);

}  // namespace appell
