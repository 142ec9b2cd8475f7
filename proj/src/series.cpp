#include "appell/series.hpp"

#include <stdexcept>
#include <utility>

namespace appell {

std::string_view family_name(Family f) {
    switch (f) {
        case Family::bernoulli: return "bernoulli";
        case Family::euler: return "euler";
        case Family::genocchi: return "genocchi";
    }
    throw std::logic_error("family_name: unknown family");
}

std::optional<Family> family_from_name(std::string_view name) {
    if (name == "bernoulli") return Family::bernoulli;
    if (name == "euler") return Family::euler;
    if (name == "genocchi") return Family::genocchi;
    return std::nullopt;
}

Series::Series(std::vector<Rational> coeffs) : coeffs_(std::move(coeffs)) {
    if (coeffs_.empty())
        throw std::invalid_argument("Series: coefficient list must not be empty");
}

Series Series::one(int order) {
    if (order < 0) throw std::invalid_argument("Series::one: order must be >= 0");
    std::vector<Rational> c(static_cast<size_t>(order) + 1, Rational(0));
    c[0] = Rational(1);
    return Series(std::move(c));
}

Series operator*(const Series& a, const Series& b) {
    if (a.order() != b.order())
        throw std::invalid_argument("Series multiply: operands have different truncation orders");
    const int n = a.order();
    std::vector<Rational> c(static_cast<size_t>(n) + 1, Rational(0));
    for (int i = 0; i <= n; ++i) {
        if (a[i].is_zero()) continue;
        for (int j = 0; i + j <= n; ++j) c[static_cast<size_t>(i + j)] += a[i] * b[j];
    }
    return Series(std::move(c));
}

Series power(const Series& a, long k) {
    if (k < 0) throw std::domain_error("Series power: exponent must be >= 0");
    Series result = Series::one(a.order());
    Series square = a;
    while (k > 0) {
        if (k & 1) result = result * square;
        k >>= 1;
        if (k > 0) square = square * square;
    }
    return result;
}

Series inverse(const Series& a) {
    if (a[0].is_zero())
        throw std::domain_error("Series inverse: constant term is zero");
    const int n = a.order();
    const Rational lead = Rational(1) / a[0];
    std::vector<Rational> r(static_cast<size_t>(n) + 1, Rational(0));
    r[0] = lead;
    for (int j = 1; j <= n; ++j) {
        Rational acc(0);
        for (int i = 1; i <= j; ++i) acc += a[i] * r[static_cast<size_t>(j - i)];
        r[static_cast<size_t>(j)] = -lead * acc;
    }
    return Series(std::move(r));
}

namespace {

// (e^t - 1)/t truncated: coefficient of t^j is 1/(j+1)!.
Series bernoulli_denominator(int order) {
    std::vector<Rational> c(static_cast<size_t>(order) + 1);
    for (int j = 0; j <= order; ++j) c[static_cast<size_t>(j)] = Rational(1) / Rational(factorial(j + 1));
    return Series(std::move(c));
}

// (e^t + 1)/2 truncated: constant term 1, then 1/(2 j!).
Series euler_denominator(int order) {
    std::vector<Rational> c(static_cast<size_t>(order) + 1);
    c[0] = Rational(1);
    for (int j = 1; j <= order; ++j)
        c[static_cast<size_t>(j)] = Rational(1) / (Rational(2) * Rational(factorial(j)));
    return Series(std::move(c));
}

}  // namespace

Series base_series(Family family, int order_k, int truncation) {
    if (order_k < 0) throw std::domain_error("base_series: order k must be >= 0");
    if (truncation < 0) throw std::invalid_argument("base_series: truncation must be >= 0");
    if (order_k == 0) return Series::one(truncation);

    switch (family) {
        case Family::bernoulli:
            return power(inverse(bernoulli_denominator(truncation)), order_k);
        case Family::euler:
            return power(inverse(euler_denominator(truncation)), order_k);
        case Family::genocchi: {
            // (2t/(e^t+1))^k = t^k (2/(e^t+1))^k: shift the Euler series up by k.
            const Series e = power(inverse(euler_denominator(truncation)), order_k);
            std::vector<Rational> c(static_cast<size_t>(truncation) + 1, Rational(0));
            for (int j = order_k; j <= truncation; ++j) c[static_cast<size_t>(j)] = e[j - order_k];
            return Series(std::move(c));
        }
    }
    throw std::logic_error("base_series: unknown family");
}

}  // namespace appell
