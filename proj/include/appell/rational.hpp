#pragma once

#include <gmpxx.h>

#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>

namespace appell {

using Integer = mpz_class;

// Arbitrary-precision rational scalar.  The canonical form is an invariant,
// not a convention: denominator > 0, gcd(|num|, den) = 1, zero stored as 0/1.
// Every constructor canonicalizes; GMP arithmetic preserves the form.
class Rational {
public:
    Rational() : v_(0) {}
    Rational(int n) : v_(n) {}
    Rational(long n) : v_(static_cast<signed long>(n)) {}
    Rational(const Integer& n) : v_(n) {}

    Rational(const Integer& num, const Integer& den) {
        if (den == 0)
            throw std::domain_error("Rational: zero denominator");
        v_ = mpq_class(num, den);
        v_.canonicalize();
    }
    Rational(long num, long den) : Rational(Integer(num), Integer(den)) {}

    // Strict text form: "-3/7", "12", "0".  Grammar is optional '-', digits,
    // optionally '/' digits; non-canonical input ("2/4", "-0/5") is reduced.
    static Rational parse(std::string_view text) {
        const auto fail = [&] {
            throw std::invalid_argument("Rational: cannot parse \"" + std::string(text) + "\"");
        };
        std::string_view s = text;
        std::string_view num = s, den = "1";
        if (auto slash = s.find('/'); slash != std::string_view::npos) {
            num = s.substr(0, slash);
            den = s.substr(slash + 1);
        }
        const auto digits = [&](std::string_view d, bool sign_ok) {
            if (sign_ok && d.size() > 1 && d.front() == '-') d.remove_prefix(1);
            if (d.empty()) return false;
            for (char c : d)
                if (c < '0' || c > '9') return false;
            return true;
        };
        if (!digits(num, true) || !digits(den, false)) fail();
        return Rational(Integer(std::string(num)), Integer(std::string(den)));
    }

    Integer numerator() const { return v_.get_num(); }
    Integer denominator() const { return v_.get_den(); }
    bool is_zero() const { return sgn(v_) == 0; }
    bool is_integer() const { return v_.get_den() == 1; }
    int sign() const { return sgn(v_); }

    std::string to_string() const { return v_.get_str(); }

    Rational operator-() const { return Rational(mpq_class(-v_), raw_tag{}); }

    Rational& operator+=(const Rational& o) { v_ += o.v_; return *this; }
    Rational& operator-=(const Rational& o) { v_ -= o.v_; return *this; }
    Rational& operator*=(const Rational& o) { v_ *= o.v_; return *this; }
    Rational& operator/=(const Rational& o) {
        if (o.is_zero())
            throw std::domain_error("Rational: division by zero");
        v_ /= o.v_;
        return *this;
    }

    friend Rational operator+(Rational a, const Rational& b) { return a += b; }
    friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
    friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
    friend Rational operator/(Rational a, const Rational& b) { return a /= b; }

    friend bool operator==(const Rational& a, const Rational& b) { return mpq_equal(a.v_.get_mpq_t(), b.v_.get_mpq_t()) != 0; }
    friend bool operator!=(const Rational& a, const Rational& b) { return !(a == b); }
    friend bool operator<(const Rational& a, const Rational& b) { return cmp(a.v_, b.v_) < 0; }
    friend bool operator<=(const Rational& a, const Rational& b) { return cmp(a.v_, b.v_) <= 0; }
    friend bool operator>(const Rational& a, const Rational& b) { return cmp(a.v_, b.v_) > 0; }
    friend bool operator>=(const Rational& a, const Rational& b) { return cmp(a.v_, b.v_) >= 0; }

private:
    struct raw_tag {};
    Rational(mpq_class v, raw_tag) : v_(std::move(v)) {}  // already canonical

    mpq_class v_;
};

inline Rational abs(const Rational& r) { return r.sign() < 0 ? -r : r; }

inline Integer factorial(long n) {
    if (n < 0)
        throw std::domain_error("factorial: negative argument");
    Integer r;
    mpz_fac_ui(r.get_mpz_t(), static_cast<unsigned long>(n));
    return r;
}

// C(n, j); zero outside 0 <= j <= n.
inline Integer binomial(long n, long j) {
    if (j < 0 || n < 0 || j > n) return Integer(0);
    Integer r;
    mpz_bin_uiui(r.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(j));
    return r;
}

// m!/(m-k)! = m (m-1) ... (m-k+1).  Requires 0 <= k <= m.
inline Integer falling_factorial(long m, long k) {
    if (m < 0 || k < 0 || k > m)
        throw std::domain_error("falling_factorial: need 0 <= k <= m");
    Integer r(1);
    for (long i = 0; i < k; ++i) r *= Integer(m - i);
    return r;
}

// 2^e for any integer e, so 2^{-1} = 1/2.
inline Rational power_of_two(long e) {
    Integer p;
    mpz_ui_pow_ui(p.get_mpz_t(), 2, static_cast<unsigned long>(e < 0 ? -e : e));
    return e >= 0 ? Rational(p) : Rational(Integer(1), p);
}

}  // namespace appell
