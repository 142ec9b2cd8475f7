#include "appell/audit.hpp"

#include <algorithm>
#include <atomic>
#include <stdexcept>
#include <thread>
#include <utility>

#include "appell/basis.hpp"
#include "appell/family.hpp"

namespace appell {

const std::vector<AuditTag>& all_audit_tags() {
    static const std::vector<AuditTag> tags = {
        AuditTag::eq11,   AuditTag::eq12,   AuditTag::eq13,   AuditTag::eq14,
        AuditTag::eq15,   AuditTag::eq18,   AuditTag::eq19,   AuditTag::eq20,
        AuditTag::euler_diff_law, AuditTag::lemma2_3, AuditTag::lemma3_5,
        AuditTag::thm3_1, AuditTag::cor3_2, AuditTag::thm3_3, AuditTag::cor3_4,
        AuditTag::thm3_6, AuditTag::thm3_7, AuditTag::cor3_8, AuditTag::thm3_9,
        AuditTag::cor3_10,
    };
    return tags;
}

std::string_view audit_tag_name(AuditTag t) {
    switch (t) {
        case AuditTag::eq11: return "Eq11";
        case AuditTag::eq12: return "Eq12";
        case AuditTag::eq13: return "Eq13";
        case AuditTag::eq14: return "Eq14";
        case AuditTag::eq15: return "Eq15";
        case AuditTag::eq18: return "Eq18";
        case AuditTag::eq19: return "Eq19";
        case AuditTag::eq20: return "Eq20";
        case AuditTag::euler_diff_law: return "EulerDiffLaw";
        case AuditTag::lemma2_3: return "Lemma2_3";
        case AuditTag::lemma3_5: return "Lemma3_5";
        case AuditTag::thm3_1: return "Thm3_1";
        case AuditTag::cor3_2: return "Cor3_2";
        case AuditTag::thm3_3: return "Thm3_3";
        case AuditTag::cor3_4: return "Cor3_4";
        case AuditTag::thm3_6: return "Thm3_6";
        case AuditTag::thm3_7: return "Thm3_7";
        case AuditTag::cor3_8: return "Cor3_8";
        case AuditTag::thm3_9: return "Thm3_9";
        case AuditTag::cor3_10: return "Cor3_10";
    }
    throw std::logic_error("audit_tag_name: unknown tag");
}

std::optional<AuditTag> audit_tag_from_name(std::string_view name) {
    for (AuditTag t : all_audit_tags())
        if (audit_tag_name(t) == name) return t;
    return std::nullopt;
}

const std::vector<VariantInfo>& variants_of(AuditTag t) {
    static const std::vector<VariantInfo> plain = {{"as-written", ""}};
    static const std::vector<VariantInfo> eq13 = {
        {"as-written", ""},
        {"corrected:proof-index",
         "number index follows the monomial exponent: G_(n-m) paired with x^(n-m)"},
        {"corrected:standard-index",
         "binomial convolution pairs G_m with x^(n-m)"},
    };
    static const std::vector<VariantInfo> edl = {
        {"as-written", ""},
        {"corrected:same-degree-index",
         "right side 2 E_n^(k-1)(x), keeping degree n on both sides"},
    };
    static const std::vector<VariantInfo> t31 = {
        {"as-written", ""},
        {"corrected:inner-sum-from-k-plus-j",
         "inner sum starts at l = k+j instead of k+j-1"},
    };
    static const std::vector<VariantInfo> c34 = {
        {"as-written", ""},
        {"corrected:parent-consistent",
         "inner-sum limit k+j and sign exponent k+l-j, matching Thm3_3"},
    };
    static const std::vector<VariantInfo> t36 = {
        {"as-written", ""},
        {"corrected:genocchi-basis-factor",
         "multiplies each j-term by G_j^k(x), restoring a polynomial right side"},
    };
    static const std::vector<VariantInfo> t39 = {
        {"as-written", ""},
        {"corrected:plus-standalone-term",
         "standalone G_(n+k-j)^k term added instead of subtracted"},
    };
    switch (t) {
        case AuditTag::eq13: return eq13;
        case AuditTag::euler_diff_law: return edl;
        case AuditTag::thm3_1: return t31;
        case AuditTag::cor3_4: return c34;
        case AuditTag::thm3_6: return t36;
        case AuditTag::thm3_9: return t39;
        default: return plain;
    }
}

std::string_view outcome_name(Outcome o) {
    switch (o) {
        case Outcome::pass: return "pass";
        case Outcome::fail: return "fail";
        case Outcome::skipped: return "skipped";
    }
    throw std::logic_error("outcome_name: unknown outcome");
}

bool in_domain(const IdentityId& id, int n, int k) {
    if (id.variant_index < 0 ||
        static_cast<size_t>(id.variant_index) >= variants_of(id.tag).size())
        throw std::invalid_argument("in_domain: variant index out of range");
    if (k < 1 || n < 0) return false;
    switch (id.tag) {
        case AuditTag::eq11: return n >= 1;
        case AuditTag::eq18: return n >= k;
        // The printed right side uses index n-1, so n = 0 is out of domain for
        // the as-written reading only.
        case AuditTag::euler_diff_law: return id.variant_index == 0 ? n >= 1 : true;
        default: return true;
    }
}

namespace {

Rational sign_pow(int e) {
    return (((e % 2) + 2) % 2 == 0) ? Rational(1) : Rational(-1);
}

Polynomial genocchi_poly(int k, int n) {
    return higher_order_polynomial(FamilySpec{Family::genocchi, k}, n);
}

// Scalars shared by the theorem right-hand sides: Genocchi numbers G_m^k and
// polynomial values G_m^k(k-1), either taken directly or rewritten through
// the Euler bridge G_m^k(.) = (m)_k E_(m-k)^k(.) as the corollaries instruct
// (a term with m < k is zero, since G_m^k vanishes identically there).
struct GenocchiTerms {
    std::vector<Rational> number;  // G_m^k, m = 0..top_index
    std::vector<Rational> at_k1;   // G_m^k(k-1)
};

GenocchiTerms direct_terms(int k, int top_index) {
    const NumberTable t = higher_order_numbers(FamilySpec{Family::genocchi, k}, top_index);
    GenocchiTerms g;
    g.number = t.values;
    g.at_k1.resize(static_cast<size_t>(top_index) + 1);
    const Rational x(k - 1);
    for (int m = 0; m <= top_index; ++m)
        g.at_k1[static_cast<size_t>(m)] = higher_order_polynomial(t, m)(x);
    return g;
}

GenocchiTerms substituted_terms(int k, int top_index) {
    GenocchiTerms g;
    g.number.assign(static_cast<size_t>(top_index) + 1, Rational(0));
    g.at_k1.assign(static_cast<size_t>(top_index) + 1, Rational(0));
    if (top_index < k) return g;
    const NumberTable e = higher_order_numbers(FamilySpec{Family::euler, k}, top_index - k);
    const Rational x(k - 1);
    for (int m = k; m <= top_index; ++m) {
        const Rational ff(falling_factorial(m, k));
        g.number[static_cast<size_t>(m)] = ff * e.values[static_cast<size_t>(m - k)];
        g.at_k1[static_cast<size_t>(m)] = ff * higher_order_polynomial(e, m - k)(x);
    }
    return g;
}

// sum_{j=0..n} [C(n+k+1,j)/(n+k-j+2)]
//   (sum_{l=k+j-1+lower_shift..n+k} (-1)^(k+l-j+1) g(l-j+1) - g(n+k-j+1)) B_j^k(x)
Polynomial rhs_bernoulli_unweighted(int n, int k, const GenocchiTerms& g, int lower_shift) {
    const int top = n + k;
    const NumberTable ber = higher_order_numbers(FamilySpec{Family::bernoulli, k}, n);
    Polynomial acc;
    for (int j = 0; j <= n; ++j) {
        Rational inner(0);
        for (int l = k + j - 1 + lower_shift; l <= top; ++l)
            inner += sign_pow(k + l - j + 1) * g.at_k1[static_cast<size_t>(l - j + 1)];
        const Rational coef = Rational(binomial(top + 1, j)) / Rational(top - j + 2) *
                              (inner - g.number[static_cast<size_t>(top - j + 1)]);
        acc = acc + coef * higher_order_polynomial(ber, j);
    }
    return acc;
}

// sum_{j=0..n} (1/2) C(n+k+1,j)
//   (sum_{l=k+j+lower_delta..n+k} (-1)^(k+l-j+sign_delta) g(l-j) + g(n+k-j)) E_j^k(x)
Polynomial rhs_euler_unweighted(int n, int k, const GenocchiTerms& g, int lower_delta,
                                int sign_delta) {
    const int top = n + k;
    const NumberTable eul = higher_order_numbers(FamilySpec{Family::euler, k}, n);
    Polynomial acc;
    for (int j = 0; j <= n; ++j) {
        Rational inner(0);
        for (int l = k + j + lower_delta; l <= top; ++l)
            inner += sign_pow(k + l - j + sign_delta) * g.at_k1[static_cast<size_t>(l - j)];
        const Rational coef = Rational(binomial(top + 1, j)) / Rational(2) *
                              (inner + g.number[static_cast<size_t>(top - j)]);
        acc = acc + coef * higher_order_polynomial(eul, j);
    }
    return acc;
}

// sum_{j=k..n+k} (2^(j-k-1)/j!)
//   (sum_{l=j..n+k} (-1)^(l-j) g(l+k-j)/((l+k-j)!(n+k-l)!) + g(n+2k-j)/(n+2k-j)!)
// optionally times G_j^k(x) (the corrected reading; as printed the right side
// is a bare scalar).
Polynomial rhs_genocchi_weighted(int n, int k, const GenocchiTerms& g, bool with_basis_factor) {
    const int top = n + k;
    const NumberTable gen = higher_order_numbers(FamilySpec{Family::genocchi, k}, top);
    Polynomial acc;
    for (int j = k; j <= top; ++j) {
        Rational inner(0);
        for (int l = j; l <= top; ++l)
            inner += sign_pow(l - j) * g.at_k1[static_cast<size_t>(l + k - j)] /
                     Rational(factorial(l + k - j) * factorial(top - l));
        const Rational term =
            power_of_two(j - k - 1) / Rational(factorial(j)) *
            (inner + g.number[static_cast<size_t>(n + 2 * k - j)] / Rational(factorial(n + 2 * k - j)));
        acc = acc + (with_basis_factor ? term * higher_order_polynomial(gen, j)
                                       : Polynomial::constant(term));
    }
    return acc;
}

// sum_{j=k..n+k} (2^(j-1)/j!)
//   (sum_{l=k+j-1..n+k} (-1)^(l-j+1+k) g(l-j+1)/((l-j+1)!(n+k-l)!)
//    - g(n+k-j+1)/(n+k-j+1)!) B_j^k(x)
Polynomial rhs_bernoulli_weighted(int n, int k, const GenocchiTerms& g) {
    const int top = n + k;
    const NumberTable ber = higher_order_numbers(FamilySpec{Family::bernoulli, k}, top);
    Polynomial acc;
    for (int j = k; j <= top; ++j) {
        Rational inner(0);
        for (int l = k + j - 1; l <= top; ++l)
            inner += sign_pow(l - j + 1 + k) * g.at_k1[static_cast<size_t>(l - j + 1)] /
                     Rational(factorial(l - j + 1) * factorial(top - l));
        const Rational coef = power_of_two(j - 1) / Rational(factorial(j)) *
                              (inner - g.number[static_cast<size_t>(top - j + 1)] /
                                           Rational(factorial(top - j + 1)));
        acc = acc + coef * higher_order_polynomial(ber, j);
    }
    return acc;
}

// sum_{j=k..n+k} (2^(j-1)/j!)
//   (sum_{l=k+j+lower_delta..n+k} (-1)^(l-j+k+sign_delta) g(l-j)/((l-j)!(n+k-l)!)
//    -/+ g(n+k-j)/(n+k-j)!) E_j^k(x)
Polynomial rhs_euler_weighted(int n, int k, const GenocchiTerms& g, int lower_delta,
                              int sign_delta, int standalone_sign) {
    const int top = n + k;
    const NumberTable eul = higher_order_numbers(FamilySpec{Family::euler, k}, top);
    Polynomial acc;
    for (int j = k; j <= top; ++j) {
        Rational inner(0);
        for (int l = k + j + lower_delta; l <= top; ++l)
            inner += sign_pow(l - j + k + sign_delta) * g.at_k1[static_cast<size_t>(l - j)] /
                     Rational(factorial(l - j) * factorial(top - l));
        const Rational standalone =
            g.number[static_cast<size_t>(top - j)] / Rational(factorial(top - j));
        const Rational coef = power_of_two(j - 1) / Rational(factorial(j)) *
                              (standalone_sign > 0 ? inner + standalone : inner - standalone);
        acc = acc + coef * higher_order_polynomial(eul, j);
    }
    return acc;
}

void check_domain(const IdentityId& id, int n, int k) {
    if (!in_domain(id, n, k))
        throw std::domain_error("identity case out of domain");
}

bool is_lemma(AuditTag t) { return t == AuditTag::lemma2_3 || t == AuditTag::lemma3_5; }

void check_lemma_j(AuditTag t, int n, int j) {
    if (is_lemma(t) && (j < 0 || j > n))
        throw std::domain_error("derivative order j must satisfy 0 <= j <= n");
}

}  // namespace

Polynomial build_lhs(const IdentityId& id, int n, int k, int j) {
    check_domain(id, n, k);
    check_lemma_j(id.tag, n, j);
    switch (id.tag) {
        case AuditTag::eq11:
            return derivative(genocchi_poly(k, n));
        case AuditTag::eq12:
            return antiderivative(genocchi_poly(k, n));
        case AuditTag::eq13:
        case AuditTag::eq14:
        case AuditTag::eq18:
            return genocchi_poly(k, n);
        case AuditTag::eq15:
            return Polynomial::constant(genocchi_poly(k, n)(Rational(1)));
        case AuditTag::eq19:
            return Polynomial::constant(
                higher_order_numbers(FamilySpec{Family::genocchi, k}, n + k)
                    .values[static_cast<size_t>(n + k)] /
                Rational(falling_factorial(n + k, k)));
        case AuditTag::eq20:
            return Polynomial::constant(genocchi_poly(k, n + k)(Rational(k - 1)) /
                                        Rational(falling_factorial(n + k, k)));
        case AuditTag::euler_diff_law: {
            const Polynomial e = higher_order_polynomial(FamilySpec{Family::euler, k}, n);
            return affine_substitute(e, Rational(1), Rational(1)) + e;
        }
        case AuditTag::lemma2_3:
            return derivative(product_poly(ProductPolynomialSpec{n, k, false}), j);
        case AuditTag::lemma3_5:
            return derivative(product_poly(ProductPolynomialSpec{n, k, true}), j);
        case AuditTag::thm3_1:
        case AuditTag::cor3_2:
        case AuditTag::thm3_3:
        case AuditTag::cor3_4:
            return product_poly(ProductPolynomialSpec{n, k, false});
        case AuditTag::thm3_6:
        case AuditTag::thm3_7:
        case AuditTag::cor3_8:
        case AuditTag::thm3_9:
        case AuditTag::cor3_10:
            return product_poly(ProductPolynomialSpec{n, k, true});
    }
    throw std::logic_error("build_lhs: unknown tag");
}

Polynomial build_rhs(const IdentityId& id, int n, int k, int j) {
    check_domain(id, n, k);
    check_lemma_j(id.tag, n, j);
    const int vi = id.variant_index;
    switch (id.tag) {
        case AuditTag::eq11: {
            const NumberTable t = higher_order_numbers(FamilySpec{Family::genocchi, k}, n);
            return Rational(n) * higher_order_polynomial(t, n - 1);
        }
        case AuditTag::eq12: {
            const NumberTable t = higher_order_numbers(FamilySpec{Family::genocchi, k}, n + 1);
            const Polynomial g1 = higher_order_polynomial(t, n + 1);
            return (g1 - Polynomial::constant(g1(Rational(0)))) * (Rational(1) / Rational(n + 1));
        }
        case AuditTag::eq13: {
            const NumberTable t = higher_order_numbers(FamilySpec{Family::genocchi, k}, n);
            std::vector<Rational> c(static_cast<size_t>(n) + 1, Rational(0));
            for (int m = 0; m <= n; ++m) {
                const int idx = vi == 0 ? n : (vi == 1 ? n - m : m);
                c[static_cast<size_t>(n - m)] +=
                    Rational(binomial(n, m)) * t.values[static_cast<size_t>(idx)];
            }
            return Polynomial(std::move(c));
        }
        case AuditTag::eq14:
            return sign_pow(n + k) * reflect(genocchi_poly(k, n), k);
        case AuditTag::eq15:
            return Polynomial::constant(sign_pow(n + k) * genocchi_poly(k, n)(Rational(k - 1)));
        case AuditTag::eq18:
            return genocchi_from_euler(n, k);
        case AuditTag::eq19:
            return Polynomial::constant(higher_order_numbers(FamilySpec{Family::euler, k}, n)
                                            .values[static_cast<size_t>(n)]);
        case AuditTag::eq20:
            return Polynomial::constant(
                higher_order_polynomial(FamilySpec{Family::euler, k}, n)(Rational(k - 1)));
        case AuditTag::euler_diff_law: {
            const int idx = vi == 0 ? n - 1 : n;
            return Rational(2) * higher_order_polynomial(FamilySpec{Family::euler, k - 1}, idx);
        }
        case AuditTag::lemma2_3:
            return product_poly_derivative_closed_form(ProductPolynomialSpec{n, k, false}, j);
        case AuditTag::lemma3_5:
            return product_poly_derivative_closed_form(ProductPolynomialSpec{n, k, true}, j);
        case AuditTag::thm3_1:
            return rhs_bernoulli_unweighted(n, k, direct_terms(k, n + k + 1), vi == 1 ? 1 : 0);
        case AuditTag::cor3_2:
            return rhs_bernoulli_unweighted(n, k, substituted_terms(k, n + k + 1), 0);
        case AuditTag::thm3_3:
            return rhs_euler_unweighted(n, k, direct_terms(k, n + k), 0, 0);
        case AuditTag::cor3_4:
            // As printed the corollary shifts the inner-sum limit to k+j-1 and
            // the sign exponent to k+l-j+1; the corrected reading restores the
            // parent theorem's k+j and k+l-j.
            return vi == 1 ? rhs_euler_unweighted(n, k, substituted_terms(k, n + k), 0, 0)
                           : rhs_euler_unweighted(n, k, substituted_terms(k, n + k), -1, 1);
        case AuditTag::thm3_6:
            return rhs_genocchi_weighted(n, k, direct_terms(k, n + k), vi == 1);
        case AuditTag::thm3_7:
            return rhs_bernoulli_weighted(n, k, direct_terms(k, n + k));
        case AuditTag::cor3_8:
            return rhs_bernoulli_weighted(n, k, substituted_terms(k, n + k));
        case AuditTag::thm3_9:
            return rhs_euler_weighted(n, k, direct_terms(k, n + k), 0, 0, vi == 1 ? 1 : -1);
        case AuditTag::cor3_10:
            // The printed corollary also shifts the inner-sum limit to k+j-1
            // and the sign exponent to l-j+1+k relative to its parent.
            return rhs_euler_weighted(n, k, substituted_terms(k, n + k), -1, 1, -1);
    }
    throw std::logic_error("build_rhs: unknown tag");
}

IdentityVerdict evaluate_identity(const IdentityId& id, int n, int k) {
    IdentityVerdict v;
    v.tag = id.tag;
    v.variant_index = id.variant_index;
    v.k = k;
    v.n = n;
    if (!in_domain(id, n, k)) {
        v.outcome = Outcome::skipped;
        return v;
    }
    const int j_top = is_lemma(id.tag) ? n : 0;
    for (int j = 0; j <= j_top; ++j) {
        const Polynomial lhs = build_lhs(id, n, k, j);
        const Polynomial rhs = build_rhs(id, n, k, j);
        const int top_degree = std::max(lhs.degree(), rhs.degree());
        for (int d = 0; d <= top_degree; ++d) {
            if (lhs.coeff(d) != rhs.coeff(d)) {
                v.outcome = Outcome::fail;
                v.mismatch_degree = d;
                v.lhs_coeff = lhs.coeff(d);
                v.rhs_coeff = rhs.coeff(d);
                return v;
            }
        }
    }
    v.outcome = Outcome::pass;
    return v;
}

AuditReport run_audit(std::vector<AuditTag> tags, int k_from, int k_to, int n_from, int n_to,
                      VariantFilter filter, int threads) {
    if (tags.empty()) throw std::invalid_argument("run_audit: no identities selected");
    if (k_from > k_to) throw std::invalid_argument("run_audit: empty k range");
    if (n_from > n_to) throw std::invalid_argument("run_audit: empty n range");
    std::sort(tags.begin(), tags.end());
    tags.erase(std::unique(tags.begin(), tags.end()), tags.end());

    const auto selected = [&](int variant_index) {
        if (filter == VariantFilter::as_written) return variant_index == 0;
        if (filter == VariantFilter::corrected) return variant_index > 0;
        return true;
    };

    struct Case {
        IdentityId id;
        int k, n;
    };
    std::vector<Case> cases;
    for (AuditTag tag : tags)
        for (int vi = 0; vi < static_cast<int>(variants_of(tag).size()); ++vi) {
            if (!selected(vi)) continue;
            for (int k = k_from; k <= k_to; ++k)
                for (int n = n_from; n <= n_to; ++n)
                    cases.push_back(Case{IdentityId{tag, vi}, k, n});
        }

    std::vector<IdentityVerdict> verdicts(cases.size());
    int worker_count = threads > 0 ? threads : static_cast<int>(std::thread::hardware_concurrency());
    worker_count = std::clamp(worker_count, 1, std::max<int>(1, static_cast<int>(cases.size())));
    std::atomic<size_t> next{0};
    const auto worker = [&] {
        for (size_t i = next.fetch_add(1); i < cases.size(); i = next.fetch_add(1))
            verdicts[i] = evaluate_identity(cases[i].id, cases[i].n, cases[i].k);
    };
    std::vector<std::thread> pool;
    for (int t = 1; t < worker_count; ++t) pool.emplace_back(worker);
    worker();
    for (std::thread& t : pool) t.join();

    AuditReport report;
    report.k_from = k_from;
    report.k_to = k_to;
    report.n_from = n_from;
    report.n_to = n_to;
    report.verdicts = std::move(verdicts);

    size_t i = 0;
    for (AuditTag tag : tags)
        for (int vi = 0; vi < static_cast<int>(variants_of(tag).size()); ++vi) {
            if (!selected(vi)) continue;
            VariantSummary s;
            s.tag = tag;
            s.variant_index = vi;
            const size_t cases_per_variant =
                static_cast<size_t>(k_to - k_from + 1) * static_cast<size_t>(n_to - n_from + 1);
            for (size_t c = 0; c < cases_per_variant; ++c, ++i) {
                switch (report.verdicts[i].outcome) {
                    case Outcome::pass: ++s.pass; break;
                    case Outcome::fail: ++s.fail; break;
                    case Outcome::skipped: ++s.skipped; break;
                }
            }
            report.summary.push_back(s);
        }
    return report;
}

bool oracle_verified(AuditTag t) {
    switch (t) {
        case AuditTag::eq11:
        case AuditTag::eq12:
        case AuditTag::eq13:
        case AuditTag::eq14:
        case AuditTag::eq15:
        case AuditTag::eq18:
        case AuditTag::eq19:
        case AuditTag::eq20:
        case AuditTag::euler_diff_law:
        case AuditTag::lemma2_3:
        case AuditTag::lemma3_5:
            return true;
        default:
            return false;
    }
}

bool report_ok(const AuditReport& report) {
    for (AuditTag tag : all_audit_tags()) {
        if (!oracle_verified(tag)) continue;
        bool evaluated = false;
        bool has_clean_variant = false;
        for (const VariantSummary& s : report.summary) {
            if (s.tag != tag) continue;
            if (s.pass + s.fail > 0) evaluated = true;
            if (s.fail == 0 && s.pass > 0) has_clean_variant = true;
        }
        if (evaluated && !has_clean_variant) return false;
    }
    return true;
}

}  // namespace appell
