#pragma once

#include <optional>
#include <string_view>
#include <vector>

#include "appell/polynomial.hpp"
#include "appell/rational.hpp"

namespace appell {

// One tag per audited identity.  Enum order is the canonical report order.
enum class AuditTag {
    eq11,
    eq12,
    eq13,
    eq14,
    eq15,
    eq18,
    eq19,
    eq20,
    euler_diff_law,
    lemma2_3,
    lemma3_5,
    thm3_1,
    cor3_2,
    thm3_3,
    cor3_4,
    thm3_6,
    thm3_7,
    cor3_8,
    thm3_9,
    cor3_10,
};

inline constexpr int audit_tag_count = 20;

const std::vector<AuditTag>& all_audit_tags();
std::string_view audit_tag_name(AuditTag t);  // "Eq11" ... "Cor3_10"
std::optional<AuditTag> audit_tag_from_name(std::string_view name);

// A tag plus the reading under test.  Index 0 is always the statement exactly
// as printed; higher indices select documented corrected readings.  The list
// of corrected readings is closed: one per suspected misprint, never a search.
struct IdentityId {
    AuditTag tag;
    int variant_index = 0;
};

struct VariantInfo {
    std::string_view label;      // "as-written" or "corrected:<slug>"
    std::string_view rationale;  // one-line justification; empty for as-written
};

const std::vector<VariantInfo>& variants_of(AuditTag t);

enum class Outcome { pass, fail, skipped };
std::string_view outcome_name(Outcome o);

struct IdentityVerdict {
    AuditTag tag;
    int variant_index = 0;
    int k = 0;
    int n = 0;
    Outcome outcome = Outcome::skipped;
    // Fail only: the lowest degree whose coefficients differ, and both values.
    int mismatch_degree = -1;
    Rational lhs_coeff;
    Rational rhs_coeff;
};

// Whether (n, k) lies in the identity's stated domain; out-of-domain cases
// are reported as skipped, never as failures.
bool in_domain(const IdentityId& id, int n, int k);

// The two sides of the identity as exact polynomials.  The derivative lemmas
// quantify over a derivative order; `j` selects it there (0 <= j <= n) and is
// ignored by every other tag.  Out-of-domain input throws.
Polynomial build_lhs(const IdentityId& id, int n, int k, int j = 0);
Polynomial build_rhs(const IdentityId& id, int n, int k, int j = 0);

// Pass iff both sides agree coefficient-for-coefficient; for the derivative
// lemmas the orders j = 0..n are compared ascending and the verdict localizes
// the first mismatch encountered.
IdentityVerdict evaluate_identity(const IdentityId& id, int n, int k);

struct VariantSummary {
    AuditTag tag;
    int variant_index = 0;
    int pass = 0;
    int fail = 0;
    int skipped = 0;
};

struct AuditReport {
    int k_from = 0, k_to = 0;
    int n_from = 0, n_to = 0;
    std::vector<VariantSummary> summary;    // canonical (tag, variant) order
    std::vector<IdentityVerdict> verdicts;  // canonical (tag, variant, k, n) order
};

enum class VariantFilter { as_written, corrected, both };

// Evaluates every selected (tag, variant, k, n) case.  Cases are independent
// and may be evaluated concurrently (threads <= 0 picks the hardware count);
// the report is assembled in canonical order, so its content never depends on
// scheduling.  Empty ranges or an empty tag set are usage errors.
AuditReport run_audit(std::vector<AuditTag> tags, int k_from, int k_to, int n_from, int n_to,
                      VariantFilter filter, int threads = 0);

// Identities whose expected-good reading is backed by an independent oracle.
// A report is acceptable only if each such tag it evaluates has at least one
// variant with zero failures and at least one pass.
bool oracle_verified(AuditTag t);
bool report_ok(const AuditReport& report);

}  // namespace appell
