#include "appell/report_io.hpp"

#include <string>

#include <json.hpp>

namespace appell {

namespace {

using ordered_json = nlohmann::ordered_json;

std::string variant_label(AuditTag tag, int variant_index) {
    return std::string(variants_of(tag)[static_cast<size_t>(variant_index)].label);
}

}  // namespace

std::string report_to_json(const AuditReport& report) {
    ordered_json j;
    j["k_range"] = {{"from", report.k_from}, {"to", report.k_to}};
    j["n_range"] = {{"from", report.n_from}, {"to", report.n_to}};
    j["summary"] = ordered_json::array();
    for (const VariantSummary& s : report.summary) {
        ordered_json row;
        row["tag"] = audit_tag_name(s.tag);
        row["variant"] = variant_label(s.tag, s.variant_index);
        row["rationale"] = variants_of(s.tag)[static_cast<size_t>(s.variant_index)].rationale;
        row["pass"] = s.pass;
        row["fail"] = s.fail;
        row["skipped"] = s.skipped;
        j["summary"].push_back(std::move(row));
    }
    j["verdicts"] = ordered_json::array();
    for (const IdentityVerdict& v : report.verdicts) {
        ordered_json row;
        row["tag"] = audit_tag_name(v.tag);
        row["variant"] = variant_label(v.tag, v.variant_index);
        row["k"] = v.k;
        row["n"] = v.n;
        row["outcome"] = outcome_name(v.outcome);
        if (v.outcome == Outcome::fail) {
            row["mismatch_degree"] = v.mismatch_degree;
            row["lhs"] = v.lhs_coeff.to_string();
            row["rhs"] = v.rhs_coeff.to_string();
        }
        j["verdicts"].push_back(std::move(row));
    }
    j["ok"] = report_ok(report);
    return j.dump();
}

std::string report_to_csv(const AuditReport& report) {
    std::string out = "tag,variant,k,n,outcome,mismatch_degree,lhs,rhs\n";
    for (const IdentityVerdict& v : report.verdicts) {
        out += std::string(audit_tag_name(v.tag)) + ',' + variant_label(v.tag, v.variant_index) +
               ',' + std::to_string(v.k) + ',' + std::to_string(v.n) + ',' +
               std::string(outcome_name(v.outcome)) + ',';
        if (v.outcome == Outcome::fail)
            out += std::to_string(v.mismatch_degree) + ',' + v.lhs_coeff.to_string() + ',' +
                   v.rhs_coeff.to_string();
        else
            out += ",,";
        out += '\n';
    }
    return out;
}

}  // namespace appell
