#pragma once

#include <string>

#include "appell/audit.hpp"

namespace appell {

// Canonical audit report serializations.  Key order is fixed and output is
// compact, so identical reports serialize to identical bytes.  Fail verdicts
// carry the mismatch triple (lowest differing degree plus both coefficients);
// pass/skipped verdicts omit it.
std::string report_to_json(const AuditReport& report);

// Flat form: one verdict per row under a fixed header; mismatch columns are
// empty unless the outcome is fail.
std::string report_to_csv(const AuditReport& report);

}  // namespace appell
