// Command-line front end: number tables, family polynomials, basis
// conversion, and the identity audit, all over exact rationals.
//
// Exit codes: 0 success; 1 audit found a failing oracle-backed identity;
// 2 usage or input error.

#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "appell/audit.hpp"
#include "appell/basis.hpp"
#include "appell/family.hpp"
#include "appell/report_io.hpp"
#include "appell/text.hpp"

namespace {

using appell::AuditTag;
using appell::Family;
using appell::FamilySpec;
using appell::Polynomial;
using appell::Rational;
using ordered_json = nlohmann::ordered_json;

constexpr int exit_usage = 2;

struct IntRange {
    int from = 0;
    int to = 0;
};

// Inclusive "a..b" ranges, matching the inclusive summation limits used
// throughout; a bare "a" means a..a.
IntRange parse_range(const std::string& text) {
    const auto fail = [&] {
        throw std::invalid_argument("range \"" + text + "\" is not of the form a..b");
    };
    const auto to_int = [&](const std::string& s) {
        size_t used = 0;
        int value = 0;
        try {
            value = std::stoi(s, &used);
        } catch (const std::exception&) {
            fail();
        }
        if (used != s.size() || s.empty()) fail();
        return value;
    };
    const size_t dots = text.find("..");
    if (dots == std::string::npos) {
        const int v = to_int(text);
        return IntRange{v, v};
    }
    return IntRange{to_int(text.substr(0, dots)), to_int(text.substr(dots + 2))};
}

Family parse_family(const std::string& name) {
    const auto f = appell::family_from_name(name);
    if (!f)
        throw std::invalid_argument("unknown family \"" + name +
                                    "\" (expected bernoulli, euler or genocchi)");
    return *f;
}

std::vector<AuditTag> parse_identities(const std::string& list) {
    if (list == "all") return appell::all_audit_tags();
    std::vector<AuditTag> tags;
    std::stringstream ss(list);
    std::string item;
    while (std::getline(ss, item, ',')) {
        const auto tag = appell::audit_tag_from_name(item);
        if (!tag) throw std::invalid_argument("unknown identity tag \"" + item + "\"");
        tags.push_back(*tag);
    }
    if (tags.empty()) throw std::invalid_argument("no identity tags given");
    return tags;
}

int emit(const std::string& text, const std::string& output_path) {
    if (output_path.empty()) {
        std::cout << text;
        return 0;
    }
    std::ofstream out(output_path, std::ios::binary);
    if (!out) {
        std::cerr << "error: cannot open output file \"" << output_path << "\"\n";
        return exit_usage;
    }
    out << text;
    return out ? 0 : exit_usage;
}

std::string values_csv(const std::string& header, const std::vector<std::string>& keys,
                       const std::vector<std::string>& values) {
    std::string out = header + '\n';
    for (size_t i = 0; i < values.size(); ++i) out += keys[i] + ',' + values[i] + '\n';
    return out;
}

int cmd_numbers(Family family, int order, int max_n, const std::string& format,
                const std::string& output_path) {
    const appell::NumberTable table = appell::higher_order_numbers(FamilySpec{family, order}, max_n);
    std::vector<std::string> values;
    values.reserve(table.values.size());
    for (const Rational& v : table.values) values.push_back(v.to_string());
    if (format == "csv") {
        std::vector<std::string> keys;
        for (size_t n = 0; n < values.size(); ++n) keys.push_back(std::to_string(n));
        return emit(values_csv("n,value", keys, values), output_path);
    }
    ordered_json j;
    j["family"] = appell::family_name(family);
    j["order"] = order;
    j["values"] = values;
    return emit(j.dump() + '\n', output_path);
}

int cmd_poly(Family family, int order, int n, const std::optional<std::string>& at,
             const std::string& format, const std::string& output_path) {
    const Polynomial p = appell::higher_order_polynomial(FamilySpec{family, order}, n);
    if (at) {
        const Rational value = p(Rational::parse(*at));
        if (format == "csv") return emit("value\n" + value.to_string() + '\n', output_path);
        return emit(ordered_json(value.to_string()).dump() + '\n', output_path);
    }
    if (format == "csv") {
        std::vector<std::string> keys, values;
        const size_t len = p.is_zero() ? 1 : p.coeffs().size();
        for (size_t d = 0; d < len; ++d) {
            keys.push_back(std::to_string(d));
            values.push_back(p.coeff(static_cast<int>(d)).to_string());
        }
        return emit(values_csv("degree,coefficient", keys, values), output_path);
    }
    return emit(appell::poly_to_text(p) + '\n', output_path);
}

int cmd_basis(Family family, int order, const std::string& poly_text, const std::string& format,
              const std::string& output_path) {
    const Polynomial p = appell::poly_from_text(poly_text);
    const appell::BasisExpansion e = appell::to_basis(p, FamilySpec{family, order});
    std::vector<std::string> values;
    values.reserve(e.coefficients.size());
    for (const Rational& c : e.coefficients) values.push_back(c.to_string());
    if (format == "csv") {
        std::vector<std::string> keys;
        for (size_t i = 0; i < values.size(); ++i)
            keys.push_back(std::to_string(e.offset + static_cast<int>(i)));
        return emit(values_csv("index,coefficient", keys, values), output_path);
    }
    ordered_json j;
    j["family"] = appell::family_name(family);
    j["order"] = order;
    j["offset"] = e.offset;
    j["coefficients"] = values;
    return emit(j.dump() + '\n', output_path);
}

int cmd_audit(const std::string& identities, const std::string& k_text, const std::string& n_text,
              const std::string& variants, int threads, const std::string& format,
              const std::string& output_path) {
    const std::vector<AuditTag> tags = parse_identities(identities);
    const IntRange k = parse_range(k_text);
    const IntRange n = parse_range(n_text);
    appell::VariantFilter filter = appell::VariantFilter::both;
    if (variants == "as-written") filter = appell::VariantFilter::as_written;
    else if (variants == "corrected") filter = appell::VariantFilter::corrected;
    const appell::AuditReport report =
        appell::run_audit(tags, k.from, k.to, n.from, n.to, filter, threads);
    const std::string text =
        format == "csv" ? appell::report_to_csv(report) : appell::report_to_json(report) + '\n';
    if (const int rc = emit(text, output_path); rc != 0) return rc;
    return appell::report_ok(report) ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact higher-order Bernoulli / Euler / Genocchi calculator and identity audit"};
    app.require_subcommand(1);

    std::string format = "json";
    std::string output_path;
    app.add_option("--format", format, "Output format")
        ->check(CLI::IsMember({"json", "csv"}))
        ->capture_default_str();
    app.add_option("--output", output_path, "Write to a file instead of standard output");

    std::string family_name = "bernoulli";
    int order = 1;
    int max_n = 0;
    int poly_n = 0;
    std::optional<std::string> at;
    std::string poly_text;
    std::string identities = "all";
    std::string k_text = "1..3";
    std::string n_text = "0..8";
    std::string variants = "both";
    int threads = 0;

    CLI::App* numbers = app.add_subcommand("numbers", "Table of family numbers up to max-n");
    numbers->add_option("--family", family_name, "bernoulli, euler or genocchi")->required();
    numbers->add_option("--order", order, "Order k (>= 0; Genocchi needs >= 1)")->required();
    numbers->add_option("--max-n", max_n, "Largest index n")->required();

    CLI::App* poly = app.add_subcommand("poly", "One family polynomial, optionally evaluated");
    poly->add_option("--family", family_name, "bernoulli, euler or genocchi")->required();
    poly->add_option("--order", order, "Order k")->required();
    poly->add_option("--n", poly_n, "Index n")->required();
    poly->add_option("--at", at, "Evaluate at the given rational instead of printing coefficients");

    CLI::App* basis = app.add_subcommand("basis", "Expand a polynomial in a family basis");
    basis->add_option("--to", family_name, "Target family basis")->required();
    basis->add_option("--order", order, "Order k of the basis")->required();
    basis->add_option("--poly", poly_text, "Polynomial as a JSON array of rationals")->required();

    CLI::App* audit = app.add_subcommand("audit", "Machine-check the identity catalogue");
    audit->add_option("--identities", identities, "Comma-separated tags, or \"all\"")
        ->capture_default_str();
    audit->add_option("--k", k_text, "Inclusive order range a..b")->capture_default_str();
    audit->add_option("--n", n_text, "Inclusive index range a..b")->capture_default_str();
    audit->add_option("--variants", variants, "Which readings to evaluate")
        ->check(CLI::IsMember({"as-written", "corrected", "both"}))
        ->capture_default_str();
    audit->add_option("--threads", threads, "Worker threads (0 = hardware default)");

    for (CLI::App* sub : {numbers, poly, basis, audit}) sub->fallthrough();

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return exit_usage;
    }

    try {
        if (numbers->parsed())
            return cmd_numbers(parse_family(family_name), order, max_n, format, output_path);
        if (poly->parsed())
            return cmd_poly(parse_family(family_name), order, poly_n, at, format, output_path);
        if (basis->parsed())
            return cmd_basis(parse_family(family_name), order, poly_text, format, output_path);
        return cmd_audit(identities, k_text, n_text, variants, threads, format, output_path);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return exit_usage;
    }
}
