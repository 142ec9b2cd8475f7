#include "appell/text.hpp"

#include <stdexcept>
#include <vector>

#include <json.hpp>

namespace appell {

std::string poly_to_text(const Polynomial& p) {
    nlohmann::json arr = nlohmann::json::array();
    if (p.is_zero()) {
        arr.push_back("0");
    } else {
        for (const Rational& c : p.coeffs()) arr.push_back(c.to_string());
    }
    return arr.dump();
}

Polynomial poly_from_text(std::string_view text) {
    nlohmann::json parsed;
    try {
        parsed = nlohmann::json::parse(text);
    } catch (const nlohmann::json::parse_error&) {
        throw std::invalid_argument("polynomial text: not valid JSON");
    }
    if (!parsed.is_array())
        throw std::invalid_argument("polynomial text: expected a JSON array");
    std::vector<Rational> coeffs;
    coeffs.reserve(parsed.size());
    for (const auto& item : parsed) {
        if (!item.is_string())
            throw std::invalid_argument("polynomial text: coefficients must be strings");
        coeffs.push_back(Rational::parse(item.get<std::string>()));
    }
    return Polynomial(std::move(coeffs));
}

}  // namespace appell
