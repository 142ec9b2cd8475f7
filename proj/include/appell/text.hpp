#pragma once

#include <string>
#include <string_view>

#include "appell/polynomial.hpp"
#include "appell/rational.hpp"

namespace appell {

// Canonical polynomial text form: a JSON array of rational strings in
// ascending degree, e.g. ["-6","6"] for 6x - 6.  The zero polynomial is
// ["0"]; emitted arrays never carry other trailing zero entries.
std::string poly_to_text(const Polynomial& p);

// Inverse of poly_to_text.  Lenient about non-canonical input (trailing
// zeros, unreduced fractions); throws std::invalid_argument on anything that
// is not a JSON array of rational strings.
Polynomial poly_from_text(std::string_view text);

}  // namespace appell
