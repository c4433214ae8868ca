#pragma once

#include <string_view>

#include "symbolic/polynomial.hpp"

namespace jetvar {

// Reader for the canonical text form written by Polynomial::to_string and
// Indeterminate::to_string. Also accepts integers, bare "-" signs between
// terms and arbitrary whitespace. Errors are ParseError with the offset.
Indeterminate parse_indeterminate(std::string_view text);
Polynomial parse_polynomial(std::string_view text);

}  // namespace jetvar
