#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "cantor/number_field.hpp"
#include "cantor/poly.hpp"

namespace cantor {

// Polynomials in one symbol with + - * ^, parentheses, rational constants
// (p/q) and implicit products such as "2d". Division only by constants.
QPoly parse_polynomial(std::string_view text, char var);

// "x^2-x-1" (largest real root), a full "field { ... }" description, or "x"
// for the rationals.
NumberField parse_field(std::string_view text);

FieldElement parse_field_element(const NumberField& field, std::string_view text, char var = 'd');

// Splits on commas outside parentheses and brackets; trims each item.
std::vector<std::string> split_top_level(std::string_view text, char sep = ',');

}  // namespace cantor
