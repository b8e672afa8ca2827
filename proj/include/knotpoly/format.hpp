#pragma once

#include <string>
#include <string_view>

#include <json.hpp>

#include "knotpoly/polyalg.hpp"

namespace knotpoly {

// Text form: ascending lex order on (i, j), e.g. "1 + x^6*y".
std::string to_text(const IntPoly2& p);
IntPoly2 parse_poly2(std::string_view text);

// Univariate text form in the variable t, ascending exponents.
std::string to_text(const UPoly& p, char var = 't');
UPoly parse_upoly(std::string_view text, char var = 't');

// [[i, j, "coeff"], ...]
nlohmann::json to_json(const IntPoly2& p);
IntPoly2 poly2_from_json(const nlohmann::json& j);

// [[e, "coeff"], ...]
nlohmann::json to_json(const UPoly& p);
UPoly upoly_from_json(const nlohmann::json& j);

// Text or JSON, decided by the first non-blank character.
IntPoly2 read_poly2(std::string_view content);
UPoly read_upoly(std::string_view content);

}  // namespace knotpoly
