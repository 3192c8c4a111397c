#ifndef CHERN_POLY_TEXT_HPP
#define CHERN_POLY_TEXT_HPP

#include <string>
#include <string_view>
#include <vector>

#include "chern/ideal.hpp"

namespace chern {

// Parse "3*x^2*y - x + 12" in the ring's variables. Grammar: integer
// coefficients, '^' powers, '*' required between variables and optional
// after a coefficient. Used by tests and the corpus; the script parser has
// its own tokenizer with source positions.
Polynomial parse_poly(const RingPtr& R, std::string_view text);

std::vector<Polynomial> parse_polys(const RingPtr& R, const std::vector<std::string>& texts);

Ideal parse_ideal(const RingPtr& R, const std::vector<std::string>& texts);

}  // namespace chern

#endif
