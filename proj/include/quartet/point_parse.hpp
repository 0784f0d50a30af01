#pragma once

#include <string_view>

#include "quartet/cartan.hpp"

namespace quartet {

// Parses a Cartan point written as four comma-separated entries in
// parentheses. Each entry is a signed sum of terms; a term is a product of
// juxtaposed factors. Factors: decimal numbers, fractions (3/4), sqrtN,
// i, omega (= e^{2 pi i/3}), and exponentials e^{[-][k] pi i [/d]} (the i
// and pi may appear in either order). Examples:
//   (1, 1, 0, 0)
//   (sqrt2, i, i, i)
//   (18, 11 - sqrt203 i, 7 + sqrt203 i, 0)
//   (1, e^{pi i/3}, e^{2 pi i/3}, 0)
//   (1, 1/2 + 0.518 i, 1/2 - 0.518 i, 0)
// Throws std::invalid_argument with a message pointing at the offending
// token on malformed input.
CartanPoint parse_cartan_point(std::string_view text);

}  // namespace quartet
