#pragma once

// Text, JSON and LaTeX renderings of Hecke elements.
//
// Text: one term per line in canonical order, "coeff * T[(z); word]", with
// multi-term coefficients parenthesized. The zero element is "0".

#include <map>
#include <string>
#include <string_view>

#include "prohecke/hecke.hpp"

namespace prohecke {

std::string emit_text(const HeckeAlgebra& H, const HeckeElement& h);
// Inverse of emit_text; also accepts '+'-free hand-written terms such as
// "T[s0*s1]" (coefficient 1, word lifted through the extension).
HeckeElement parse_text(const HeckeAlgebra& H, std::string_view text);

// {"metadata": {...}, "terms": [{"coeff", "z", "word", "omega"}, ...]}
std::string emit_json(const HeckeAlgebra& H, const HeckeElement& h, const std::map<std::string, std::string>& metadata);
HeckeElement parse_json(const HeckeAlgebra& H, std::string_view text);

std::string emit_latex(const HeckeAlgebra& H, const HeckeElement& h);

}  // namespace prohecke
