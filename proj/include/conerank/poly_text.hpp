#pragma once

#include <string>
#include <vector>

#include "conerank/polynomial.hpp"

namespace conerank {

/// Canonical text: terms in descending grevlex order, factors joined by '*',
/// powers with '^', explicit " + " / " - " separators, e.g.
/// "x1^2*x3^2 + x0^2*x1 - x0*x1*x3". GF(p) coefficients print as residues
/// in [0, p). The zero polynomial prints as "0".
std::string format_polynomial(const Polynomial& f, const std::vector<std::string>& names);

std::string format_monomial(const Monomial& m, const std::vector<std::string>& names);

/// Parses sums of terms like "3/2*x1^2*x3 - x0 + 7". Whitespace is ignored
/// and factors may appear in any order. Throws InvalidInput on bad syntax or
/// an unknown variable name.
Polynomial parse_polynomial(const std::string& text, const std::vector<std::string>& names,
                            Field field);

}  // namespace conerank
