#pragma once

#include <string_view>

#include "hyperres/polynomial.hpp"

namespace hyperres {

// Parses "+ - * ^ ( )" expressions over integer literals and the declared
// variables; '*' is optional between factors, so "3x^2y" works.  Variable
// tokens are matched longest-first against the ring's names.  Errors carry
// the byte offset of the offending token.
Polynomial parse_polynomial(std::string_view text, RingPtr ring);

} // namespace hyperres
