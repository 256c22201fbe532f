#pragma once

#include <string>

#include "extcalc/functors.hpp"

namespace extcalc {

// Parses one functor atom written as a letter with optional power and twist,
// e.g. "G", "S^2", "L^3(1)", "I(2)".  Letters: G (divided power), L
// (exterior), S (symmetric), I (identity).  Omitted power defaults to 1 and
// omitted twist to 0.  Throws InvalidParams on malformed input or on values
// that do not fit the dimension type.
FunctorAtom parse_atom(const std::string& text);

// Parses a tensor word of atoms separated by '*', e.g. "G^2(1)*L^3".
// Whitespace around atoms and separators is ignored.  Throws InvalidParams
// on malformed input; an empty word is rejected.
FunctorWord parse_word(const std::string& text);

} // namespace extcalc
