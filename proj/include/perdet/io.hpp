#pragma once

#include "perdet/digraph.hpp"
#include "perdet/errors.hpp"
#include "perdet/matrix.hpp"
#include "perdet/pattern.hpp"
#include "perdet/rational.hpp"

#include <iosfwd>
#include <string>

namespace perdet {

// Exact rational from "3", "-1/2"; throws std::invalid_argument on anything else.
Rational parse_rational(const std::string& token);

// Matrix text format: line 1 is n, then n lines of n whitespace-separated
// rationals. Parse errors carry 1-based line/column positions.
SquareMatrix read_matrix(std::istream& in);
SquareMatrix read_matrix_file(const std::string& path);
void write_matrix(std::ostream& out, const SquareMatrix& a);

// Pattern text format: line 1 is "n kind" with kind "sign" or "zerostar",
// then n lines of symbols from {+,-,0} or {*,0} (spaces between symbols
// optional).
ZeroPattern read_pattern(std::istream& in);
ZeroPattern read_pattern_file(const std::string& path);
void write_pattern(std::ostream& out, const ZeroPattern& gamma);

// Digraph arc-list format: line 1 is n, then one "i j" line per arc.
Digraph read_digraph(std::istream& in);
void write_digraph(std::ostream& out, const Digraph& g);

} // namespace perdet
