#pragma once

#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "ortho/int_matrix.hpp"

namespace ortho {

/// Plain-text lattice instance:
///   q n
///   <n rows of n space-separated integers>
///   target: <n rationals "p/q" or integers>     (optional)
/// Lines starting with '#' and blank lines are ignored.
struct MatrixFile {
    int q = 2;
    int n = 1;
    IntMatrix basis{1, 1};
    std::optional<std::vector<Rat>> target;
};

MatrixFile parse_matrix_file(std::istream& in);
MatrixFile parse_matrix_file(const std::string& text);
std::string format_matrix_file(const MatrixFile& f);

/// Canonical "p/q" (or "p" when the denominator is 1).
std::string format_rational(const Rat& x);

/// Exact rational from "p", "-p", or "p/q" with q > 0. Throws ParseError.
Rat parse_rational(const std::string& token);

}  // namespace ortho
