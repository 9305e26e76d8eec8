#pragma once

#include "ainf/algebra.hpp"

#include <stdexcept>
#include <string>
#include <string_view>

namespace ainf {

struct ParseError : std::runtime_error {
    ParseError(int line, const std::string& what)
        : std::runtime_error("line " + std::to_string(line) + ": " + what), line(line) {}
    int line;
};

// Line-oriented algebra definition:
//   algebra <name>
//   basis e11:0 e22:0 e12:1
//   unit e11 + e22
//   product e11*e12 = e12
//   delta e22 -> e12
//   pairing e11.e12 = 1
//   end
// '#' starts a comment; unlisted products/images/pairs are zero; pairing
// symmetry is auto-completed. Throws ParseError with a line number.
GradedAlgebra parse_algebra(std::string_view text);
GradedAlgebra load_algebra_file(const std::string& path);

// Round-trip form: serialize(parse(text)) parses to an equal algebra.
std::string serialize_algebra(const GradedAlgebra& alg);

// Element syntax "2*e11 + 1/2*e12 - e22" over the given basis; "0" is zero.
Element parse_element(const BasisPtr& basis, std::string_view text, int line = 0);

bool algebras_equal(const GradedAlgebra& a, const GradedAlgebra& b);

} // namespace ainf
