#pragma once

// Text forms of polynomials: "T^12+T^3", "(g+1)*T^2+g", "x^2+x*y+y^2+1".
// Integer literals are element encodings, `g` is the root of the field
// modulus, and `-`, `*`, `^` and parentheses are accepted.

#include <string>

#include "fqtype/bipoly.hpp"
#include "fqtype/unipoly.hpp"

namespace fqtype {

UniPoly parse_unipoly(const FieldPtr& field, const std::string& text);
BiPoly parse_bipoly(const FieldPtr& field, const std::string& text);

/// Descending degree, coefficients as encodings, unit coefficients omitted.
std::string to_string(const UniPoly& f, char var = 'T');
/// Terms by descending total degree, then descending x degree.
std::string to_string(const BiPoly& F);

}  // namespace fqtype
