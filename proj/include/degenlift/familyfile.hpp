#ifndef DEGENLIFT_FAMILYFILE_HPP
#define DEGENLIFT_FAMILYFILE_HPP

#include <string>
#include <string_view>

#include "degenlift/family.hpp"

namespace degenlift {

// Plain-text family description:
//
//   [ambient]
//   n = 3
//   degree = 4
//   coordinates = x y z w
//   chart = w            (optional)
//   [factors]
//   x                    (one linear form per line)
//   [params]
//   a b                  (optional section)
//   [f]
//   1 x^4                (coefficient, then a monomial in the coordinates)
//   (a + 1) x^2*w^2      (parameter coefficients in parentheses)
//
// '#' starts a comment. Syntax errors raise ParseError with the line and
// column; the parsed family is validated.
FamilySpec parse_family(std::string_view text);
FamilySpec load_family(const std::string& path);

// Canonical text; parse_family(serialize_family(s)) == s.
std::string serialize_family(const FamilySpec& spec);

}  // namespace degenlift

#endif
