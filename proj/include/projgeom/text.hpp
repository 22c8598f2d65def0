#ifndef PROJGEOM_TEXT_HPP
#define PROJGEOM_TEXT_HPP

#include <string>
#include <string_view>

#include "projgeom/kernel.hpp"

namespace projgeom {

/// Parses a linear equation in x and y such as "y=2x+4", "x=-2", "y=1",
/// "2x+3y=1/2" or "y=-2/3*x". Coefficients are integers or "p/q".
/// Throws E_PARSE with the offending column and the expected token.
Line parse_line_spec(std::string_view text);

/// "(p/q, p/q)"; the "(x|y)" separator is accepted too.
Point parse_point(std::string_view text);

Scalar parse_scalar(std::string_view text);

/// "x=c", "y=c" or "y=m*x+k"; parse_line_spec(format_line(l)) == l.
std::string format_line(const Line& l);
std::string format_point(const Point& p);

}  // namespace projgeom

#endif  // PROJGEOM_TEXT_HPP
