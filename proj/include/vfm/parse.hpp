#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "vfm/poly.hpp"

namespace vfm {

/// Position of the first character of a parsed fragment inside its source
/// file, so ParseError can point at the right place.
struct SourcePos {
  int line = 1;
  int column = 1;
};

/// Parse a polynomial over `vars`. Grammar: integers, `p/q` (division by a
/// nonzero constant), `i` for the imaginary unit, `^` with a non-negative
/// integer exponent, `*` or juxtaposition for products, parentheses.
Poly parse_poly(std::string_view text, const std::vector<std::string>& vars, SourcePos at = {});

/// Parse a constant expression (no variables).
ExactScalar parse_scalar(std::string_view text, SourcePos at = {});

/// Parse a vector field such as `z2 d0 + z1 d0` or `x^2 dy`. The token
/// `d<s>` is the partial derivative along variable `z<s>` if declared, else
/// along the variable named `<s>`. Returns one component per variable.
std::vector<Poly> parse_field(std::string_view text, const std::vector<std::string>& vars,
                              SourcePos at = {});

/// Derivative token for a variable: "z3" -> "d3", "x" -> "dx".
std::string derivative_token(const std::string& var);

/// Print components in the grammar accepted by parse_field.
std::string field_str(const std::vector<Poly>& components, const std::vector<std::string>& vars);

}  // namespace vfm
