#pragma once

#include <string>
#include <vector>

#include "poly.hpp"

namespace gradecheck {

// Parsed ring description:
//   ring GF(32003)[x,y]      (or QQ[...])
//   ideal x^3*y - x*y^3, ...
// Whitespace-insensitive, '#' starts a comment, '^' powers, '*' products,
// integer coefficients. The ideal statement may be omitted (zero ideal) and
// may repeat; generators must be homogeneous of degree >= 1.
struct ParsedInput {
  RingPtr ring;
  std::vector<Polynomial> generators;
  std::vector<std::string> warnings;
};

ParsedInput parse_input(const std::string& text, size_t pair_budget = 100000);

// Comma-separated polynomial expressions over an existing ring (CLI
// arguments such as --sop).
std::vector<Polynomial> parse_polynomial_list(const RingPtr& ring, const std::string& text);

}  // namespace gradecheck
