#pragma once

#include <string_view>
#include <vector>

#include "supercoinv/polynomial.hpp"

namespace supercoinv::detail {

struct ParsedTerm {
  Rational coeff;
  Monomial bosonic;
  std::vector<int> fermionic;  // 1-based theta indices in written order
};

// Parses sums of terms of the shape c*x1^a1*...*t3*t5 over variables
// 1..nvars. Whitespace is rejected; the canonical form has none.
std::vector<ParsedTerm> parse_terms(std::string_view text, int nvars);

}  // namespace supercoinv::detail
