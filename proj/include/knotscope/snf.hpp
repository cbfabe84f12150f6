#pragma once
// Smith normal form over the integers.  Small matrices only; used as an
// oracle for abelianization checks.

#include <vector>

#include "knotscope/ints.hpp"

namespace knotscope {

using IntMatrix = std::vector<std::vector<Int>>;

// Invariant factors d1 | d2 | ... (zeros included up to min(rows, cols)).
std::vector<Int> smith_invariant_factors(IntMatrix m);

}  // namespace knotscope
