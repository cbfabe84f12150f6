#include "knotscope/snf.hpp"

#include <algorithm>
#include <cstdlib>

namespace knotscope {

std::vector<Int> smith_invariant_factors(IntMatrix m) {
  const size_t rows = m.size();
  const size_t cols = rows ? m[0].size() : 0;
  const size_t rank_bound = std::min(rows, cols);
  std::vector<Int> factors;

  size_t r0 = 0, c0 = 0;
  while (r0 < rows && c0 < cols) {
    // Find a pivot with minimal absolute value in the working block.
    size_t pr = r0, pc = c0;
    Int best(0);
    for (size_t i = r0; i < rows; ++i)
      for (size_t j = c0; j < cols; ++j) {
        if (m[i][j] == 0) continue;
        Int a = abs(m[i][j]);
        if (best == 0 || a < best) {
          best = a;
          pr = i;
          pc = j;
        }
      }
    if (best == 0) break;
    std::swap(m[r0], m[pr]);
    for (size_t i = r0; i < rows; ++i) std::swap(m[i][c0], m[i][pc]);

    bool clean = true;
    for (size_t i = r0 + 1; i < rows; ++i) {
      if (m[i][c0] == 0) continue;
      Int q = m[i][c0] / m[r0][c0];
      for (size_t j = c0; j < cols; ++j) m[i][j] -= q * m[r0][j];
      if (m[i][c0] != 0) clean = false;
    }
    for (size_t j = c0 + 1; j < cols; ++j) {
      if (m[r0][j] == 0) continue;
      Int q = m[r0][j] / m[r0][c0];
      for (size_t i = r0; i < rows; ++i) m[i][j] -= q * m[i][c0];
      if (m[r0][j] != 0) clean = false;
    }
    if (!clean) continue;  // smaller remainders appeared; pick a new pivot

    // Divisibility condition: the pivot must divide the remaining block.
    bool divides = true;
    for (size_t i = r0 + 1; i < rows && divides; ++i)
      for (size_t j = c0 + 1; j < cols && divides; ++j)
        if (m[i][j] % m[r0][c0] != 0) {
          // Add row i to row r0 and restart this pivot.
          for (size_t k = c0; k < cols; ++k) m[r0][k] += m[i][k];
          divides = false;
        }
    if (!divides) continue;

    factors.push_back(abs(m[r0][c0]));
    ++r0;
    ++c0;
  }
  while (factors.size() < rank_bound) factors.push_back(Int(0));
  return factors;
}

}  // namespace knotscope
