#pragma once
// Kauffman bracket state sum and the Jones polynomial.
//
// The fast path contracts the diagram one crossing at a time, keeping a map
// from boundary matchings to accumulated bracket weights (all states sharing
// a partial matching are merged); the naive 2^n state enumeration is kept as
// the oracle for small diagrams.

#include <cstdint>
#include <vector>

#include "knotscope/laurent.hpp"
#include "knotscope/pd.hpp"

namespace knotscope {

// A single Kauffman state: resolution choice per crossing (bit i = 1 means
// the 1-smoothing at crossing i) and the resulting circle count.
struct BracketState {
  std::uint64_t resolutions = 0;
  int circles = 0;
};

// Circle count of one resolution of the whole diagram.
int state_circle_count(const PlanarDiagram& d, std::uint64_t resolutions);

// All 2^n states (oracle; throws SizeLimitExceeded above 20 crossings).
std::vector<BracketState> enumerate_bracket_states(const PlanarDiagram& d);

// <D> in the variable A.
LaurentPoly kauffman_bracket(const PlanarDiagram& d);
LaurentPoly kauffman_bracket_naive(const PlanarDiagram& d);

// (-A^3)^(-writhe) <D> rewritten in t via A = t^(-1/4); knots only.
LaurentPoly jones_polynomial(const PlanarDiagram& d, bool use_oracle = false);

// (q + q^-1) * V(t -> q^2): the graded Euler characteristic of Khovanov
// homology.
LaurentPoly unnormalized_jones(const PlanarDiagram& d, bool use_oracle = false);

// Greedy crossing ordering that keeps the scan boundary small; shared with
// the homology scan.
std::vector<int> scan_order(const PlanarDiagram& d);

}  // namespace knotscope
