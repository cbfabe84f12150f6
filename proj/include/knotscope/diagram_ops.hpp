#pragma once
// Diagram-level operations: mirror, reverse, crossing change, connected sum,
// tangle mutation, Reidemeister moves, greedy simplification.
//
// All operations are pure: they take diagrams by const reference and return
// freshly relabelled diagrams (arc labels are canonical along the traversal).
// Knot-only operations throw KnotRequired on links.

#include <array>
#include <optional>
#include <vector>

#include "knotscope/pd.hpp"

namespace knotscope {

PlanarDiagram mirror(const PlanarDiagram& d);
PlanarDiagram reverse(const PlanarDiagram& d);
PlanarDiagram crossing_change(const PlanarDiagram& d, int crossing_index);

// Splice d2 into d1 at the chosen arcs (1-based labels).
PlanarDiagram connected_sum(const PlanarDiagram& d1, const PlanarDiagram& d2,
                            int arc1 = 1, int arc2 = 1);

// A 4-ended tangle: a subset of crossings whose boundary consists of exactly
// four arcs, listed in circular order around the tangle disk.
struct TangleRegion {
  std::vector<int> crossings;        // 0-based crossing indices
  std::array<int, 4> boundary_arcs;  // circular order
};

struct MutationResult {
  PlanarDiagram diagram;
  TangleRegion mapped_region;  // the same region in the new labelling
};

// Rotate the tangle 180 degrees in the projection plane (boundary arcs
// repaired antipodally), reversing the tangle's strands when orientations
// demand it.  Involution: mutating the mapped region restores the input's
// Gauss code.
MutationResult mutate(const PlanarDiagram& d, const TangleRegion& region);

enum class ReidemeisterMove { R1Plus, R1Minus, R2Plus, R2Minus, R3 };

struct ReidemeisterSite {
  // R1+: a = arc, sign = kink sign, over_first = passing order.
  // R1-: a = crossing index.
  // R2+: a, b = the two arcs (must cobound a face).
  // R2-: a, b = the two crossing indices.
  // R3:  a, b, c = the three crossings of a triangle face.
  int a = -1, b = -1, c = -1;
  bool over_first = true;
  int sign = +1;
};

// Throws ParseError when the site does not admit the requested move.
PlanarDiagram apply_reidemeister(const PlanarDiagram& d, ReidemeisterMove move,
                                 const ReidemeisterSite& site);

// All sites admitting the given move, in a deterministic order.
std::vector<ReidemeisterSite> reidemeister_sites(const PlanarDiagram& d,
                                                 ReidemeisterMove move);

// Repeatedly apply crossing-decreasing R1-/R2- moves until none applies.
PlanarDiagram greedy_simplify(const PlanarDiagram& d);

}  // namespace knotscope
