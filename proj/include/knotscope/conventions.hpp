#pragma once
//
// conventions.hpp -- the single place where the diagram conventions live.
//
// Every module derives signs, smoothings and variable substitutions from the
// rules below.  Do not restate these rules elsewhere; import them.
//
// PD code
// -------
// A crossing is written X[a,b,c,d]: the four arc labels around the crossing,
// listed counterclockwise starting from the incoming under-strand.  Drawing
// the under-strand pointing north, the slots are
//
//          c (N, under-out)
//     d (W) +----------+ b (E)
//          a (S, under-in)
//
// Arc labels run 1..2n and increase along the orientation of each component:
// arc a is followed by arc a+1, wrapping around within the component's label
// range.  Hence at every crossing c == succ(a), and the over-strand runs
// b -> d when d == succ(b), or d -> b when b == succ(d).  (For the 1-crossing
// kinks, where succession alone is ambiguous, the over-strand enters on the
// slot carrying the under-OUT arc, since the two passages alternate.)
//
// Crossing sign
// -------------
// sign(X[a,b,c,d]) = +1 if the over-strand runs b -> d, else -1.  Under this
// rule the bundled diagram  X[1,4,2,5] X[3,6,4,1] X[5,2,6,3]  has writhe +3
// and is taken as the right-handed trefoil; every downstream value (Jones,
// Khovanov gradings, the s-invariant sign) is calibrated against it.
//
// Smoothings
// ----------
// 0-smoothing (A): join slots (a,d) and (b,c).
// 1-smoothing (B): join slots (a,b) and (c,d).
// These are orientation-independent.  The Kauffman bracket weights the
// 0-smoothing by A and the 1-smoothing by A^-1, with circle value
// delta = -A^2 - A^-2 and <D> = sum_states A^(#0 - #1) delta^(circles-1).
//
// Jones / q conventions
// ---------------------
// V(t)   = (-A^3)^(-writhe) <D>  under  A = t^(-1/4)      (so t = A^-4)
// Jhat(q)= (q + q^-1) V(t -> q^2)                         (so t = q^2)
// With these choices V(right trefoil) = -t^4 + t^3 + t and
// Jhat(right trefoil) = q + q^3 + q^5 - q^9, which equals the graded Euler
// characteristic of its Khovanov homology.
//
// Khovanov gradings
// -----------------
// For a vertex v of the resolution cube of a diagram with n+ positive and n-
// negative crossings, a generator labelling the circles by {1,x} gets
//   i = |v| - n-
//   j = (#1-labels - #x-labels) + |v| + n+ - 2 n-
// so the 0-crossing unknot sits at (0, -1), (0, +1).  The Lee deformation
// adds the x.x = 1 terms, which raise j by 4; quantum degree then only
// filters.  The s-invariant is reported as s = (smin + smax)/2 where
// smin/smax are the filtration levels of the two surviving Lee generators;
// the right-handed trefoil gets s = +2.
//
#include <array>
#include <cstdint>

namespace knotscope {

// Slot indices into Crossing::arcs, matching the picture above.
enum Slot : int { kUnderIn = 0, kSlotEast = 1, kUnderOut = 2, kSlotWest = 3 };

// The two pairs of slots joined by each smoothing.
using SlotPairing = std::array<std::array<int, 2>, 2>;

inline constexpr SlotPairing smoothing_pairs(int resolution) {
  if (resolution == 0) return {{{kUnderIn, kSlotWest}, {kSlotEast, kUnderOut}}};
  return {{{kUnderIn, kSlotEast}, {kUnderOut, kSlotWest}}};
}

}  // namespace knotscope
