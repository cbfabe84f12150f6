#pragma once
// Wirtinger presentations of the knot group, Fox-calculus Alexander
// polynomials, Fox colorings, and the genus lower bound.

#include <string>
#include <vector>

#include "knotscope/laurent.hpp"
#include "knotscope/pd.hpp"

namespace knotscope {

// One relation per crossing: x_out = x_over^eps * x_in * x_over^-eps.
struct WirtingerRelation {
  int in = 0;    // generator index of the incoming under-arc
  int over = 0;  // generator index of the over-strand
  int out = 0;   // generator index of the outgoing under-arc
  int eps = +1;  // crossing sign
};

struct WirtingerPresentation {
  int generators = 0;  // one per arc of the knot (over-passes joined)
  std::vector<WirtingerRelation> relations;
  // PD arc label -> generator index (0-based); empty for the unknot.
  std::vector<int> arc_class;

  std::string str() const;  // <x1, x2 | x2 = x1 x3 x1^-1, ...>
};

WirtingerPresentation wirtinger_presentation(const PlanarDiagram& d);

// Fox derivatives of the relations under abelianization: one row per
// relation, one column per generator, entries in Z[t, t^-1].
using AlexanderMatrix = std::vector<std::vector<LaurentPoly>>;
AlexanderMatrix alexander_matrix(const WirtingerPresentation& w);

// Determinant of the matrix with one row and one column removed, in
// canonical form (unit-normalized).  Independent of the removed column.
LaurentPoly alexander_polynomial(const PlanarDiagram& d);

// As above, with an explicit choice of deleted column (for the
// column-independence checks).
LaurentPoly alexander_polynomial_with_column(const PlanarDiagram& d, int column);

// |Delta(-1)|; always odd for knots.
Int knot_determinant(const PlanarDiagram& d);

// degree_span(Delta)/2; the span is even by the symmetry of Delta.
int genus_lower_bound(const PlanarDiagram& d);

// Number of solutions over F_p of 2*over = in + out at every crossing;
// a power of p, and at least p.  Requires an odd prime.
Int fox_colorings_count(const PlanarDiagram& d, int p);

// Brute-force count of homomorphisms from the knot group to S3 (test
// utility; throws when the presentation has more than 12 generators).
long count_s3_homomorphisms(const WirtingerPresentation& w);

// Exact determinant of a square Laurent-polynomial matrix by fraction-free
// elimination.
LaurentPoly laurent_determinant(AlexanderMatrix m);

}  // namespace knotscope
