#include <random>

#include "doctest.h"
#include "knotscope/bracket.hpp"
#include "knotscope/diagram_ops.hpp"
#include "knotscope/wirtinger.hpp"

using namespace knotscope;

namespace {
const char* kTrefoil = "X[1,4,2,5] X[3,6,4,1] X[5,2,6,3]";
const char* kFigure8 = "X[4,2,5,1] X[8,6,1,5] X[6,3,7,4] X[2,7,3,8]";

LaurentPoly lp(const char* s) { return LaurentPoly::parse(s); }

PlanarDiagram random_wiggle(const PlanarDiagram& start, int moves, unsigned seed,
                            int max_crossings = 10) {
  std::mt19937 rng(seed);
  PlanarDiagram d = start;
  for (int i = 0; i < moves; ++i) {
    std::vector<std::pair<ReidemeisterMove, ReidemeisterSite>> options;
    for (ReidemeisterMove m : {ReidemeisterMove::R1Plus, ReidemeisterMove::R1Minus,
                               ReidemeisterMove::R2Plus, ReidemeisterMove::R2Minus,
                               ReidemeisterMove::R3}) {
      if (d.crossing_count() >= max_crossings &&
          (m == ReidemeisterMove::R1Plus || m == ReidemeisterMove::R2Plus))
        continue;
      for (const auto& s : reidemeister_sites(d, m)) options.emplace_back(m, s);
    }
    if (options.empty()) break;
    auto [m, s] = options[std::uniform_int_distribution<size_t>(0, options.size() - 1)(rng)];
    d = apply_reidemeister(d, m, s);
  }
  return d;
}

}  // namespace

TEST_CASE("bracket of the unknot and kinks") {
  CHECK(kauffman_bracket(PlanarDiagram::unknot()) == LaurentPoly::one());
  // Negative kink: -A^-3; positive kink: -A^3.
  CHECK(kauffman_bracket(PlanarDiagram::parse("X[1,1,2,2]")) == LaurentPoly(Int(-1), -3));
  CHECK(kauffman_bracket(PlanarDiagram::parse("X[1,2,2,1]")) == LaurentPoly(Int(-1), 3));
  CHECK(kauffman_bracket_naive(PlanarDiagram::parse("X[1,1,2,2]")) ==
        LaurentPoly(Int(-1), -3));
}

TEST_CASE("trefoil state counts match the resolution cube corners") {
  PlanarDiagram t = PlanarDiagram::parse(kTrefoil);
  CHECK(state_circle_count(t, 0b000) == 2);
  CHECK(state_circle_count(t, 0b111) == 3);
  auto states = enumerate_bracket_states(t);
  CHECK(states.size() == 8);
}

TEST_CASE("scan bracket equals naive bracket") {
  for (const char* code : {kTrefoil, kFigure8}) {
    PlanarDiagram d = PlanarDiagram::parse(code);
    CHECK(kauffman_bracket(d) == kauffman_bracket_naive(d));
  }
  for (unsigned seed = 0; seed < 12; ++seed) {
    PlanarDiagram d = random_wiggle(PlanarDiagram::parse(kTrefoil), 5, seed);
    CHECK(kauffman_bracket(d) == kauffman_bracket_naive(d));
  }
}

TEST_CASE("jones values") {
  CHECK(jones_polynomial(PlanarDiagram::unknot()) == LaurentPoly::one());
  CHECK(jones_polynomial(PlanarDiagram::parse("X[1,1,2,2]")) == LaurentPoly::one());
  PlanarDiagram t = PlanarDiagram::parse(kTrefoil);
  CHECK(jones_polynomial(t) == lp("-t^4 + t^3 + t"));
  CHECK(jones_polynomial(t, /*use_oracle=*/true) == lp("-t^4 + t^3 + t"));
  // Figure-eight is amphichiral: V(t) = V(1/t).
  PlanarDiagram f = PlanarDiagram::parse(kFigure8);
  LaurentPoly vf = jones_polynomial(f);
  CHECK(vf == lp("t^2 - t + 1 - t^-1 + t^-2"));
  CHECK(vf.invert_variable() == vf);
}

TEST_CASE("jones of the mirror substitutes t -> 1/t") {
  for (const char* code : {kTrefoil, kFigure8}) {
    PlanarDiagram d = PlanarDiagram::parse(code);
    CHECK(jones_polynomial(mirror(d)) == jones_polynomial(d).invert_variable());
  }
}

TEST_CASE("jones is multiplicative under connected sum") {
  PlanarDiagram t = PlanarDiagram::parse(kTrefoil);
  PlanarDiagram f = PlanarDiagram::parse(kFigure8);
  CHECK(jones_polynomial(connected_sum(t, f)) ==
        jones_polynomial(t) * jones_polynomial(f));
}

TEST_CASE("jones invariance under random Reidemeister sequences") {
  PlanarDiagram t = PlanarDiagram::parse(kTrefoil);
  LaurentPoly vt = jones_polynomial(t);
  LaurentPoly dt = alexander_polynomial(t);
  for (unsigned seed = 100; seed < 120; ++seed) {
    PlanarDiagram d = random_wiggle(t, 8, seed);
    CHECK(jones_polynomial(d) == vt);
    CHECK(alexander_polynomial(d) == dt);
  }
}

TEST_CASE("unnormalized jones") {
  CHECK(unnormalized_jones(PlanarDiagram::unknot()) == lp("t + t^-1"));  // q + 1/q
  PlanarDiagram t = PlanarDiagram::parse(kTrefoil);
  CHECK(unnormalized_jones(t) == lp("-t^9 + t^5 + t^3 + t"));
  // eval at q=1 gives 2 for any knot
  CHECK(unnormalized_jones(t).eval(Rat(1)) == Rat(2));
  CHECK(unnormalized_jones(PlanarDiagram::parse(kFigure8)).eval(Rat(1)) == Rat(2));
}

TEST_CASE("jones is invariant under mutation") {
  PlanarDiagram t = PlanarDiagram::parse(kTrefoil);
  TangleRegion r;
  r.crossings = {0, 1};
  r.boundary_arcs = {5, 2, 6, 3};
  MutationResult m = mutate(t, r);
  CHECK(jones_polynomial(m.diagram) == jones_polynomial(t));
  CHECK(alexander_polynomial(m.diagram) == alexander_polynomial(t));
}
