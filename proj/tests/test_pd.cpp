#include <map>
#include <random>

#include "doctest.h"
#include "knotscope/pd.hpp"

using namespace knotscope;

namespace {
const char* kTrefoil = "X[1,4,2,5] X[3,6,4,1] X[5,2,6,3]";
const char* kFigure8 = "X[4,2,5,1] X[8,6,1,5] X[6,3,7,4] X[2,7,3,8]";
}  // namespace

TEST_CASE("parse validates the trefoil") {
  PlanarDiagram d = PlanarDiagram::parse(kTrefoil);
  CHECK(d.crossing_count() == 3);
  CHECK(d.component_count() == 1);
  CHECK(d.is_knot());
  CHECK(d.writhe() == 3);
  for (const Crossing& c : d.crossings()) CHECK(c.sign == 1);
  CHECK(d.str() == kTrefoil);
  CHECK(PlanarDiagram::parse(d.str()) == d);
  CHECK(d.is_planar_connected());
  CHECK(d.face_count() == 5);
}

TEST_CASE("figure-eight parses") {
  PlanarDiagram d = PlanarDiagram::parse(kFigure8);
  CHECK(d.crossing_count() == 4);
  CHECK(d.is_knot());
  CHECK(d.writhe() == 0);
  CHECK(d.is_planar_connected());
}

TEST_CASE("unknot designated value") {
  PlanarDiagram u = PlanarDiagram::parse("U");
  CHECK(u.is_zero_crossing_unknot());
  CHECK(u.crossing_count() == 0);
  CHECK(u.component_count() == 1);
  CHECK(u.writhe() == 0);
  CHECK(u.str() == "U");
  CHECK_THROWS_AS(PlanarDiagram::parse(""), ParseError);
}

TEST_CASE("kink diagrams and their signs") {
  PlanarDiagram neg = PlanarDiagram::parse("X[1,1,2,2]");
  CHECK(neg.crossing_count() == 1);
  CHECK(neg.is_knot());
  CHECK(neg.writhe() == -1);
  PlanarDiagram pos = PlanarDiagram::parse("X[1,2,2,1]");
  CHECK(pos.writhe() == 1);
  PlanarDiagram pos2 = PlanarDiagram::parse("X[2,1,1,2]");
  CHECK(pos2.writhe() == 1);
  PlanarDiagram neg2 = PlanarDiagram::parse("X[2,2,1,1]");
  CHECK(neg2.writhe() == -1);
}

TEST_CASE("parser rejects malformed input") {
  CHECK_THROWS_AS(PlanarDiagram::parse("X[1,4,2"), ParseError);
  CHECK_THROWS_AS(PlanarDiagram::parse("Y[1,4,2,5]"), ParseError);
  // label appearing three times
  CHECK_THROWS_AS(PlanarDiagram::parse("X[1,1,2,1]"), ParseError);
  // labels out of range
  CHECK_THROWS_AS(PlanarDiagram::parse("X[1,7,2,5] X[3,6,4,1] X[5,2,6,3]"), ParseError);
  // succession broken: under-out must follow under-in
  CHECK_THROWS_AS(PlanarDiagram::parse("X[1,4,3,5] X[2,6,4,1] X[5,2,6,3]"), ParseError);
}

TEST_CASE("parser reports the offending label") {
  try {
    PlanarDiagram::parse("X[1,1,2,1]");
    CHECK(false);
  } catch (const ParseError& e) {
    CHECK(e.label() == 1);
  }
}

TEST_CASE("links parse but are flagged multi-component") {
  // Two-component link: a 2-crossing clasp.
  PlanarDiagram l = PlanarDiagram::parse("X[1,3,2,4] X[2,3,1,4]");
  CHECK(l.component_count() == 2);
  CHECK_FALSE(l.is_knot());
  CHECK_THROWS_AS(l.gauss_code(), KnotRequired);
}

TEST_CASE("gauss code of the trefoil") {
  PlanarDiagram d = PlanarDiagram::parse(kTrefoil);
  GaussCode g = d.gauss_code();
  CHECK(g.entries().size() == 6);
  int overs = 0, unders = 0;
  std::map<int, int> visits;
  for (const auto& e : g.entries()) {
    (e.over ? overs : unders)++;
    visits[e.crossing]++;
    CHECK(e.sign == 1);
  }
  CHECK(overs == 3);
  CHECK(unders == 3);
  for (auto [c, v] : visits) CHECK(v == 2);
  CHECK(g.canonical() == g.canonical());
}

TEST_CASE("randomized label corruption is rejected") {
  std::mt19937 rng(23);
  PlanarDiagram base = PlanarDiagram::parse(kFigure8);
  std::uniform_int_distribution<int> ci(0, 3), slot(0, 3), lab(1, 8);
  int rejected = 0, accepted = 0;
  for (int it = 0; it < 300; ++it) {
    std::vector<std::array<int, 4>> tuples;
    for (const auto& c : base.crossings()) tuples.push_back(c.arcs);
    tuples[ci(rng)][slot(rng)] = lab(rng);
    try {
      PlanarDiagram d = PlanarDiagram::from_tuples(tuples);
      ++accepted;  // only possible when the corruption restored a valid code
      bool same = true;
      for (int i = 0; i < 4; ++i)
        if (!(tuples[i] == base.crossing(i).arcs)) same = false;
      CHECK(same);
    } catch (const ParseError&) {
      ++rejected;
    }
  }
  CHECK(rejected > 0);
  CHECK(rejected + accepted == 300);
}
