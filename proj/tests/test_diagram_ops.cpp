#include <random>

#include "doctest.h"
#include "knotscope/diagram_ops.hpp"

using namespace knotscope;

namespace {
const char* kTrefoil = "X[1,4,2,5] X[3,6,4,1] X[5,2,6,3]";
const char* kFigure8 = "X[4,2,5,1] X[8,6,1,5] X[6,3,7,4] X[2,7,3,8]";

PlanarDiagram trefoil() { return PlanarDiagram::parse(kTrefoil); }
PlanarDiagram figure8() { return PlanarDiagram::parse(kFigure8); }

PlanarDiagram random_wiggle(const PlanarDiagram& start, int moves, unsigned seed,
                            int max_crossings = 12) {
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

TEST_CASE("mirror is an involution and flips writhe") {
  PlanarDiagram u = PlanarDiagram::unknot();
  CHECK(mirror(u).is_zero_crossing_unknot());

  PlanarDiagram t = trefoil();
  PlanarDiagram m = mirror(t);
  CHECK(m.writhe() == -3);
  CHECK(mirror(m).gauss_code().str() == t.gauss_code().str());

  PlanarDiagram f = figure8();
  CHECK(mirror(f).writhe() == 0);
  CHECK(mirror(mirror(f)).gauss_code().str() == f.gauss_code().str());
}

TEST_CASE("reverse is an involution up to relabelling") {
  PlanarDiagram t = trefoil();
  PlanarDiagram r = reverse(t);
  CHECK(r.writhe() == t.writhe());
  CHECK(reverse(r).gauss_code().canonical() == t.gauss_code().canonical());
}

TEST_CASE("crossing_change is an involution") {
  PlanarDiagram t = trefoil();
  for (int i = 0; i < 3; ++i) {
    PlanarDiagram c = crossing_change(t, i);
    CHECK(c.writhe() == 1);  // one +1 flipped to -1
    CHECK(crossing_change(c, i).gauss_code().str() == t.gauss_code().str());
  }
  CHECK_THROWS_AS(crossing_change(t, 5), ParseError);
}

TEST_CASE("crossing_change unknots the trefoil") {
  PlanarDiagram t = trefoil();
  for (int i = 0; i < 3; ++i) {
    PlanarDiagram s = greedy_simplify(crossing_change(t, i));
    CHECK(s.is_zero_crossing_unknot());
  }
}

TEST_CASE("connected sum basics") {
  PlanarDiagram t = trefoil();
  CHECK(connected_sum(PlanarDiagram::unknot(), t) == t);
  CHECK(connected_sum(t, PlanarDiagram::unknot()) == t);
  PlanarDiagram s = connected_sum(t, t, 2, 3);
  CHECK(s.crossing_count() == 6);
  CHECK(s.is_knot());
  CHECK(s.writhe() == 6);
  PlanarDiagram sf = connected_sum(t, figure8(), 1, 1);
  CHECK(sf.crossing_count() == 7);
  CHECK(sf.writhe() == 3);
  CHECK(sf.is_planar_connected());
}

TEST_CASE("R1 moves add and remove kinks") {
  PlanarDiagram u = PlanarDiagram::unknot();
  ReidemeisterSite s;
  s.a = 1;
  s.sign = +1;
  PlanarDiagram k = apply_reidemeister(u, ReidemeisterMove::R1Plus, s);
  CHECK(k.crossing_count() == 1);
  CHECK(k.writhe() == 1);
  ReidemeisterSite back;
  back.a = 0;
  PlanarDiagram u2 = apply_reidemeister(k, ReidemeisterMove::R1Minus, back);
  CHECK(u2.is_zero_crossing_unknot());

  // R1+ then R1- at the created kink restores the Gauss code.
  PlanarDiagram t = trefoil();
  for (const auto& site : reidemeister_sites(t, ReidemeisterMove::R1Plus)) {
    PlanarDiagram kk = apply_reidemeister(t, ReidemeisterMove::R1Plus, site);
    CHECK(kk.crossing_count() == 4);
    CHECK(kk.is_planar_connected());
    auto sites = reidemeister_sites(kk, ReidemeisterMove::R1Minus);
    REQUIRE(!sites.empty());
    PlanarDiagram tt = apply_reidemeister(kk, ReidemeisterMove::R1Minus, sites.front());
    CHECK(tt.gauss_code().canonical() == t.gauss_code().canonical());
  }
}

TEST_CASE("R2 moves") {
  PlanarDiagram t = trefoil();
  auto sites = reidemeister_sites(t, ReidemeisterMove::R2Plus);
  REQUIRE(!sites.empty());
  int tried = 0;
  for (const auto& s : sites) {
    PlanarDiagram d = apply_reidemeister(t, ReidemeisterMove::R2Plus, s);
    CHECK(d.crossing_count() == 5);
    CHECK(d.is_planar_connected());
    CHECK(d.writhe() == t.writhe());
    auto back = reidemeister_sites(d, ReidemeisterMove::R2Minus);
    REQUIRE(!back.empty());
    PlanarDiagram r = apply_reidemeister(d, ReidemeisterMove::R2Minus, back.front());
    CHECK(r.crossing_count() <= 5);
    if (++tried >= 8) break;
  }
}

TEST_CASE("R3 moves exist on a 6-crossing diagram and preserve planarity") {
  // Build a diagram with a triangle by wiggling the trefoil.
  std::mt19937 rng(5);
  int found = 0;
  for (unsigned seed = 0; seed < 40 && found < 3; ++seed) {
    PlanarDiagram d = random_wiggle(trefoil(), 6, seed);
    auto sites = reidemeister_sites(d, ReidemeisterMove::R3);
    for (const auto& s : sites) {
      PlanarDiagram e = apply_reidemeister(d, ReidemeisterMove::R3, s);
      CHECK(e.crossing_count() == d.crossing_count());
      CHECK(e.is_planar_connected());
      CHECK(e.writhe() == d.writhe());
      ++found;
      break;
    }
  }
  CHECK(found >= 1);
}

TEST_CASE("greedy_simplify") {
  CHECK(greedy_simplify(PlanarDiagram::parse("X[1,1,2,2]")).is_zero_crossing_unknot());
  PlanarDiagram t = trefoil();
  CHECK(greedy_simplify(t).gauss_code().str() == t.gauss_code().str());

  // Simplification is idempotent and never increases crossings.
  for (unsigned seed = 0; seed < 10; ++seed) {
    PlanarDiagram d = random_wiggle(PlanarDiagram::unknot(), 10, seed, 10);
    PlanarDiagram s = greedy_simplify(d);
    CHECK(s.crossing_count() <= d.crossing_count());
    CHECK(greedy_simplify(s).gauss_code().canonical() == s.gauss_code().canonical());
  }
}

TEST_CASE("writhe under moves") {
  for (unsigned seed = 0; seed < 6; ++seed) {
    PlanarDiagram d = random_wiggle(trefoil(), 4, seed);
    for (const auto& s : reidemeister_sites(d, ReidemeisterMove::R1Plus)) {
      PlanarDiagram e = apply_reidemeister(d, ReidemeisterMove::R1Plus, s);
      CHECK(e.writhe() == d.writhe() + s.sign);
      break;
    }
    auto r2 = reidemeister_sites(d, ReidemeisterMove::R2Plus);
    if (!r2.empty()) {
      PlanarDiagram e = apply_reidemeister(d, ReidemeisterMove::R2Plus, r2.front());
      CHECK(e.writhe() == d.writhe());
    }
  }
}

TEST_CASE("single-crossing mutation is a relabelling (trivial rotation)") {
  for (const char* code : {kTrefoil, kFigure8}) {
    PlanarDiagram d = PlanarDiagram::parse(code);
    for (int ci = 0; ci < d.crossing_count(); ++ci) {
      TangleRegion r;
      r.crossings = {ci};
      r.boundary_arcs = d.crossing(ci).arcs;  // circular order around the disk
      MutationResult m = mutate(d, r);
      CHECK(m.diagram.crossing_count() == d.crossing_count());
      CHECK(m.diagram.gauss_code().canonical() == d.gauss_code().canonical());
    }
  }
}

TEST_CASE("mutation is an involution on Gauss codes") {
  PlanarDiagram t = trefoil();
  // Tangle: crossings {0,1}; boundary arcs {2,5,3,6} are the four arcs of
  // the complementary crossing X[5,2,6,3], whose slot order gives the
  // circular order around the tangle disk.
  TangleRegion r;
  r.crossings = {0, 1};
  r.boundary_arcs = {5, 2, 6, 3};
  MutationResult m = mutate(t, r);
  CHECK(m.diagram.crossing_count() == 3);
  CHECK(m.diagram.is_knot());
  CHECK(m.diagram.is_planar_connected());
  MutationResult back = mutate(m.diagram, m.mapped_region);
  CHECK(back.diagram.gauss_code().canonical() == t.gauss_code().canonical());
}

TEST_CASE("mutation rejects bad regions") {
  PlanarDiagram f = figure8();
  TangleRegion r;
  r.crossings = {0};
  r.boundary_arcs = {1, 2, 3, 4};
  // Wrong declared arcs for this subset.
  CHECK_THROWS_AS(mutate(f, r), ParseError);
}
