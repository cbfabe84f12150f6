#include "knotscope/diagram_ops.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <set>

namespace knotscope {

namespace {

// ---------------------------------------------------------------------------
// Passing-list editor.  A knot diagram is the cyclic sequence of its 2n
// crossing passages in strand order; arc k is the segment entering the k-th
// passing.  Moves splice this sequence and re-emit a canonically labelled PD.

struct Passing {
  int crossing = -1;  // id into signs/alive arrays
  bool over = false;
};

struct Strand {
  std::vector<Passing> passings;  // cyclic strand order
  std::vector<int> signs;         // per crossing id
};

Strand strand_of(const PlanarDiagram& d) {
  if (!d.is_knot()) throw KnotRequired("diagram surgery");
  Strand s;
  s.signs.resize(d.crossing_count());
  for (int ci = 0; ci < d.crossing_count(); ++ci) s.signs[ci] = d.crossing(ci).sign;
  for (int a = 1; a <= d.arc_count(); ++a) {
    auto [ci, over] = d.head_passage(a);
    s.passings.push_back({ci, over});
  }
  return s;
}

struct EmitResult {
  PlanarDiagram diagram;
  std::vector<int> crossing_index;  // old crossing id -> new index (-1 if gone)
};

EmitResult emit(const Strand& s) {
  const int m2 = static_cast<int>(s.passings.size());
  if (m2 == 0) return {PlanarDiagram::unknot(), std::vector<int>(s.signs.size(), -1)};
  if (m2 % 2 != 0) throw InternalError("emit: odd number of passings");
  const int m = m2 / 2;

  // Positions of each crossing's passings.  Crossings are emitted in id
  // order, so operations that only edit a crossing keep the others' indices.
  std::map<int, std::pair<int, int>> pos;  // id -> (under pos, over pos)
  for (int k = 0; k < m2; ++k) {
    const Passing& p = s.passings[k];
    auto [it, fresh] = pos.try_emplace(p.crossing, -1, -1);
    (void)fresh;
    (p.over ? it->second.second : it->second.first) = k;
  }
  if (static_cast<int>(pos.size()) != m)
    throw InternalError("emit: passing list does not pair crossings");
  std::vector<int> order;
  for (const auto& [id, p] : pos) order.push_back(id);

  auto in_arc = [m2](int k) { return k + 1; };
  auto out_arc = [m2](int k) { return (k + 1) % m2 + 1; };

  std::vector<std::array<int, 4>> tuples;
  for (int id : order) {
    auto [ku, ko] = pos.at(id);
    if (ku < 0 || ko < 0)
      throw InternalError("emit: crossing missing an over or under passing");
    int a = in_arc(ku), c = out_arc(ku);
    int oi = in_arc(ko), oo = out_arc(ko);
    if (s.signs.at(id) > 0)
      tuples.push_back({a, oi, c, oo});
    else
      tuples.push_back({a, oo, c, oi});
  }
  EmitResult r{PlanarDiagram::from_tuples(tuples), std::vector<int>(s.signs.size(), -1)};
  for (size_t i = 0; i < order.size(); ++i) r.crossing_index[order[i]] = static_cast<int>(i);
  // The derived signs must reproduce the stored ones.
  for (size_t i = 0; i < order.size(); ++i)
    if (r.diagram.crossing(static_cast<int>(i)).sign != s.signs[order[i]])
      throw InternalError("emit: sign drift during relabelling");
  return r;
}

void erase_positions(Strand& s, std::vector<int> positions) {
  std::sort(positions.rbegin(), positions.rend());
  for (int p : positions) s.passings.erase(s.passings.begin() + p);
}

// ---------------------------------------------------------------------------

bool r1_minus_applicable(const Strand& s, int crossing) {
  const int m2 = static_cast<int>(s.passings.size());
  for (int k = 0; k < m2; ++k) {
    int j = (k + 1) % m2;
    if (s.passings[k].crossing == crossing && s.passings[j].crossing == crossing)
      return true;
  }
  return false;
}

bool r2_minus_applicable(const Strand& s, int x, int y) {
  if (x == y) return false;
  if (s.signs[x] == s.signs[y]) return false;
  const int m2 = static_cast<int>(s.passings.size());
  bool over_adj = false, under_adj = false;
  for (int k = 0; k < m2; ++k) {
    int j = (k + 1) % m2;
    const Passing &p = s.passings[k], &q = s.passings[j];
    bool pair_xy = (p.crossing == x && q.crossing == y) || (p.crossing == y && q.crossing == x);
    if (!pair_xy) continue;
    if (p.over && q.over) over_adj = true;
    if (!p.over && !q.over) under_adj = true;
  }
  return over_adj && under_adj;
}

}  // namespace

PlanarDiagram mirror(const PlanarDiagram& d) {
  if (d.is_zero_crossing_unknot()) return d;
  if (d.is_knot()) {
    Strand s = strand_of(d);
    for (auto& p : s.passings) p.over = !p.over;
    for (auto& sg : s.signs) sg = -sg;
    return emit(s).diagram;
  }
  // Links: rotate each tuple to start at the new under-in (the old over-in).
  std::vector<std::array<int, 4>> tuples;
  for (const Crossing& c : d.crossings()) {
    const auto& a = c.arcs;
    if (c.sign > 0)
      tuples.push_back({a[1], a[2], a[3], a[0]});
    else
      tuples.push_back({a[3], a[0], a[1], a[2]});
  }
  return PlanarDiagram::from_tuples(tuples);
}

PlanarDiagram reverse(const PlanarDiagram& d) {
  if (d.is_zero_crossing_unknot()) return d;
  Strand s = strand_of(d);
  std::reverse(s.passings.begin(), s.passings.end());
  return emit(s).diagram;
}

PlanarDiagram crossing_change(const PlanarDiagram& d, int crossing_index) {
  if (crossing_index < 0 || crossing_index >= d.crossing_count())
    throw ParseError("crossing index " + std::to_string(crossing_index) + " out of range",
                     -1, crossing_index);
  if (d.is_knot()) {
    Strand s = strand_of(d);
    for (auto& p : s.passings)
      if (p.crossing == crossing_index) p.over = !p.over;
    s.signs[crossing_index] = -s.signs[crossing_index];
    return emit(s).diagram;
  }
  std::vector<std::array<int, 4>> tuples;
  for (int ci = 0; ci < d.crossing_count(); ++ci) {
    const Crossing& c = d.crossing(ci);
    const auto& a = c.arcs;
    if (ci != crossing_index) {
      tuples.push_back(a);
    } else if (c.sign > 0) {
      tuples.push_back({a[1], a[2], a[3], a[0]});
    } else {
      tuples.push_back({a[3], a[0], a[1], a[2]});
    }
  }
  return PlanarDiagram::from_tuples(tuples);
}

PlanarDiagram connected_sum(const PlanarDiagram& d1, const PlanarDiagram& d2,
                            int arc1, int arc2) {
  if (!d1.is_knot()) throw KnotRequired("connected_sum");
  if (!d2.is_knot()) throw KnotRequired("connected_sum");
  if (d1.is_zero_crossing_unknot()) return d2;
  if (d2.is_zero_crossing_unknot()) return d1;
  if (arc1 < 1 || arc1 > d1.arc_count())
    throw ParseError("connected_sum: arc " + std::to_string(arc1) + " out of range", arc1);
  if (arc2 < 1 || arc2 > d2.arc_count())
    throw ParseError("connected_sum: arc " + std::to_string(arc2) + " out of range", arc2);

  Strand s1 = strand_of(d1);
  Strand s2 = strand_of(d2);
  const int offset = static_cast<int>(s1.signs.size());

  // Arc k enters passing k-1 (0-based); splice d2's cycle, started so that
  // arc2 is the seam, into the middle of arc1.
  Strand out;
  out.signs = s1.signs;
  out.signs.insert(out.signs.end(), s2.signs.begin(), s2.signs.end());
  const int cut1 = arc1 - 1;  // insert before this position
  const int cut2 = arc2 - 1;
  for (int k = 0; k < cut1; ++k) out.passings.push_back(s1.passings[k]);
  const int m2b = static_cast<int>(s2.passings.size());
  for (int k = 0; k < m2b; ++k) {
    Passing p = s2.passings[(cut2 + k) % m2b];
    p.crossing += offset;
    out.passings.push_back(p);
  }
  for (int k = cut1; k < static_cast<int>(s1.passings.size()); ++k)
    out.passings.push_back(s1.passings[k]);
  return emit(out).diagram;
}

// ---------------------------------------------------------------------------
// Mutation

namespace {

// Which arcs have exactly one endpoint among the region's crossings.
std::vector<int> region_boundary_arcs(const PlanarDiagram& d, const std::vector<int>& region) {
  std::set<int> in_region(region.begin(), region.end());
  std::map<int, int> inside_ends;
  for (int ci : region)
    for (int s = 0; s < 4; ++s) inside_ends[d.crossing(ci).arcs[s]]++;
  std::vector<int> boundary;
  for (const auto& [arc, cnt] : inside_ends)
    if (cnt == 1) boundary.push_back(arc);
  return boundary;
}

bool region_connected(const PlanarDiagram& d, const std::vector<int>& region) {
  if (region.empty()) return true;
  std::set<int> in_region(region.begin(), region.end());
  // Union-find over region crossings joined by arcs internal to the region.
  std::map<int, int> parent;
  for (int c : region) parent[c] = c;
  std::function<int(int)> find = [&](int x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  std::map<int, std::vector<int>> arc_crossings;
  for (int ci : region)
    for (int s = 0; s < 4; ++s) arc_crossings[d.crossing(ci).arcs[s]].push_back(ci);
  for (const auto& [arc, cs] : arc_crossings)
    for (size_t i = 1; i < cs.size(); ++i) parent[find(cs[0])] = find(cs[i]);
  int root = find(region[0]);
  for (int c : region)
    if (find(c) != root) return false;
  return true;
}

}  // namespace

MutationResult mutate(const PlanarDiagram& d, const TangleRegion& region) {
  if (!d.is_knot()) throw KnotRequired("mutate");
  for (int ci : region.crossings)
    if (ci < 0 || ci >= d.crossing_count())
      throw ParseError("mutate: crossing index out of range", -1, ci);

  std::vector<int> boundary = region_boundary_arcs(d, region.crossings);
  std::array<int, 4> declared = region.boundary_arcs;
  {
    std::vector<int> want(declared.begin(), declared.end());
    std::sort(want.begin(), want.end());
    if (boundary != want)
      throw ParseError("mutate: region is not bounded by exactly the declared four arcs");
  }
  if (!region_connected(d, region.crossings))
    throw ParseError("mutate: region is not connected");

  std::set<int> in_region(region.crossings.begin(), region.crossings.end());

  // Direction of each boundary arc relative to the tangle: true = flows in.
  auto flows_in = [&](int arc) {
    auto [ci, over] = d.head_passage(arc);
    (void)over;
    return in_region.count(ci) > 0;
  };
  std::array<bool, 4> din{};
  for (int i = 0; i < 4; ++i) din[i] = flows_in(declared[i]);
  bool reversal;
  if (din[0] == din[2] && din[1] == din[3]) reversal = false;
  else if (din[0] != din[2] && din[1] != din[3]) reversal = true;
  else throw ParseError("mutate: boundary orientations are incompatible with rotation");

  // Rebuild at the port level: ports are (crossing, slot); each arc is an
  // edge between its two occurrences.  Cut the boundary edges and repair
  // them antipodally; reverse the tangle's strands when needed.
  const int n = d.crossing_count();
  std::vector<std::array<int, 4>> tuple(n);
  for (int ci = 0; ci < n; ++ci) tuple[ci] = d.crossing(ci).arcs;
  std::vector<int> sign(n);
  for (int ci = 0; ci < n; ++ci) sign[ci] = d.crossing(ci).sign;

  if (reversal) {
    // Reversing both strands of a crossing: the under-out becomes the
    // under-in; slots rotate by two; the sign is unchanged.
    for (int ci : region.crossings) {
      auto& t = tuple[ci];
      t = {t[2], t[3], t[0], t[1]};
    }
  }

  // Edges as port pairs keyed by a fresh edge id; boundary edges get split
  // into outside/inside stubs and cross-repaired: O_i joins I_{i+2 mod 4}.
  struct PortRef {
    int crossing, slot;
  };
  std::map<int, std::vector<PortRef>> occ_out, occ_in;  // arc -> ports
  for (int ci = 0; ci < n; ++ci)
    for (int s = 0; s < 4; ++s) {
      int arc = tuple[ci][s];
      (in_region.count(ci) ? occ_in : occ_out)[arc].push_back({ci, s});
    }

  // New edge labels: unique id per reconnected edge.
  // For internal/external arcs the edge is the arc itself; for boundary
  // arcs the outside stub of declared[i] joins the inside stub of
  // declared[(i+2)%4].
  std::map<int, int> arc_to_edge;
  int next_edge = 1;
  auto edge_of = [&](int arc) {
    auto [it, fresh] = arc_to_edge.try_emplace(arc, next_edge);
    if (fresh) ++next_edge;
    return it->second;
  };
  // Assign edge ids: ports keep arc-based edges except inside stubs of
  // boundary arcs, which take the rotated partner's edge id.
  std::vector<std::array<int, 4>> edge(n);
  for (int ci = 0; ci < n; ++ci)
    for (int s = 0; s < 4; ++s) {
      int arc = tuple[ci][s];
      bool is_boundary = false;
      int bpos = -1;
      for (int i = 0; i < 4; ++i)
        if (declared[i] == arc) {
          is_boundary = true;
          bpos = i;
        }
      if (is_boundary && in_region.count(ci)) {
        edge[ci][s] = edge_of(declared[(bpos + 2) % 4]);
      } else {
        edge[ci][s] = edge_of(arc);
      }
    }

  // Traverse the port graph to produce a passing list.
  Strand s;
  s.signs = sign;
  // Map: edge id -> ports carrying it.
  std::map<int, std::vector<PortRef>> edge_ports;
  for (int ci = 0; ci < n; ++ci)
    for (int sl = 0; sl < 4; ++sl) edge_ports[edge[ci][sl]].push_back({ci, sl});
  for (const auto& [eid, ports] : edge_ports)
    if (ports.size() != 2)
      throw InternalError("mutate: edge does not have two ports");

  // Start from the under-in port of crossing 0 and walk the strand.
  int cur_c = 0, cur_slot = kUnderIn;
  const size_t total = 2 * static_cast<size_t>(n);
  // Record a passing when entering a crossing at an in-port.
  for (size_t step = 0; step < total; ++step) {
    bool over = cur_slot == kSlotEast || cur_slot == kSlotWest;
    s.passings.push_back({cur_c, over});
    int exit_slot;
    if (cur_slot == kUnderIn) exit_slot = kUnderOut;
    else if (cur_slot == kUnderOut) exit_slot = kUnderIn;
    else exit_slot = cur_slot == kSlotEast ? kSlotWest : kSlotEast;
    int eid = edge[cur_c][exit_slot];
    const auto& ports = edge_ports[eid];
    PortRef next = (ports[0].crossing == cur_c && ports[0].slot == exit_slot) ? ports[1]
                                                                              : ports[0];
    cur_c = next.crossing;
    cur_slot = next.slot;
  }
  if (cur_c != 0 || cur_slot != kUnderIn)
    throw ParseError("mutate: rotated tangle does not close up to a knot");

  // Entering at an out-port means the walk runs against that crossing's
  // orientation; emit() detects this as sign drift.  A wrong declared
  // circular order surfaces as a non-planar result.
  EmitResult res = emit(s);
  if (d.is_planar_connected() && !res.diagram.is_planar_connected())
    throw ParseError("mutate: declared boundary order is not realizable in the plane");

  TangleRegion mapped;
  for (int ci : region.crossings) mapped.crossings.push_back(res.crossing_index[ci]);
  std::sort(mapped.crossings.begin(), mapped.crossings.end());
  // New boundary arcs: recompute labels via the new diagram.
  std::vector<int> nb = region_boundary_arcs(res.diagram, mapped.crossings);
  if (nb.size() != 4) throw InternalError("mutate: mapped region lost its boundary");
  // Keep the circular order aligned with the old declared order: the new
  // edge containing outside stub O_i sits where declared[i] was.  Identify
  // it as the unique new boundary arc sharing O_i's outside port.
  for (int i = 0; i < 4; ++i) {
    PortRef outside{-1, -1};
    for (const PortRef& p : edge_ports[arc_to_edge[declared[i]]])
      if (!in_region.count(p.crossing)) outside = p;
    if (outside.crossing < 0) {
      // Both ports inside: the declared arc had its outside stub absorbed;
      // fall back to set order.
      mapped.boundary_arcs[i] = nb[i];
      continue;
    }
    int new_ci = res.crossing_index[outside.crossing];
    mapped.boundary_arcs[i] = res.diagram.crossing(new_ci).arcs[outside.slot];
  }
  return {res.diagram, mapped};
}

// ---------------------------------------------------------------------------
// Reidemeister moves

namespace {

PlanarDiagram r1_plus(const PlanarDiagram& d, int arc, bool over_first, int kink_sign) {
  Strand s = strand_of(d);
  if (d.is_zero_crossing_unknot()) {
    Strand k;
    k.signs = {kink_sign};
    k.passings = {{0, over_first}, {0, !over_first}};
    return emit(k).diagram;
  }
  if (arc < 1 || arc > d.arc_count())
    throw ParseError("R1+: arc " + std::to_string(arc) + " out of range", arc);
  int id = static_cast<int>(s.signs.size());
  s.signs.push_back(kink_sign);
  s.passings.insert(s.passings.begin() + (arc - 1),
                    {{id, over_first}, {id, !over_first}});
  return emit(s).diagram;
}

PlanarDiagram r1_minus(const PlanarDiagram& d, int crossing) {
  Strand s = strand_of(d);
  if (crossing < 0 || crossing >= d.crossing_count())
    throw ParseError("R1-: crossing index out of range", -1, crossing);
  if (!r1_minus_applicable(s, crossing))
    throw ParseError("R1-: crossing " + std::to_string(crossing) + " is not a kink",
                     -1, crossing);
  std::vector<int> posns;
  for (int k = 0; k < static_cast<int>(s.passings.size()); ++k)
    if (s.passings[k].crossing == crossing) posns.push_back(k);
  erase_positions(s, posns);
  return emit(s).diagram;
}

PlanarDiagram r2_plus(const PlanarDiagram& d, int arc_a, int arc_b, bool a_over) {
  if (d.is_zero_crossing_unknot())
    throw ParseError("R2+: no arcs available on the 0-crossing unknot");
  if (arc_a < 1 || arc_a > d.arc_count() || arc_b < 1 || arc_b > d.arc_count() ||
      arc_a == arc_b)
    throw ParseError("R2+: invalid arc pair");
  // The two arcs must cobound a face for the move to stay planar.
  bool cobound = false;
  for (const auto& face : d.faces()) {
    bool sa = false, sb = false;
    for (auto [ci, sl] : face) {
      int arc = d.crossing(ci).arcs[sl];
      sa |= arc == arc_a;
      sb |= arc == arc_b;
    }
    if (sa && sb) cobound = true;
  }
  if (!cobound) throw ParseError("R2+: arcs do not cobound a face");

  const Strand base = strand_of(d);
  // Try the sign patterns and under-insert orders; exactly the planar
  // outcomes are kept, and the first in deterministic order wins.
  for (int first_sign : {+1, -1}) {
    for (bool reversed_under : {false, true}) {
      Strand s = base;
      int x = static_cast<int>(s.signs.size());
      int y = x + 1;
      s.signs.push_back(first_sign);
      s.signs.push_back(-first_sign);
      // Insert on the later arc first so earlier positions stay valid.
      int pa = arc_a - 1, pb = arc_b - 1;
      struct Ins {
        int pos;
        Passing p1, p2;
      };
      std::vector<Ins> ins;
      ins.push_back({pa, {x, a_over}, {y, a_over}});
      if (!reversed_under)
        ins.push_back({pb, {y, !a_over}, {x, !a_over}});
      else
        ins.push_back({pb, {x, !a_over}, {y, !a_over}});
      std::sort(ins.begin(), ins.end(), [](const Ins& l, const Ins& r) { return l.pos > r.pos; });
      for (const Ins& i : ins)
        s.passings.insert(s.passings.begin() + i.pos, {i.p1, i.p2});
      try {
        EmitResult res = emit(s);
        if (res.diagram.is_planar_connected()) return res.diagram;
      } catch (const ParseError&) {
      } catch (const InternalError&) {
      }
    }
  }
  throw ParseError("R2+: no planar variant exists at this site");
}

PlanarDiagram r2_minus(const PlanarDiagram& d, int x, int y) {
  Strand s = strand_of(d);
  if (x < 0 || x >= d.crossing_count() || y < 0 || y >= d.crossing_count())
    throw ParseError("R2-: crossing index out of range");
  if (!r2_minus_applicable(s, x, y))
    throw ParseError("R2-: crossings " + std::to_string(x) + "," + std::to_string(y) +
                     " do not form a cancelling pair");
  std::vector<int> posns;
  for (int k = 0; k < static_cast<int>(s.passings.size()); ++k)
    if (s.passings[k].crossing == x || s.passings[k].crossing == y) posns.push_back(k);
  erase_positions(s, posns);
  return emit(s).diagram;
}

// Triangle faces admitting a slide: distinct crossings, three distinct side
// arcs, and a non-cyclic over/under pattern.
struct Triangle {
  std::array<int, 3> crossings;
  std::array<int, 3> arcs;  // side arcs
};

std::vector<Triangle> r3_triangles(const PlanarDiagram& d) {
  std::vector<Triangle> out;
  for (const auto& face : d.faces()) {
    if (face.size() != 3) continue;
    std::array<int, 3> cs{face[0].first, face[1].first, face[2].first};
    if (cs[0] == cs[1] || cs[1] == cs[2] || cs[0] == cs[2]) continue;
    std::array<int, 3> arcs{};
    for (int i = 0; i < 3; ++i) arcs[i] = d.crossing(face[i].first).arcs[face[i].second];
    if (arcs[0] == arcs[1] || arcs[1] == arcs[2] || arcs[0] == arcs[2]) continue;
    // Strand through side arc i joins crossings face[i] and face[(i+1)%3];
    // its status at each is over iff the occurrence slot is an over slot.
    // Count overs per strand: admissible iff not all strands have exactly
    // one over (the cyclic pattern).
    int strands_with_one_over = 0;
    bool degenerate = false;
    for (int i = 0; i < 3; ++i) {
      int arc = arcs[i];
      int overs = 0, ends = 0;
      for (int t = 0; t < 3; ++t) {
        const Crossing& c = d.crossing(cs[t]);
        for (int sl = 0; sl < 4; ++sl)
          if (c.arcs[sl] == arc) {
            ++ends;
            if (sl == kSlotEast || sl == kSlotWest) ++overs;
          }
      }
      if (ends != 2) degenerate = true;
      if (overs == 1) ++strands_with_one_over;
    }
    if (degenerate || strands_with_one_over == 3) continue;
    out.push_back({cs, arcs});
  }
  return out;
}

PlanarDiagram r3(const PlanarDiagram& d, int ca, int cb, int cc) {
  std::array<int, 3> want{ca, cb, cc};
  std::sort(want.begin(), want.end());
  for (const Triangle& t : r3_triangles(d)) {
    std::array<int, 3> have = t.crossings;
    std::sort(have.begin(), have.end());
    if (have != want) continue;
    Strand s = strand_of(d);
    const int m2 = static_cast<int>(s.passings.size());
    // For each side arc, the two passings at its ends are consecutive in
    // strand order; the slide swaps each such pair.
    std::set<int> tri(have.begin(), have.end());
    std::vector<int> heads;
    for (int i = 0; i < 3; ++i) {
      int arc = t.arcs[i];
      int k = arc - 1;  // arc k enters passing k-1 (0-based): position arc-1
      int prev = (k - 1 + m2) % m2;
      if (!tri.count(s.passings[k].crossing) || !tri.count(s.passings[prev].crossing))
        throw InternalError("R3: side arc passings not on the triangle");
      heads.push_back(k);
    }
    for (int k : heads) {
      int prev = (k - 1 + m2) % m2;
      std::swap(s.passings[k], s.passings[prev]);
    }
    PlanarDiagram out = emit(s).diagram;
    if (!out.is_planar_connected())
      throw InternalError("R3: slide produced a non-planar diagram");
    return out;
  }
  throw ParseError("R3: the three crossings do not bound a slidable triangle");
}

}  // namespace

PlanarDiagram apply_reidemeister(const PlanarDiagram& d, ReidemeisterMove move,
                                 const ReidemeisterSite& site) {
  if (!d.is_knot()) throw KnotRequired("apply_reidemeister");
  switch (move) {
    case ReidemeisterMove::R1Plus:
      return r1_plus(d, site.a, site.over_first, site.sign);
    case ReidemeisterMove::R1Minus:
      return r1_minus(d, site.a);
    case ReidemeisterMove::R2Plus:
      return r2_plus(d, site.a, site.b, site.over_first);
    case ReidemeisterMove::R2Minus:
      return r2_minus(d, site.a, site.b);
    case ReidemeisterMove::R3:
      return r3(d, site.a, site.b, site.c);
  }
  throw ParseError("unknown Reidemeister move");
}

std::vector<ReidemeisterSite> reidemeister_sites(const PlanarDiagram& d,
                                                 ReidemeisterMove move) {
  std::vector<ReidemeisterSite> sites;
  if (!d.is_knot()) return sites;
  switch (move) {
    case ReidemeisterMove::R1Plus: {
      int arcs = std::max(1, d.arc_count());
      for (int a = 1; a <= arcs; ++a)
        for (bool of : {false, true})
          for (int sg : {+1, -1}) {
            ReidemeisterSite s;
            s.a = a;
            s.over_first = of;
            s.sign = sg;
            sites.push_back(s);
            if (d.is_zero_crossing_unknot()) return sites;
          }
      break;
    }
    case ReidemeisterMove::R1Minus: {
      if (d.is_zero_crossing_unknot()) break;
      Strand s = strand_of(d);
      for (int c = 0; c < d.crossing_count(); ++c)
        if (r1_minus_applicable(s, c)) {
          ReidemeisterSite site;
          site.a = c;
          sites.push_back(site);
        }
      break;
    }
    case ReidemeisterMove::R2Plus: {
      for (const auto& face : d.faces()) {
        std::set<int> arcs;
        for (auto [ci, sl] : face) arcs.insert(d.crossing(ci).arcs[sl]);
        for (int a : arcs)
          for (int b : arcs)
            if (a < b)
              for (bool over : {false, true}) {
                ReidemeisterSite s;
                s.a = a;
                s.b = b;
                s.over_first = over;
                sites.push_back(s);
              }
      }
      break;
    }
    case ReidemeisterMove::R2Minus: {
      if (d.is_zero_crossing_unknot()) break;
      Strand s = strand_of(d);
      for (int x = 0; x < d.crossing_count(); ++x)
        for (int y = x + 1; y < d.crossing_count(); ++y)
          if (r2_minus_applicable(s, x, y)) {
            ReidemeisterSite site;
            site.a = x;
            site.b = y;
            sites.push_back(site);
          }
      break;
    }
    case ReidemeisterMove::R3: {
      for (const Triangle& t : r3_triangles(d)) {
        ReidemeisterSite s;
        s.a = t.crossings[0];
        s.b = t.crossings[1];
        s.c = t.crossings[2];
        sites.push_back(s);
      }
      break;
    }
  }
  return sites;
}

PlanarDiagram greedy_simplify(const PlanarDiagram& d) {
  if (!d.is_knot()) throw KnotRequired("greedy_simplify");
  PlanarDiagram cur = d;
  bool progress = true;
  while (progress && !cur.is_zero_crossing_unknot()) {
    progress = false;
    auto r1 = reidemeister_sites(cur, ReidemeisterMove::R1Minus);
    if (!r1.empty()) {
      cur = apply_reidemeister(cur, ReidemeisterMove::R1Minus, r1.front());
      progress = true;
      continue;
    }
    auto r2 = reidemeister_sites(cur, ReidemeisterMove::R2Minus);
    if (!r2.empty()) {
      cur = apply_reidemeister(cur, ReidemeisterMove::R2Minus, r2.front());
      progress = true;
    }
  }
  return cur;
}

}  // namespace knotscope
