#include "knotscope/bracket.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>

namespace knotscope {

namespace {

// End ids: arc x has ends 2x (tail) and 2x+1 (head); the head end sits at
// the passage where the strand leaves the arc.
struct EndTable {
  // end id for each (crossing, slot)
  std::vector<std::array<int, 4>> at;
};

EndTable end_table(const PlanarDiagram& d) {
  EndTable t;
  const int n = d.crossing_count();
  t.at.assign(n, {-1, -1, -1, -1});
  std::vector<std::pair<int, int>> head(d.arc_count() + 1, {-1, -1});
  for (int a = 1; a <= d.arc_count(); ++a) {
    auto [ci, over] = d.head_passage(a);
    int slot;
    if (!over) slot = kUnderIn;
    else slot = d.crossing(ci).sign > 0 ? kSlotEast : kSlotWest;
    head[a] = {ci, slot};
  }
  for (int ci = 0; ci < n; ++ci)
    for (int s = 0; s < 4; ++s) {
      int a = d.crossing(ci).arcs[s];
      bool is_head = head[a] == std::make_pair(ci, s);
      t.at[ci][s] = 2 * a + (is_head ? 1 : 0);
    }
  return t;
}

LaurentPoly delta_poly() {
  // -A^2 - A^-2
  return LaurentPoly(Int(-1), 2) + LaurentPoly(Int(-1), -2);
}

// Path-endpoint tracker: partner[e] = far endpoint of the open path through
// e (itself while e is an isolated stub).  Each end receives exactly two
// connections over its lifetime; connecting two endpoints either merges
// their paths or closes a circle.
struct PathJoiner {
  std::map<int, int> partner;
  int circles = 0;

  void add_stub(int e) { partner[e] = e; }
  void connect(int u, int v) {
    int a = partner.at(u), b = partner.at(v);
    if (a == v) {  // u and v are the two ends of one path
      ++circles;
      partner.erase(u);
      partner.erase(v);
      return;
    }
    partner[a] = b;
    partner[b] = a;
    if (u != a) partner.erase(u);
    if (v != b) partner.erase(v);
  }
};

}  // namespace

std::vector<int> scan_order(const PlanarDiagram& d) {
  const int n = d.crossing_count();
  std::vector<int> order;
  std::vector<bool> done(n, false);
  std::set<int> live_arcs;  // arcs with exactly one processed end
  auto arcs_of = [&](int ci) {
    std::vector<int> v(d.crossing(ci).arcs.begin(), d.crossing(ci).arcs.end());
    return v;
  };
  for (int step = 0; step < n; ++step) {
    int best = -1, best_closed = -1, best_boundary = 1 << 30;
    for (int ci = 0; ci < n; ++ci) {
      if (done[ci]) continue;
      std::map<int, int> mult;
      for (int a : arcs_of(ci)) mult[a]++;
      int closed = 0, opened = 0;
      for (auto [a, m] : mult) {
        if (m == 2) closed += 1;  // both ends here
        else if (live_arcs.count(a)) closed += 1;
        else opened += 1;
      }
      int boundary_after = static_cast<int>(live_arcs.size()) - closed + opened;
      if (step == 0 && order.empty() && best < 0) {
        best = ci;
        best_closed = closed;
        best_boundary = boundary_after;
        continue;
      }
      if (closed > best_closed ||
          (closed == best_closed && boundary_after < best_boundary)) {
        best = ci;
        best_closed = closed;
        best_boundary = boundary_after;
      }
    }
    done[best] = true;
    order.push_back(best);
    std::map<int, int> mult;
    for (int a : arcs_of(best)) mult[a]++;
    for (auto [a, m] : mult) {
      if (m == 2) continue;
      if (live_arcs.count(a)) live_arcs.erase(a);
      else live_arcs.insert(a);
    }
  }
  return order;
}

int state_circle_count(const PlanarDiagram& d, std::uint64_t resolutions) {
  const int n = d.crossing_count();
  if (n == 0) return 1;
  EndTable ends = end_table(d);
  PathJoiner pj;
  for (int x = 1; x <= d.arc_count(); ++x) {
    pj.add_stub(2 * x);
    pj.add_stub(2 * x + 1);
  }
  // Arc interiors connect the two ends of each arc.
  for (int x = 1; x <= d.arc_count(); ++x) pj.connect(2 * x, 2 * x + 1);
  for (int ci = 0; ci < n; ++ci) {
    auto pairs = smoothing_pairs((resolutions >> ci) & 1 ? 1 : 0);
    for (const auto& pr : pairs) pj.connect(ends.at[ci][pr[0]], ends.at[ci][pr[1]]);
  }
  return pj.circles;
}

std::vector<BracketState> enumerate_bracket_states(const PlanarDiagram& d) {
  const int n = d.crossing_count();
  if (n > 20) throw SizeLimitExceeded("enumerate_bracket_states: more than 20 crossings");
  std::vector<BracketState> out;
  out.reserve(1ull << n);
  for (std::uint64_t s = 0; s < (1ull << n); ++s)
    out.push_back({s, state_circle_count(d, s)});
  return out;
}

LaurentPoly kauffman_bracket_naive(const PlanarDiagram& d) {
  if (d.is_zero_crossing_unknot()) return LaurentPoly::one();
  const int n = d.crossing_count();
  LaurentPoly total;
  LaurentPoly delta = delta_poly();
  for (const BracketState& st : enumerate_bracket_states(d)) {
    int ones = 0;
    for (int i = 0; i < n; ++i) ones += (st.resolutions >> i) & 1;
    LaurentPoly term(Int(1), n - 2 * ones);  // A^(#0 - #1)
    for (int c = 1; c < st.circles; ++c) term *= delta;
    total += term;
  }
  return total;
}

LaurentPoly kauffman_bracket(const PlanarDiagram& d) {
  if (d.is_zero_crossing_unknot()) return LaurentPoly::one();
  const int n = d.crossing_count();
  EndTable ends = end_table(d);
  std::vector<int> order = scan_order(d);

  // Which arcs become fully processed at each step.
  std::vector<bool> seen_crossing(n, false);

  using Key = std::vector<int>;  // flattened sorted matching: e0,p0,e1,p1,...
  std::map<Key, LaurentPoly> states;
  states[{}] = LaurentPoly::one();
  LaurentPoly delta = delta_poly();
  const LaurentPoly weight_a(Int(1), 1), weight_b(Int(1), -1);

  for (int ci : order) {
    seen_crossing[ci] = true;
    // The arc connections to apply after this crossing's stubs appear:
    // arcs whose two ends are now both live.
    std::vector<std::pair<int, int>> arc_joins;
    std::set<int> arcs_here(d.crossing(ci).arcs.begin(), d.crossing(ci).arcs.end());
    for (int a : arcs_here) {
      // Count processed occurrences of arc a (this crossing included).
      int cnt = 0;
      for (int cj = 0; cj < n; ++cj)
        if (seen_crossing[cj])
          for (int s = 0; s < 4; ++s)
            if (d.crossing(cj).arcs[s] == a) ++cnt;
      if (cnt == 2) arc_joins.emplace_back(2 * a, 2 * a + 1);
    }

    std::map<Key, LaurentPoly> next;
    for (const auto& [key, w] : states) {
      for (int res = 0; res < 2; ++res) {
        PathJoiner pj;
        for (size_t i = 0; i < key.size(); i += 2) {
          pj.partner[key[i]] = key[i + 1];
          pj.partner[key[i + 1]] = key[i];
        }
        for (int s = 0; s < 4; ++s) pj.add_stub(ends.at[ci][s]);
        auto prs = smoothing_pairs(res);
        for (const auto& pr : prs) pj.connect(ends.at[ci][pr[0]], ends.at[ci][pr[1]]);
        for (const auto& [u, v] : arc_joins) pj.connect(u, v);
        LaurentPoly nw = w * (res == 0 ? weight_a : weight_b);
        for (int c = 0; c < pj.circles; ++c) nw *= delta;
        Key nk;
        for (const auto& [e, p] : pj.partner)
          if (e < p) {
            nk.push_back(e);
            nk.push_back(p);
          }
        auto it = next.find(nk);
        if (it == next.end()) next.emplace(std::move(nk), std::move(nw));
        else it->second += nw;
      }
    }
    states = std::move(next);
  }
  if (states.size() != 1 || !states.begin()->first.empty())
    throw InternalError("kauffman_bracket: scan did not close up");
  // Every circle contributed one delta; the bracket normalizes the unknot
  // to 1, so divide once.
  return states.begin()->second.divide_exact(delta);
}

LaurentPoly jones_polynomial(const PlanarDiagram& d, bool use_oracle) {
  if (!d.is_knot()) throw KnotRequired("jones_polynomial");
  LaurentPoly br = use_oracle ? kauffman_bracket_naive(d) : kauffman_bracket(d);
  const int w = d.writhe();
  // (-A^3)^(-w) <D>
  LaurentPoly v = br.shifted(-3 * w, (w % 2 == 0) ? Int(1) : Int(-1));
  // A = t^(-1/4): exponents must be divisible by 4 for a knot.
  LaurentPoly out;
  for (const auto& [e, c] : v.terms()) {
    if (e % 4 != 0)
      throw InternalError("jones_polynomial: quarter-exponent left after normalization");
    out += LaurentPoly(c, -e / 4);
  }
  return out;
}

LaurentPoly unnormalized_jones(const PlanarDiagram& d, bool use_oracle) {
  LaurentPoly v = jones_polynomial(d, use_oracle);
  LaurentPoly in_q = v.substitute_power(2);  // t = q^2
  LaurentPoly factor = LaurentPoly(Int(1), 1) + LaurentPoly(Int(1), -1);
  return in_q * factor;
}

}  // namespace knotscope
