#include "knotscope/homology/scan.hpp"

#include <algorithm>

#include "knotscope/bracket.hpp"
#include "knotscope/homology/cube.hpp"

namespace knotscope {

namespace {

// c1 * 1 + cx * x in the Frobenius algebra R[x]/(x^2 - t).
template <class F>
struct Lin {
  F c1 = F::zero();
  F cx = F::zero();
};

template <class F>
Lin<F> power_of_x(int dots, const F& t) {
  // x^D with x^2 = t.
  Lin<F> r;
  if (dots == 0) {
    r.c1 = F::one();
    return r;
  }
  F tk = F::one();
  for (int k = 0; k < (dots / 2); ++k) tk = tk * t;
  if (dots % 2 == 0) r.c1 = tk;
  else r.cx = tk;
  return r;
}

template <class F>
Lin<F> apply_handles(Lin<F> v, int genus, const F& t) {
  const F two = F::one() + F::one();
  for (int g = 0; g < genus; ++g) {
    Lin<F> n;
    n.cx = v.c1 * two;        // 1 -> 2x
    n.c1 = v.cx * two * t;    // x -> 2t
    v = n;
  }
  return v;
}

// All ways to write Delta^(b-1)(theta) as labels on b circles:
// Delta(1) = 1x + x1, Delta(x) = xx + t.11.
template <class F>
void expand_comultiplication(int lambda_is_x, int b, const F& t, std::uint64_t mask,
                             int bit, F coeff,
                             std::vector<std::pair<std::uint64_t, F>>& out) {
  if (coeff.is_zero()) return;
  if (b == 1) {
    out.emplace_back(lambda_is_x ? (mask | (1ull << bit)) : mask, coeff);
    return;
  }
  if (lambda_is_x) {
    expand_comultiplication(1, b - 1, t, mask | (1ull << bit), bit + 1, coeff, out);
    expand_comultiplication(0, b - 1, t, mask, bit + 1, coeff * t, out);
  } else {
    expand_comultiplication(1, b - 1, t, mask, bit + 1, coeff, out);
    expand_comultiplication(0, b - 1, t, mask | (1ull << bit), bit + 1, coeff, out);
  }
}

struct MiniUF {
  std::vector<int> p;
  explicit MiniUF(int n) : p(n) {
    for (int i = 0; i < n; ++i) p[i] = i;
  }
  int find(int x) {
    while (p[x] != x) x = p[x] = p[p[x]];
    return x;
  }
  void unite(int a, int b) { p[find(a)] = find(b); }
};

}  // namespace

template <class F>
void normalize_entry(typename ScanComplex<F>::Entry& e) {
  std::sort(e.begin(), e.end(),
            [](const auto& a, const auto& b) { return a.dots < b.dots; });
  typename ScanComplex<F>::Entry out;
  for (const auto& t : e) {
    if (!out.empty() && out.back().dots == t.dots)
      out.back().coeff = out.back().coeff + t.coeff;
    else
      out.push_back(t);
  }
  out.erase(std::remove_if(out.begin(), out.end(),
                           [](const auto& t) { return t.coeff.is_zero(); }),
            out.end());
  e = std::move(out);
}

template <class F>
std::vector<std::vector<int>> ScanComplex<F>::cycles(const std::vector<int>& ma,
                                                     const std::vector<int>& mb) {
  const int n = static_cast<int>(ma.size());
  std::vector<bool> seen(n, false);
  std::vector<std::vector<int>> out;
  for (int start = 0; start < n; ++start) {
    if (seen[start] || ma[start] < 0) continue;
    std::vector<int> cyc;
    int p = start;
    bool use_a = true;
    do {
      cyc.push_back(p);
      seen[p] = true;
      p = use_a ? ma[p] : mb[p];
      use_a = !use_a;
    } while (p != start);
    out.push_back(std::move(cyc));
  }
  return out;  // sorted by smallest position (walk order)
}

template <class F>
int ScanComplex<F>::new_obj(int i, int q, std::vector<int> match) {
  objs_.push_back({i, q, std::move(match), true});
  out_.emplace_back();
  in_.emplace_back();
  return static_cast<int>(objs_.size()) - 1;
}

template <class F>
void ScanComplex<F>::set_entry(int s, int t, Entry e) {
  normalize_entry<F>(e);
  if (e.empty()) {
    out_[s].erase(t);
    in_[t].erase(s);
    return;
  }
  if (objs_[t].i != objs_[s].i + 1)
    throw InternalError("scan: entry between non-adjacent homological degrees");
  out_[s][t] = std::move(e);
  in_[t].insert(s);
}

template <class F>
void ScanComplex<F>::add_to_entry(int s, int t, const Entry& e) {
  if (e.empty()) return;
  Entry cur;
  auto it = out_[s].find(t);
  if (it != out_[s].end()) cur = it->second;
  cur.insert(cur.end(), e.begin(), e.end());
  set_entry(s, t, std::move(cur));
}

template <class F>
void ScanComplex<F>::add_crossing(const std::array<int, 4>& arcs, int sign,
                                  const std::set<int>& open_arcs_before) {
  const int base = static_cast<int>(boundary_.size());
  std::array<int, 4> pos{};
  std::array<int, 4> token{};
  for (int s = 0; s < 4; ++s) {
    pos[s] = base + s;
    token[s] = next_token_++;
    boundary_.emplace_back(token[s], arcs[s]);
  }

  auto extend_match = [&](const std::vector<int>& m, int resolution) {
    std::vector<int> e = m;
    e.resize(base + 4, -1);
    for (const auto& pr : smoothing_pairs(resolution)) {
      e[pos[pr[0]]] = pos[pr[1]];
      e[pos[pr[1]]] = pos[pr[0]];
    }
    return e;
  };

  const int di0 = sign > 0 ? 0 : -1, dq0 = sign > 0 ? 1 : -2;
  const int di1 = sign > 0 ? 1 : 0, dq1 = sign > 0 ? 2 : -1;

  const int old_count = static_cast<int>(objs_.size());
  std::vector<int> child0(old_count, -1), child1(old_count, -1);
  for (int u = 0; u < old_count; ++u) {
    if (!objs_[u].alive) continue;
    child0[u] = new_obj(objs_[u].i + di0, objs_[u].q + dq0, extend_match(objs_[u].match, 0));
    child1[u] = new_obj(objs_[u].i + di1, objs_[u].q + dq1, extend_match(objs_[u].match, 1));
  }
  if (objs_.size() > object_limit)
    throw SizeLimitExceeded("scan: object limit exceeded");

  // Old entries ride along both resolutions; masks are unchanged since the
  // fresh pair-cycles sort after every old cycle and carry no dots.
  for (int u = 0; u < old_count; ++u) {
    if (child0[u] < 0) continue;
    for (const auto& [v, e] : out_[u]) {
      set_entry(child0[u], child0[v], e);
      set_entry(child1[u], child1[v], e);
    }
  }
  // Saddle component: sign (-1)^(old homological degree).
  for (int u = 0; u < old_count; ++u) {
    if (child0[u] < 0) continue;
    F coeff = (((objs_[u].i % 2) + 2) % 2 == 0) ? F::one() : -F::one();
    Entry e;
    e.push_back({0, coeff});
    set_entry(child0[u], child1[u], std::move(e));
  }
  for (int u = 0; u < old_count; ++u) {
    if (child0[u] < 0) continue;
    objs_[u].alive = false;
    out_[u].clear();
    in_[u].clear();
  }

  // Glue: a doubled arc closes within the crossing; a singleton arc that is
  // already open glues to its existing boundary slot.
  std::vector<std::pair<int, int>> glue_tokens;
  std::map<int, std::vector<int>> slots_by_arc;
  for (int s = 0; s < 4; ++s) slots_by_arc[arcs[s]].push_back(s);
  for (const auto& [arc, ss] : slots_by_arc) {
    if (ss.size() == 2) {
      glue_tokens.emplace_back(token[ss[0]], token[ss[1]]);
    } else if (ss.size() == 1 && open_arcs_before.count(arc)) {
      int old_token = -1;
      for (int b = 0; b < base; ++b)
        if (boundary_[b].second == arc) old_token = boundary_[b].first;
      if (old_token < 0) throw InternalError("scan: open arc not found on boundary");
      glue_tokens.emplace_back(old_token, token[ss[0]]);
    } else if (ss.size() > 2) {
      throw InternalError("scan: arc appears more than twice at a crossing");
    }
  }
  for (const auto& [ta, tb] : glue_tokens) {
    int pa = -1, pb = -1;
    for (int b = 0; b < static_cast<int>(boundary_.size()); ++b) {
      if (boundary_[b].first == ta) pa = b;
      if (boundary_[b].first == tb) pb = b;
    }
    if (pa < 0 || pb < 0) throw InternalError("scan: glue token vanished");
    glue_positions(pa, pb);
  }
}

template <class F>
void ScanComplex<F>::glue_positions(int p, int q) {
  const int old_count = static_cast<int>(objs_.size());
  struct Children {
    int plus = -1, minus = -1, same = -1;
    bool closed = false;
  };
  std::vector<Children> kids(old_count);
  std::vector<std::vector<int>> old_match(old_count), new_match(old_count);

  for (int u = 0; u < old_count; ++u) {
    if (!objs_[u].alive) continue;
    const auto& m = objs_[u].match;
    old_match[u] = m;
    std::vector<int> nm = m;
    if (m[p] == q) {
      kids[u].closed = true;
    } else {
      int a = m[p], c = m[q];
      nm[a] = c;
      nm[c] = a;
    }
    nm[p] = nm[q] = -1;
    new_match[u] = std::move(nm);
  }

  struct OldEntry {
    int u, v;
    Entry e;
  };
  std::vector<OldEntry> old_entries;
  for (int u = 0; u < old_count; ++u)
    for (auto& [v, e] : out_[u]) old_entries.push_back({u, v, std::move(e)});
  for (int u = 0; u < old_count; ++u) {
    out_[u].clear();
    in_[u].clear();
  }

  for (int u = 0; u < old_count; ++u) {
    if (old_match[u].empty()) continue;  // was not alive
    if (kids[u].closed) {
      kids[u].plus = new_obj(objs_[u].i, objs_[u].q + 1, new_match[u]);
      kids[u].minus = new_obj(objs_[u].i, objs_[u].q - 1, new_match[u]);
      objs_[u].alive = false;
    } else {
      objs_[u].match = new_match[u];
      kids[u].same = u;
    }
  }
  if (objs_.size() > object_limit)
    throw SizeLimitExceeded("scan: object limit exceeded");

  const F tval = F(t_);
  const F two = F::one() + F::one();

  for (const auto& oe : old_entries) {
    const int u = oe.u, v = oe.v;
    auto old_cycles = cycles(old_match[u], old_match[v]);
    auto new_cycles = cycles(new_match[u], new_match[v]);

    int cp = -1, cq = -1;
    for (int k = 0; k < static_cast<int>(old_cycles.size()); ++k)
      for (int x : old_cycles[k]) {
        if (x == p) cp = k;
        if (x == q) cq = k;
      }
    if (cp < 0 || cq < 0) throw InternalError("scan glue: positions not on any cycle");

    // Untouched old cycles keep their exact position sets; match new cycles
    // to them via sorted position lists.
    std::map<std::vector<int>, int> old_by_set;
    for (int k = 0; k < static_cast<int>(old_cycles.size()); ++k) {
      if (k == cp || k == cq) continue;
      std::vector<int> s = old_cycles[k];
      std::sort(s.begin(), s.end());
      old_by_set[s] = k;
    }
    std::vector<int> inherited_from(new_cycles.size(), -1);
    std::vector<int> touched_new;
    for (int k = 0; k < static_cast<int>(new_cycles.size()); ++k) {
      std::vector<int> s = new_cycles[k];
      std::sort(s.begin(), s.end());
      auto it = old_by_set.find(s);
      if (it != old_by_set.end()) inherited_from[k] = it->second;
      else touched_new.push_back(k);
    }

    const bool closed_u = kids[u].closed, closed_v = kids[v].closed;
    const int comps = static_cast<int>(touched_new.size()) + (closed_u ? 1 : 0) +
                      (closed_v ? 1 : 0);
    // Touched component slots: new cycles first, then the source circle,
    // then the target circle.
    // For each term produce (new dots, circle labels, coeff) triples.
    struct Piece {
      std::uint64_t dots = 0;
      int lu = -1;  // 0 = label 1, 1 = label x (when closed_u)
      int lv = -1;
      F coeff;
    };

    std::vector<Piece> pieces;
    for (const auto& term : oe.e) {
      std::uint64_t base_dots = 0;
      for (int k = 0; k < static_cast<int>(new_cycles.size()); ++k)
        if (inherited_from[k] >= 0 && ((term.dots >> inherited_from[k]) & 1))
          base_dots |= 1ull << k;

      auto emit = [&](std::uint64_t extra, int lu, int lv, F c) {
        if (c.is_zero()) return;
        pieces.push_back({base_dots | extra, lu, lv, c});
      };
      // Assign a label to touched slot `idx` (order: touched_new then
      // circles); returns the dots contribution / records circle labels.
      auto place = [&](int idx, int label_is_x, std::uint64_t& extra, int& lu, int& lv) {
        if (idx < static_cast<int>(touched_new.size())) {
          if (label_is_x) extra |= 1ull << touched_new[idx];
        } else if (idx == static_cast<int>(touched_new.size()) && closed_u) {
          lu = label_is_x;
        } else {
          lv = label_is_x;
        }
      };

      if (cp != cq) {
        // Merge m.
        if (comps != 1 || closed_u || closed_v)
          throw InternalError("scan glue: malformed merge");
        int l1 = (term.dots >> cp) & 1, l2 = (term.dots >> cq) & 1;
        std::uint64_t extra = 0;
        int lu = -1, lv = -1;
        if (l1 && l2) {
          emit(extra, lu, lv, term.coeff * tval);  // xx -> t.1
        } else {
          place(0, l1 | l2, extra, lu, lv);
          emit(extra, lu, lv, term.coeff);
        }
      } else {
        int lambda = (term.dots >> cp) & 1;
        if (comps == 1) {
          // Handle: 1 -> 2x, x -> 2t.1.
          std::uint64_t extra = 0;
          int lu = -1, lv = -1;
          if (lambda == 0) {
            place(0, 1, extra, lu, lv);
            emit(extra, lu, lv, term.coeff * two);
          } else {
            emit(extra, lu, lv, term.coeff * two * tval);
          }
        } else if (comps == 2) {
          // Split Delta over the two touched components.
          auto emit_pair = [&](int a_is_x, int b_is_x, F c) {
            std::uint64_t extra = 0;
            int lu = -1, lv = -1;
            place(0, a_is_x, extra, lu, lv);
            place(1, b_is_x, extra, lu, lv);
            emit(extra, lu, lv, c);
          };
          if (lambda == 0) {
            emit_pair(0, 1, term.coeff);
            emit_pair(1, 0, term.coeff);
          } else {
            emit_pair(1, 1, term.coeff);
            emit_pair(0, 0, term.coeff * tval);
          }
        } else {
          throw InternalError("scan glue: unexpected component count");
        }
      }
    }

    // Route pieces to the delooped children: outgoing entries keep the
    // dotted circle label on the +1 copy, incoming keep the undotted one.
    std::map<std::pair<int, int>, Entry> grouped;
    for (const auto& pc : pieces) {
      int s = closed_u ? (pc.lu == 1 ? kids[u].plus : kids[u].minus) : kids[u].same;
      int t = closed_v ? (pc.lv == 0 ? kids[v].plus : kids[v].minus) : kids[v].same;
      grouped[{s, t}].push_back({pc.dots, pc.coeff});
    }
    for (auto& [key, e] : grouped) add_to_entry(key.first, key.second, e);
  }

  // Compress the boundary; the monotone position map keeps cycle order.
  int hi = std::max(p, q), lo = std::min(p, q);
  boundary_.erase(boundary_.begin() + hi);
  boundary_.erase(boundary_.begin() + lo);
  auto compress = [&](int x) { return x - (x > lo ? 1 : 0) - (x > hi ? 1 : 0); };
  for (auto& o : objs_) {
    if (!o.alive) continue;
    if (o.match.size() != boundary_.size() + 2) continue;  // already compressed
    std::vector<int> nm(boundary_.size(), -1);
    for (int x = 0; x < static_cast<int>(o.match.size()); ++x) {
      if (x == p || x == q || o.match[x] < 0) continue;
      nm[compress(x)] = compress(o.match[x]);
    }
    o.match = std::move(nm);
  }
}

template <class F>
typename ScanComplex<F>::Entry ScanComplex<F>::compose(const Obj& x,
                                                       const std::vector<int>& mid,
                                                       const Obj& y, const Entry& first,
                                                       const Entry& second) const {
  // first: x -> mid, second: mid -> y; glue along the middle matching.
  auto cycles1 = cycles(x.match, mid);
  auto cycles2 = cycles(mid, y.match);
  auto cycles_out = cycles(x.match, y.match);
  const int c1 = static_cast<int>(cycles1.size());
  const int c2 = static_cast<int>(cycles2.size());

  const int bsize = static_cast<int>(x.match.size());
  std::vector<int> cyc1_of(bsize, -1), cyc2_of(bsize, -1);
  for (int k = 0; k < c1; ++k)
    for (int p : cycles1[k]) cyc1_of[p] = k;
  for (int k = 0; k < c2; ++k)
    for (int p : cycles2[k]) cyc2_of[p] = k;

  // Components of the glued cobordism: cycles joined along middle arcs.
  MiniUF uf(c1 + c2);
  std::vector<int> edge_count(c1 + c2, 0);  // counted at the union root later
  std::vector<std::pair<int, int>> edges;
  for (int p = 0; p < bsize; ++p) {
    if (mid[p] < 0 || mid[p] < p) continue;  // one edge per middle arc
    edges.emplace_back(cyc1_of[p], c1 + cyc2_of[p]);
    uf.unite(cyc1_of[p], c1 + cyc2_of[p]);
  }

  // Group data per component root.
  std::map<int, std::vector<int>> comp_cycles1, comp_cycles2, comp_out;
  std::map<int, int> comp_edges;
  for (int k = 0; k < c1; ++k) comp_cycles1[uf.find(k)].push_back(k);
  for (int k = 0; k < c2; ++k) comp_cycles2[uf.find(c1 + k)].push_back(k);
  for (const auto& [a, b] : edges) comp_edges[uf.find(a)]++;
  for (int k = 0; k < static_cast<int>(cycles_out.size()); ++k) {
    int pos = cycles_out[k][0];
    comp_out[uf.find(cyc1_of[pos])].push_back(k);
  }

  const F tval = F(t_);
  Entry result;
  for (const auto& t1 : first) {
    for (const auto& t2 : second) {
      // Per component: collect dots, genus, and distribute over boundary.
      std::vector<std::pair<std::uint64_t, F>> partial;
      partial.emplace_back(0, t1.coeff * t2.coeff);
      for (const auto& [root, cy1] : comp_cycles1) {
        int dots = 0;
        for (int k : cy1) dots += (t1.dots >> k) & 1;
        const auto& cy2 = comp_cycles2.count(root) ? comp_cycles2.at(root)
                                                   : std::vector<int>{};
        for (int k : cy2) dots += (t2.dots >> k) & 1;
        int k1 = static_cast<int>(cy1.size());
        int k2 = static_cast<int>(cy2.size());
        int e = comp_edges.count(root) ? comp_edges.at(root) : 0;
        const auto& bcycles = comp_out.count(root) ? comp_out.at(root)
                                                   : std::vector<int>{};
        int b = static_cast<int>(bcycles.size());
        int chi_num = 2 - b - (k1 + k2 - e);
        if (chi_num < 0 || chi_num % 2 != 0)
          throw InternalError("scan compose: negative or fractional genus");
        int genus = chi_num / 2;
        Lin<F> theta = apply_handles(power_of_x<F>(dots, tval), genus, tval);

        if (b == 0) {
          // Closed component: sphere value = coefficient of x.
          if (theta.cx.is_zero()) {
            partial.clear();
            break;
          }
          for (auto& pr : partial) pr.second = pr.second * theta.cx;
          continue;
        }
        std::vector<std::pair<std::uint64_t, F>> local;
        expand_comultiplication(1, b, tval, 0, 0, theta.cx, local);
        expand_comultiplication(0, b, tval, 0, 0, theta.c1, local);
        // Map local bits to global output-cycle bits.
        std::vector<std::pair<std::uint64_t, F>> next;
        for (const auto& [mask0, c0] : partial)
          for (const auto& [lm, lc] : local) {
            std::uint64_t m = mask0;
            for (int bi = 0; bi < b; ++bi)
              if ((lm >> bi) & 1) m |= 1ull << bcycles[bi];
            next.emplace_back(m, c0 * lc);
          }
        partial = std::move(next);
        if (partial.empty()) break;
      }
      // Components made only of middle circles with no cycles1 node cannot
      // occur: every cycles2 node is reachable only via edges from cycles1.
      for (const auto& [m, c] : partial) result.push_back({m, c});
    }
  }
  normalize_entry<F>(result);
  return result;
}

template <class F>
void ScanComplex<F>::cancel(int a, int b) {
  const Entry& pivot = out_[a].at(b);
  if (pivot.size() != 1 || pivot[0].dots != 0)
    throw InternalError("scan cancel: pivot is not an identity entry");
  F uinv = pivot[0].coeff.inverse();
  const std::vector<int> mid = objs_[a].match;

  std::vector<int> preds(in_[b].begin(), in_[b].end());
  std::vector<int> succs;
  for (const auto& [y, e] : out_[a]) succs.push_back(y);

  for (int x : preds) {
    if (x == a) continue;
    Entry exb = out_[x].at(b);
    for (int y : succs) {
      if (y == b) continue;
      Entry eay = out_[a].at(y);
      Entry corr = compose(objs_[x], mid, objs_[y], exb, eay);
      for (auto& t : corr) t.coeff = -(t.coeff * uinv);
      add_to_entry(x, y, corr);
    }
  }

  // Detach a and b entirely.
  for (int x : std::vector<int>(in_[a].begin(), in_[a].end())) {
    out_[x].erase(a);
    in_[a].erase(x);
  }
  for (int x : preds) {
    out_[x].erase(b);
    in_[b].erase(x);
  }
  for (int y : succs) in_[y].erase(a);
  for (const auto& [y, e] : out_[b]) in_[y].erase(b);
  out_[a].clear();
  out_[b].clear();
  in_[a].clear();
  in_[b].clear();
  objs_[a].alive = false;
  objs_[b].alive = false;
}

template <class F>
void ScanComplex<F>::cancel_all() {
  while (true) {
    int best_a = -1, best_b = -1;
    long best_fill = -1;
    for (int a = 0; a < static_cast<int>(objs_.size()); ++a) {
      if (!objs_[a].alive) continue;
      for (const auto& [b, e] : out_[a]) {
        if (objs_[a].q != objs_[b].q) continue;
        if (objs_[a].match != objs_[b].match) continue;
        if (e.size() != 1 || e[0].dots != 0)
          throw InternalError("scan: non-identity entry between equal objects");
        if (e[0].coeff.is_zero()) continue;
        long fill = static_cast<long>(in_[b].size() - 1) *
                    static_cast<long>(out_[a].size() - 1);
        if (best_a < 0 || fill < best_fill) {
          best_a = a;
          best_b = b;
          best_fill = fill;
          if (fill == 0) break;
        }
      }
      if (best_fill == 0) break;
    }
    if (best_a < 0) return;
    cancel(best_a, best_b);
  }
}

template <class F>
std::vector<std::pair<int, int>> ScanComplex<F>::finish() {
  if (!boundary_.empty()) throw InternalError("scan finish: boundary not closed");
  cancel_all();
  // Remaining entries are scalars; eliminate lowest quantum jump first.
  FilteredChainComplex<F> c;
  c.t_param = t_;
  std::vector<int> index(objs_.size(), -1);
  for (int u = 0; u < static_cast<int>(objs_.size()); ++u) {
    if (!objs_[u].alive) continue;
    index[u] = static_cast<int>(c.gens.size());
    c.gens.push_back({objs_[u].i, objs_[u].q});
  }
  c.out.resize(c.gens.size());
  c.in.resize(c.gens.size());
  c.alive.assign(c.gens.size(), true);
  for (int u = 0; u < static_cast<int>(objs_.size()); ++u) {
    if (index[u] < 0) continue;
    for (const auto& [v, e] : out_[u]) {
      if (e.empty()) continue;
      if (e.size() != 1 || e[0].dots != 0)
        throw InternalError("scan finish: non-scalar entry on empty boundary");
      if (objs_[v].q < objs_[u].q)
        throw InternalError("scan finish: filtration-violating entry");
      c.set_entry(index[u], index[v], e[0].coeff);
    }
  }
  simplify_filtered(c);
  return survivors(c);
}

template <class F>
void ScanComplex<F>::check_d2() const {
  for (int x = 0; x < static_cast<int>(objs_.size()); ++x) {
    if (!objs_[x].alive) continue;
    std::map<int, Entry> acc;
    for (const auto& [m, e1] : out_[x]) {
      for (const auto& [y, e2] : out_[m]) {
        Entry c = compose(objs_[x], objs_[m].match, objs_[y], e1, e2);
        auto& slot = acc[y];
        slot.insert(slot.end(), c.begin(), c.end());
      }
    }
    for (auto& [y, e] : acc) {
      normalize_entry<F>(e);
      if (!e.empty()) throw InternalError("scan: d.d != 0");
    }
  }
}

template class ScanComplex<F2>;
template class ScanComplex<RatF>;

template <class F>
std::vector<std::pair<int, int>> scan_homology(const PlanarDiagram& d, int t_param,
                                               bool check_each_step,
                                               std::uint64_t object_limit,
                                               ScanStats* stats) {
  if (!d.is_knot()) throw KnotRequired("khovanov/lee homology");
  if (d.is_zero_crossing_unknot()) {
    if (stats) *stats = {2, 2};
    return {{0, -1}, {0, 1}};
  }

  ScanComplex<F> complex(t_param);
  complex.object_limit = object_limit;

  std::vector<int> order = scan_order(d);
  std::set<int> open_arcs;
  std::uint64_t peak = 1;
  for (int ci : order) {
    const Crossing& cr = d.crossing(ci);
    std::set<int> open_before = open_arcs;
    complex.add_crossing(cr.arcs, cr.sign, open_before);
    // Maintain the open-arc set.
    std::map<int, int> mult;
    for (int s = 0; s < 4; ++s) mult[cr.arcs[s]]++;
    for (const auto& [arc, m] : mult) {
      if (m == 2) continue;
      if (open_arcs.count(arc)) open_arcs.erase(arc);
      else open_arcs.insert(arc);
    }
    peak = std::max<std::uint64_t>(peak, complex.object_count());
    complex.cancel_all();
    if (check_each_step) complex.check_d2();
  }
  auto out = complex.finish();
  if (stats) {
    stats->peak_objects = peak;
    stats->survivors = out.size();
  }
  return out;
}

template std::vector<std::pair<int, int>> scan_homology<F2>(const PlanarDiagram&, int,
                                                            bool, std::uint64_t,
                                                            ScanStats*);
template std::vector<std::pair<int, int>> scan_homology<RatF>(const PlanarDiagram&, int,
                                                              bool, std::uint64_t,
                                                              ScanStats*);

}  // namespace knotscope
