#include "knotscope/homology/cube.hpp"

#include <algorithm>
#include <numeric>

namespace knotscope {

namespace {

struct ArcUnionFind {
  std::vector<int> parent;
  explicit ArcUnionFind(int n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }
  int find(int x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  }
  void unite(int a, int b) { parent[find(a)] = find(b); }
};

}  // namespace

CubeVertex resolve_vertex(const PlanarDiagram& d, std::uint64_t v) {
  CubeVertex out;
  const int n = d.crossing_count();
  const int n_arcs = d.arc_count();
  if (n == 0) {
    out.circles = 1;
    out.circle_of_arc = {0};
    return out;
  }
  // Union arcs joined by the chosen smoothings.
  ArcUnionFind uf(n_arcs + 1);
  for (int ci = 0; ci < n; ++ci) {
    auto pairs = smoothing_pairs((v >> ci) & 1 ? 1 : 0);
    const auto& arcs = d.crossing(ci).arcs;
    for (const auto& pr : pairs) uf.unite(arcs[pr[0]], arcs[pr[1]]);
  }
  out.circle_of_arc.assign(n_arcs + 1, -1);
  std::vector<int> id_of_root(n_arcs + 1, -1);
  int next = 0;
  for (int a = 1; a <= n_arcs; ++a) {
    int r = uf.find(a);
    if (id_of_root[r] < 0) id_of_root[r] = next++;
    out.circle_of_arc[a] = id_of_root[r];
  }
  out.circles = next;
  return out;
}

ResolutionCube cube_of_resolutions(const PlanarDiagram& d, std::uint64_t generator_limit) {
  const int n = d.crossing_count();
  if (n > 24) throw SizeLimitExceeded("cube_of_resolutions: too many crossings");
  ResolutionCube cube;
  cube.n = n;
  cube.vertices.resize(1ull << n);
  std::uint64_t total_gens = 0;
  for (std::uint64_t v = 0; v < (1ull << n); ++v) {
    cube.vertices[v] = resolve_vertex(d, v);
    total_gens += 1ull << cube.vertices[v].circles;
    if (total_gens > generator_limit)
      throw SizeLimitExceeded("cube_of_resolutions: generator limit exceeded");
  }
  for (std::uint64_t v = 0; v < (1ull << n); ++v) {
    for (int k = 0; k < n; ++k) {
      if ((v >> k) & 1) continue;
      std::uint64_t w = v | (1ull << k);
      const CubeVertex& a = cube.vertices[v];
      const CubeVertex& b = cube.vertices[w];
      CubeEdge e;
      e.from = v;
      e.bit = k;
      if (b.circles == a.circles - 1) {
        e.merge = true;
        // Two circles of v with the same image.
        std::vector<int> image(a.circles, -1);
        int c1 = -1, c2 = -1, tgt = -1;
        for (int arc = 1; arc <= d.arc_count(); ++arc) {
          int ca = a.circle_of_arc[arc], cb = b.circle_of_arc[arc];
          if (image[ca] < 0) image[ca] = cb;
          else if (image[ca] != cb)
            throw InternalError("cube edge: inconsistent circle map");
        }
        for (int i = 0; i < a.circles && c2 < 0; ++i)
          for (int j = i + 1; j < a.circles && c2 < 0; ++j)
            if (image[i] == image[j]) {
              c1 = i;
              c2 = j;
              tgt = image[i];
            }
        if (c2 < 0) throw InternalError("cube edge: merge circles not found");
        e.src_a = c1;
        e.src_b = c2;
        e.dst_a = tgt;
      } else if (b.circles == a.circles + 1) {
        e.merge = false;
        // One circle of v maps onto two circles of w.
        std::vector<std::set<int>> images(a.circles);
        for (int arc = 1; arc <= d.arc_count(); ++arc)
          images[a.circle_of_arc[arc]].insert(b.circle_of_arc[arc]);
        int src = -1;
        for (int i = 0; i < a.circles; ++i) {
          if (images[i].size() == 2) {
            if (src >= 0) throw InternalError("cube edge: two splitting circles");
            src = i;
          } else if (images[i].size() != 1) {
            throw InternalError("cube edge: circle image not 1 or 2");
          }
        }
        if (src < 0) throw InternalError("cube edge: splitting circle not found");
        e.src_a = src;
        e.dst_a = *images[src].begin();
        e.dst_b = *std::next(images[src].begin());
      } else {
        throw InternalError("cube edge: circle count changed by more than 1");
      }
      cube.edges.push_back(e);
    }
  }
  return cube;
}

namespace {

// Circle-to-circle correspondence between adjacent vertices for label
// transport (identity away from the surgered circles).
std::vector<int> circle_transport(const PlanarDiagram& d, const CubeVertex& a,
                                  const CubeVertex& b) {
  std::vector<int> image(a.circles, -1);
  for (int arc = 1; arc <= d.arc_count(); ++arc) {
    int ca = a.circle_of_arc[arc];
    if (image[ca] < 0) image[ca] = b.circle_of_arc[arc];
  }
  return image;
}

}  // namespace

template <class F>
FilteredChainComplex<F> build_cube_complex(const PlanarDiagram& d, int t_param,
                                           std::uint64_t generator_limit) {
  const int n = d.crossing_count();
  FilteredChainComplex<F> c;
  c.t_param = t_param;
  int n_plus = 0, n_minus = 0;
  for (const Crossing& cr : d.crossings()) (cr.sign > 0 ? n_plus : n_minus)++;

  if (n == 0) {
    // The 0-crossing unknot: V at homological degree 0.
    c.gens.push_back({0, 1});
    c.gens.push_back({0, -1});
    c.out.resize(2);
    c.in.resize(2);
    c.alive.assign(2, true);
    return c;
  }
  if (n > 24) throw SizeLimitExceeded("build_cube_complex: too many crossings");

  std::vector<CubeVertex> vertices(1ull << n);
  std::vector<std::uint64_t> offset(1ull << n, 0);
  std::uint64_t total = 0;
  for (std::uint64_t v = 0; v < (1ull << n); ++v) {
    vertices[v] = resolve_vertex(d, v);
    offset[v] = total;
    total += 1ull << vertices[v].circles;
    if (total > generator_limit)
      throw SizeLimitExceeded("build_cube_complex: generator limit exceeded");
  }

  c.gens.resize(total);
  c.out.resize(total);
  c.in.resize(total);
  c.alive.assign(total, true);

  for (std::uint64_t v = 0; v < (1ull << n); ++v) {
    const CubeVertex& vert = vertices[v];
    int ones = __builtin_popcountll(v);
    int i_deg = ones - n_minus;
    int shift = ones + n_plus - 2 * n_minus;
    for (std::uint64_t mask = 0; mask < (1ull << vert.circles); ++mask) {
      int xs = __builtin_popcountll(mask);
      int j_deg = (vert.circles - 2 * xs) + shift;
      c.gens[offset[v] + mask] = {i_deg, j_deg};
    }
  }

  const F one = F::one();
  for (std::uint64_t v = 0; v < (1ull << n); ++v) {
    const CubeVertex& a = vertices[v];
    for (int k = 0; k < n; ++k) {
      if ((v >> k) & 1) continue;
      std::uint64_t w = v | (1ull << k);
      const CubeVertex& b = vertices[w];
      int sgn_bits = __builtin_popcountll(v & ((1ull << k) - 1));
      F edge_sign = (sgn_bits % 2 == 0) ? one : -one;
      std::vector<int> image = circle_transport(d, a, b);

      if (b.circles == a.circles - 1) {
        // merge m: (1,1)->1, (1,x)/(x,1)->x, (x,x)->t.1
        int c1 = -1, c2 = -1;
        for (int i = 0; i < a.circles && c2 < 0; ++i)
          for (int j = i + 1; j < a.circles && c2 < 0; ++j)
            if (image[i] == image[j]) {
              c1 = i;
              c2 = j;
            }
        for (std::uint64_t mask = 0; mask < (1ull << a.circles); ++mask) {
          bool x1 = (mask >> c1) & 1, x2 = (mask >> c2) & 1;
          std::uint64_t rest = 0;
          for (int i = 0; i < a.circles; ++i) {
            if (i == c1 || i == c2) continue;
            if ((mask >> i) & 1) rest |= 1ull << image[i];
          }
          int src = static_cast<int>(offset[v] + mask);
          int tc = image[c1];
          if (!x1 && !x2) {
            c.set_entry(src, static_cast<int>(offset[w] + rest),
                        c.out[src].count(static_cast<int>(offset[w] + rest))
                            ? c.out[src][static_cast<int>(offset[w] + rest)] + edge_sign
                            : edge_sign);
          } else if (x1 != x2) {
            std::uint64_t tm = rest | (1ull << tc);
            int dst = static_cast<int>(offset[w] + tm);
            c.set_entry(src, dst, c.out[src].count(dst) ? c.out[src][dst] + edge_sign : edge_sign);
          } else if (t_param != 0) {
            int dst = static_cast<int>(offset[w] + rest);
            F val = edge_sign * F(t_param);
            c.set_entry(src, dst, c.out[src].count(dst) ? c.out[src][dst] + val : val);
          }
        }
      } else {
        // split Delta: 1 -> 1x + x1, x -> xx + t.11
        int srcc = -1;
        {
          std::vector<std::set<int>> images(a.circles);
          for (int arc = 1; arc <= d.arc_count(); ++arc)
            images[a.circle_of_arc[arc]].insert(b.circle_of_arc[arc]);
          for (int i = 0; i < a.circles; ++i)
            if (images[i].size() == 2) srcc = i;
        }
        std::set<int> hit;
        for (int arc = 1; arc <= d.arc_count(); ++arc)
          if (a.circle_of_arc[arc] == srcc) hit.insert(b.circle_of_arc[arc]);
        int t1 = *hit.begin(), t2 = *std::next(hit.begin());
        for (std::uint64_t mask = 0; mask < (1ull << a.circles); ++mask) {
          std::uint64_t rest = 0;
          for (int i = 0; i < a.circles; ++i) {
            if (i == srcc) continue;
            if ((mask >> i) & 1) rest |= 1ull << image[i];
          }
          int src = static_cast<int>(offset[v] + mask);
          auto add = [&](std::uint64_t tm, F val) {
            int dst = static_cast<int>(offset[w] + tm);
            c.set_entry(src, dst, c.out[src].count(dst) ? c.out[src][dst] + val : val);
          };
          if ((mask >> srcc) & 1) {
            add(rest | (1ull << t1) | (1ull << t2), edge_sign);  // x -> xx
            if (t_param != 0) add(rest, edge_sign * F(t_param)); // + t.11
          } else {
            add(rest | (1ull << t2), edge_sign);  // 1 -> 1x
            add(rest | (1ull << t1), edge_sign);  // 1 -> x1
          }
        }
      }
    }
  }
  return c;
}

template <class F>
void simplify_filtered(FilteredChainComplex<F>& c) {
  // Index of entries by quantum jump (j(dst) - j(src)); smallest jump first
  // keeps the reduction filtered.
  std::set<std::tuple<int, int, int>> index;  // (jump, src, dst)
  auto jump_of = [&](int s, int t) { return c.gens[t].j - c.gens[s].j; };
  for (size_t s = 0; s < c.gens.size(); ++s)
    for (const auto& [t, coeff] : c.out[s]) index.insert({jump_of(s, t), static_cast<int>(s), t});

  while (!index.empty()) {
    auto [jmp, a, b] = *index.begin();
    F u = c.out[a].at(b);
    // Collect neighbours before mutating.
    std::vector<int> preds(c.in[b].begin(), c.in[b].end());
    std::vector<std::pair<int, F>> succs(c.out[a].begin(), c.out[a].end());
    F uinv = u.inverse();

    // Remove the pivot pair and all incident entries from the index.
    auto drop_entry = [&](int s, int t) { index.erase({jump_of(s, t), s, t}); };
    for (int x : preds) drop_entry(x, b);
    for (const auto& [y, coeff] : succs) drop_entry(a, y);
    for (int x : std::vector<int>(c.in[a].begin(), c.in[a].end())) {
      drop_entry(x, a);
      c.out[x].erase(a);
      c.in[a].erase(x);
    }
    for (const auto& [y, coeff] : std::vector<std::pair<int, F>>(c.out[b].begin(), c.out[b].end())) {
      drop_entry(b, y);
      c.in[y].erase(b);
      c.out[b].erase(y);
    }

    // Corrections d'(x,y) -= d(x,b) u^-1 d(a,y).
    for (int x : preds) {
      if (x == a) continue;
      F xb = c.out[x].at(b);
      c.out[x].erase(b);
      c.in[b].erase(x);
      for (const auto& [y, ay] : succs) {
        if (y == b) continue;
        F delta = xb * uinv * ay;
        auto it = c.out[x].find(y);
        F cur = (it == c.out[x].end()) ? F::zero() : it->second;
        if (it != c.out[x].end()) drop_entry(x, y);
        F nv = cur - delta;
        c.set_entry(x, y, nv);
        if (!nv.is_zero()) index.insert({jump_of(x, y), x, y});
      }
    }
    for (const auto& [y, ay] : succs) {
      c.in[y].erase(a);
      c.out[a].erase(y);
    }
    c.out[a].clear();
    c.out[b].clear();
    c.in[a].clear();
    c.in[b].clear();
    c.alive[a] = false;
    c.alive[b] = false;
  }
}

template FilteredChainComplex<F2> build_cube_complex<F2>(const PlanarDiagram&, int,
                                                         std::uint64_t);
template FilteredChainComplex<RatF> build_cube_complex<RatF>(const PlanarDiagram&, int,
                                                             std::uint64_t);
template void simplify_filtered<F2>(FilteredChainComplex<F2>&);
template void simplify_filtered<RatF>(FilteredChainComplex<RatF>&);

}  // namespace knotscope
