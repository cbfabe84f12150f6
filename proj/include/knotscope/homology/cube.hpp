#pragma once
// The cube of resolutions and the full-cube chain complex (the oracle path:
// every generator materialized, then filtered Gaussian elimination).
//
// Gradings follow conventions.hpp: i = |v| - n_minus,
// j = (#1 - #x) + |v| + n_plus - 2 n_minus.  The Lee deformation (t = 1)
// adds the x.x = 1 components, which raise j by 4.

#include <cstdint>
#include <map>
#include <set>
#include <tuple>
#include <vector>

#include "knotscope/bracket.hpp"
#include "knotscope/homology/field.hpp"
#include "knotscope/pd.hpp"

namespace knotscope {

struct CubeVertex {
  int circles = 0;
  // 1-based arc label -> circle index (0-based, ordered by smallest arc).
  std::vector<int> circle_of_arc;
};

struct CubeEdge {
  std::uint64_t from = 0;  // vertex with bit `bit` equal to 0
  int bit = 0;
  bool merge = true;
  // merge: {a, b} -> target; split: source -> {a, b}
  int src_a = -1, src_b = -1, dst_a = -1, dst_b = -1;
};

struct ResolutionCube {
  int n = 0;
  std::vector<CubeVertex> vertices;  // indexed by resolution bitmask
  std::vector<CubeEdge> edges;
};

// Throws SizeLimitExceeded when the total generator count would exceed
// `generator_limit`.
ResolutionCube cube_of_resolutions(const PlanarDiagram& d,
                                   std::uint64_t generator_limit = 1ull << 24);

// Circle data of one vertex (shared with the cube builder).
CubeVertex resolve_vertex(const PlanarDiagram& d, std::uint64_t v);

template <class F>
struct FilteredChainComplex {
  struct Gen {
    int i = 0;
    int j = 0;
  };
  std::vector<Gen> gens;
  std::vector<std::map<int, F>> out;  // src -> (dst -> coeff)
  std::vector<std::set<int>> in;      // dst -> sources
  std::vector<bool> alive;
  int t_param = 0;

  int alive_count() const {
    int n = 0;
    for (bool a : alive) n += a;
    return n;
  }

  void set_entry(int s, int t, const F& c) {
    if (c.is_zero()) {
      out[s].erase(t);
      in[t].erase(s);
    } else {
      out[s][t] = c;
      in[t].insert(s);
    }
  }

  void check_d2() const {
    for (int x = 0; x < static_cast<int>(gens.size()); ++x) {
      if (!alive[x]) continue;
      std::map<int, F> acc;
      for (const auto& [m, c1] : out[x])
        for (const auto& [y, c2] : out[m]) {
          auto [it, fresh] = acc.try_emplace(y, F::zero());
          it->second = it->second + c1 * c2;
        }
      for (const auto& [y, c] : acc)
        if (!c.is_zero())
          throw InternalError("chain complex differential fails d.d = 0");
    }
  }
};

// Build the full Khovanov (t=0) or Lee (t=1) complex over F.
template <class F>
FilteredChainComplex<F> build_cube_complex(const PlanarDiagram& d, int t_param,
                                           std::uint64_t generator_limit = 1ull << 24);

// Cancel invertible entries, lowest quantum jump first, until no entry
// remains; survivors carry the bigraded ranks (t=0) or the Lee filtration
// levels (t=1).  Gaussian elimination preserves the filtration because a
// pivot of minimal jump only creates corrections of jump at least as large.
template <class F>
void simplify_filtered(FilteredChainComplex<F>& c);

// (i, j) multiset of surviving generators.
template <class F>
std::vector<std::pair<int, int>> survivors(const FilteredChainComplex<F>& c) {
  std::vector<std::pair<int, int>> out;
  for (size_t g = 0; g < c.gens.size(); ++g)
    if (c.alive[g]) out.emplace_back(c.gens[g].i, c.gens[g].j);
  std::sort(out.begin(), out.end());
  return out;
}

using FilteredChainComplexF2 = FilteredChainComplex<F2>;
using FilteredChainComplexQ = FilteredChainComplex<RatF>;

}  // namespace knotscope
