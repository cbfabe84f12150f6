#pragma once
// Public Khovanov homology and Rasmussen s-invariant interface.

#include <cstdint>
#include <map>
#include <string>

#include "knotscope/homology/cube.hpp"
#include "knotscope/homology/field.hpp"
#include "knotscope/homology/scan.hpp"
#include "knotscope/laurent.hpp"
#include "knotscope/pd.hpp"

namespace knotscope {

// (homological degree, quantum degree) -> rank.
struct BigradedRanks {
  std::map<std::pair<int, int>, int> ranks;

  int total() const {
    int n = 0;
    for (const auto& [k, r] : ranks) n += r;
    return n;
  }
  // Sum over (i, j) of (-1)^i q^j rank.
  LaurentPoly graded_euler_characteristic() const;
  // Sum of rank * u^i q^j.
  BivariatePoly poincare_polynomial() const;
  bool operator==(const BigradedRanks& o) const { return ranks == o.ranks; }
};

struct HomologyOptions {
  bool use_oracle = false;        // materialize the full cube
  bool check_d2 = false;          // verify d.d = 0 while scanning
  std::uint64_t generator_limit = 1ull << 24;
};

BigradedRanks khovanov_homology(const PlanarDiagram& d, CoefficientField field,
                                const HomologyOptions& opts = {});

struct SInvariantResult {
  int s = 0;
  int smin = 0;
  int smax = 0;
  std::string field = "Q";
  // Diagnostics: generator counts before/after reduction.
  std::uint64_t generators_before = 0;
  std::uint64_t generators_after = 0;
};

// Lee homology over Q; the two surviving filtration levels give
// s = (smin + smax) / 2 (positive trefoil +2).
SInvariantResult s_invariant(const PlanarDiagram& d, const HomologyOptions& opts = {});

// Lee homology total rank (should be 2 for every knot).
int lee_total_rank(const PlanarDiagram& d, const HomologyOptions& opts = {});

}  // namespace knotscope
