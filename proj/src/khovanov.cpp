#include "knotscope/khovanov.hpp"

namespace knotscope {

LaurentPoly BigradedRanks::graded_euler_characteristic() const {
  LaurentPoly out;
  for (const auto& [ij, r] : ranks) {
    Int c(r);
    if (ij.first % 2 != 0) c = -c;
    out += LaurentPoly(c, ij.second);
  }
  return out;
}

BivariatePoly BigradedRanks::poincare_polynomial() const {
  BivariatePoly out;
  for (const auto& [ij, r] : ranks)
    out = out + BivariatePoly::term(Int(r), ij.first, ij.second);
  return out;
}

namespace {

BigradedRanks ranks_from_pairs(const std::vector<std::pair<int, int>>& pairs) {
  BigradedRanks r;
  for (const auto& ij : pairs) r.ranks[ij]++;
  return r;
}

template <class F>
std::vector<std::pair<int, int>> homology_pairs(const PlanarDiagram& d, int t_param,
                                                const HomologyOptions& opts,
                                                std::uint64_t* before = nullptr,
                                                std::uint64_t* after = nullptr) {
  if (!d.is_knot()) throw KnotRequired("khovanov/lee homology");
  if (opts.use_oracle) {
    auto complex = build_cube_complex<F>(d, t_param, opts.generator_limit);
    if (before) *before = complex.gens.size();
    if (opts.check_d2) complex.check_d2();
    simplify_filtered(complex);
    auto out = survivors(complex);
    if (after) *after = out.size();
    return out;
  }
  ScanStats stats;
  auto out = scan_homology<F>(d, t_param, opts.check_d2, opts.generator_limit, &stats);
  if (before) *before = stats.peak_objects;
  if (after) *after = stats.survivors;
  return out;
}

}  // namespace

BigradedRanks khovanov_homology(const PlanarDiagram& d, CoefficientField field,
                                const HomologyOptions& opts) {
  if (field == CoefficientField::F2)
    return ranks_from_pairs(homology_pairs<F2>(d, 0, opts));
  return ranks_from_pairs(homology_pairs<RatF>(d, 0, opts));
}

SInvariantResult s_invariant(const PlanarDiagram& d, const HomologyOptions& opts) {
  SInvariantResult res;
  auto pairs = homology_pairs<RatF>(d, 1, opts, &res.generators_before,
                                    &res.generators_after);
  if (pairs.size() != 2)
    throw InternalError("lee homology rank " + std::to_string(pairs.size()) +
                        " != 2 on a knot; diagram or engine inconsistency");
  if (pairs[0].first != 0 || pairs[1].first != 0)
    throw InternalError("lee homology concentrated off homological degree 0");
  res.smin = std::min(pairs[0].second, pairs[1].second);
  res.smax = std::max(pairs[0].second, pairs[1].second);
  if (res.smax - res.smin != 2)
    throw InternalError("lee filtration levels differ by " +
                        std::to_string(res.smax - res.smin) + ", expected 2");
  res.s = (res.smin + res.smax) / 2;
  res.field = "Q";
  return res;
}

int lee_total_rank(const PlanarDiagram& d, const HomologyOptions& opts) {
  return static_cast<int>(homology_pairs<RatF>(d, 1, opts).size());
}

}  // namespace knotscope
