#pragma once
// Incremental construction of the Khovanov/Lee complex: crossings are glued
// one at a time onto a complex of planar tangles, closed circles are
// delooped into quantum shifts, and invertible (identity-type) entries are
// cancelled immediately.  Intermediate complexes stay near the size of the
// homology instead of the full 2^n cube.
//
// Objects are crossingless matchings of the current open boundary plus a
// (homological, quantum) shift.  An entry of the differential between two
// matchings is a linear combination of dotted-disk cobordisms: a basis
// element assigns a dot (label x) or no dot (label 1) to each cycle of the
// union of the source matching with the reversed target matching.  Gluing,
// composition and delooping reduce to the Frobenius rules
//   m: 11->1, 1x/x1->x, xx->t.1      Delta: 1->1x+x1, x->xx+t.11
// together with dot.dot = t and handle = 2x (genus from compositions).

#include <cstdint>
#include <map>
#include <set>
#include <vector>

#include "knotscope/homology/field.hpp"
#include "knotscope/pd.hpp"

namespace knotscope {

template <class F>
class ScanComplex {
 public:
  struct Term {
    std::uint64_t dots = 0;  // bit per cycle, canonical cycle order
    F coeff;
  };
  using Entry = std::vector<Term>;  // sorted by dots, no zero coefficients

  struct Obj {
    int i = 0;                    // homological degree
    int q = 0;                    // quantum shift
    std::vector<int> match;       // involution on boundary positions
    bool alive = false;
  };

  // Starts as the complex of the empty tangle: one object in bidegree (0,0).
  explicit ScanComplex(int t_param) : t_(t_param) { new_obj(0, 0, {}); }

  // Glue the next crossing (by PD data) onto the complex.
  void add_crossing(const std::array<int, 4>& arcs, int sign,
                    const std::set<int>& open_arcs_before);

  // Cancel all identity-type entries (equal matching, equal gradings, unit
  // coefficient, no dots).
  void cancel_all();

  // After the last crossing the boundary is empty and all entries are
  // scalars; eliminate lowest-jump-first and return surviving (i, q).
  std::vector<std::pair<int, int>> finish();

  // Full d.d = 0 verification via cobordism composition (expensive;
  // enabled in tests and for small inputs).
  void check_d2() const;

  std::size_t object_count() const {
    std::size_t n = 0;
    for (const auto& o : objs_) n += o.alive;
    return n;
  }
  std::size_t boundary_size() const { return boundary_.size(); }

  // Abort threshold for runaway growth.
  std::uint64_t object_limit = 1ull << 24;

 private:
  int t_;
  // Open boundary: each slot carries (token, arc id); positions are indices.
  std::vector<std::pair<int, int>> boundary_;
  int next_token_ = 0;

  std::vector<Obj> objs_;
  std::vector<std::map<int, Entry>> out_;
  std::vector<std::set<int>> in_;

  int new_obj(int i, int q, std::vector<int> match);
  void set_entry(int s, int t, Entry e);
  void add_to_entry(int s, int t, const Entry& e);

  // Glue boundary positions p and q everywhere (p != q), delooping any
  // circles that close.
  void glue_positions(int p, int q);

  void cancel(int a, int b);

  // Cycles of (match_a, match_b) as position lists, canonical order.
  static std::vector<std::vector<int>> cycles(const std::vector<int>& ma,
                                              const std::vector<int>& mb);

  Entry compose(const Obj& x, const std::vector<int>& mid, const Obj& y,
                const Entry& first, const Entry& second) const;

  friend struct ScanComplexTestAccess;
};

extern template class ScanComplex<F2>;
extern template class ScanComplex<RatF>;

struct ScanStats {
  std::uint64_t peak_objects = 0;
  std::uint64_t survivors = 0;
};

// Run the scan over the whole diagram; returns surviving (i, q) pairs.
// t_param = 0 for Khovanov, 1 for Lee.  check_each_step enables the d.d = 0
// assertion after every crossing.
template <class F>
std::vector<std::pair<int, int>> scan_homology(const PlanarDiagram& d, int t_param,
                                               bool check_each_step = false,
                                               std::uint64_t object_limit = 1ull << 24,
                                               ScanStats* stats = nullptr);

extern template std::vector<std::pair<int, int>> scan_homology<F2>(
    const PlanarDiagram&, int, bool, std::uint64_t, ScanStats*);
extern template std::vector<std::pair<int, int>> scan_homology<RatF>(
    const PlanarDiagram&, int, bool, std::uint64_t, ScanStats*);

}  // namespace knotscope
