#pragma once
// Planar diagrams as PD codes, their validation, and the Gauss code.
//
// See conventions.hpp for the slot order, orientation and sign rules.

#include <array>
#include <iosfwd>
#include <string>
#include <vector>

#include "knotscope/conventions.hpp"
#include "knotscope/errors.hpp"

namespace knotscope {

struct Crossing {
  // Arc labels, counterclockwise from the incoming under-strand.
  std::array<int, 4> arcs{};
  // +1 / -1, derived from orientation during validation.
  int sign = 0;

  int under_in() const { return arcs[kUnderIn]; }
  int under_out() const { return arcs[kUnderOut]; }
  int over_in() const { return sign > 0 ? arcs[kSlotEast] : arcs[kSlotWest]; }
  int over_out() const { return sign > 0 ? arcs[kSlotWest] : arcs[kSlotEast]; }
};

// One visit of a crossing along the knot.
struct GaussEntry {
  int crossing = 0;  // 1-based, numbered by first visit
  bool over = false;
  int sign = 0;
  bool operator==(const GaussEntry&) const = default;
};

class GaussCode {
 public:
  GaussCode() = default;
  explicit GaussCode(std::vector<GaussEntry> entries) : entries_(std::move(entries)) {}

  const std::vector<GaussEntry>& entries() const { return entries_; }
  std::string str() const;
  // Minimal serialization over all cyclic rotations, with crossings
  // renumbered by first visit; equal iff the diagrams agree up to where the
  // traversal starts.
  std::string canonical() const;
  bool operator==(const GaussCode& o) const { return entries_ == o.entries_; }

 private:
  std::vector<GaussEntry> entries_;
};

class PlanarDiagram {
 public:
  // The designated 0-crossing unknot; PD codes cannot express it.
  static PlanarDiagram unknot();

  // Parse the external text form: whitespace-separated X[a,b,c,d] atoms, or
  // the single token U for the 0-crossing unknot.  Throws ParseError.
  static PlanarDiagram parse(const std::string& text);

  // Validating constructor from raw 4-tuples (signs are derived, not taken).
  static PlanarDiagram from_tuples(const std::vector<std::array<int, 4>>& tuples);

  bool is_zero_crossing_unknot() const { return crossings_.empty(); }
  int crossing_count() const { return static_cast<int>(crossings_.size()); }
  int arc_count() const { return 2 * crossing_count(); }
  int component_count() const { return n_components_; }
  bool is_knot() const { return n_components_ == 1; }

  const std::vector<Crossing>& crossings() const { return crossings_; }
  const Crossing& crossing(int i) const { return crossings_.at(i); }

  // Next arc along the orientation (1-based labels).
  int succ(int arc) const { return succ_.at(arc); }

  int writhe() const;

  GaussCode gauss_code() const;  // knots only

  // Serialization; parse() is its inverse up to whitespace.
  std::string str() const;

  // Faces of the induced embedding as dart cycles; a dart is a
  // (crossing, slot) pair.  A connected diagram is planar iff the count
  // equals crossing_count() + 2.
  std::vector<std::vector<std::pair<int, int>>> faces() const;
  int face_count() const;
  bool is_planar_connected() const;

  // The passage through which the strand leaves the given arc:
  // (crossing index, leaves-as-over).
  std::pair<int, bool> head_passage(int arc) const;

  bool operator==(const PlanarDiagram& o) const;

 private:
  PlanarDiagram() = default;
  void validate_and_orient();  // fills signs, succ_, n_components_

  std::vector<Crossing> crossings_;
  std::vector<int> succ_;  // index 0 unused
  int n_components_ = 1;
};

std::ostream& operator<<(std::ostream& os, const PlanarDiagram& d);

}  // namespace knotscope
