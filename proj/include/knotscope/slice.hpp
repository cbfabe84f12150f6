#pragma once
// Sliceness obstructions, their aggregation into verdict reports, and the
// trace-sibling transfer rule.
//
// The engine never asserts "Slice": verdicts are NotSlice (some implemented
// obstruction fires) or Inconclusive.

#include <optional>
#include <string>
#include <vector>

#include "knotscope/khovanov.hpp"
#include "knotscope/laurent.hpp"
#include "knotscope/pd.hpp"
#include "knotscope/wirtinger.hpp"

namespace knotscope {

enum class SliceVerdict { NotSlice, Inconclusive };

inline const char* to_string(SliceVerdict v) {
  return v == SliceVerdict::NotSlice ? "NotSlice" : "Inconclusive";
}

struct SliceReport {
  std::string knot_id;
  LaurentPoly alexander;
  Int determinant;
  bool determinant_is_square = false;
  int genus_lower_bound = 0;
  std::optional<int> s_value;  // absent when the s computation was skipped
  bool topologically_slice_by_freedman = false;  // Delta == 1
  SliceVerdict verdict = SliceVerdict::Inconclusive;
  std::vector<std::string> obstructions;  // e.g. determinant-nonsquare, s-nonzero

  // Filled by trace transfer when the verdict came from a sibling.
  std::optional<std::string> transfer_provenance;
};

// True = passes (no obstruction): |Delta(-1)| is a perfect square.
bool fox_milnor_determinant_test(const PlanarDiagram& d);

SliceReport slice_report(const PlanarDiagram& d, bool compute_s,
                         const std::string& knot_id = "",
                         const HomologyOptions& opts = {});

struct TraceSiblingCertificate {
  std::string knot_a;
  std::string knot_b;
  std::string provenance;
  bool trusted = false;

  // Text form: "knot_a: <id>" / "knot_b: <id>" / "provenance: ..." /
  // "trusted: true|false" lines; '#' comments allowed.
  static TraceSiblingCertificate parse(const std::string& text);
  static TraceSiblingCertificate load(const std::string& path);
  std::string str() const;
};

struct TransferOutcome {
  SliceReport report_a;
  SliceReport report_b;
  // The s-invariant is not a trace invariant, so differing s values across
  // siblings are recorded as legal data.
  std::string note;
};

// Sliceness is a trace property: if either sibling is obstructed, both
// knots receive NotSlice (with transfer provenance on the quiet one).
TransferOutcome trace_transfer_verdict(const TraceSiblingCertificate& cert,
                                       const SliceReport& report_a,
                                       const SliceReport& report_b);

}  // namespace knotscope
