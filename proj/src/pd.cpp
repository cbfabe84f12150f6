#include "knotscope/pd.hpp"

#include <algorithm>
#include <cctype>
#include <map>
#include <ostream>
#include <sstream>

namespace knotscope {

namespace {

// An occurrence of an arc label at a crossing slot.
struct Occ {
  int crossing = -1;
  int slot = -1;
  bool operator==(const Occ& o) const { return crossing == o.crossing && slot == o.slot; }
};

int passage_partner_slot(int slot) {
  switch (slot) {
    case kUnderIn: return kUnderOut;
    case kUnderOut: return kUnderIn;
    case kSlotEast: return kSlotWest;
    default: return kSlotEast;
  }
}

bool is_under_slot(int slot) { return slot == kUnderIn || slot == kUnderOut; }

}  // namespace

PlanarDiagram PlanarDiagram::unknot() {
  PlanarDiagram d;
  d.n_components_ = 1;
  d.succ_ = {0};
  return d;
}

PlanarDiagram PlanarDiagram::from_tuples(const std::vector<std::array<int, 4>>& tuples) {
  PlanarDiagram d;
  for (const auto& t : tuples) {
    Crossing c;
    c.arcs = t;
    d.crossings_.push_back(c);
  }
  d.validate_and_orient();
  return d;
}

PlanarDiagram PlanarDiagram::parse(const std::string& text) {
  std::vector<std::array<int, 4>> tuples;
  size_t i = 0;
  auto skip_ws = [&] {
    while (i < text.size() && std::isspace(static_cast<unsigned char>(text[i]))) ++i;
  };
  skip_ws();
  if (i == text.size())
    throw ParseError("empty PD text (use the token 'U' for the 0-crossing unknot)");
  if (text[i] == 'U') {
    ++i;
    skip_ws();
    if (i != text.size()) throw ParseError("unexpected text after 'U'");
    return unknot();
  }
  while (i < text.size()) {
    skip_ws();
    if (i == text.size()) break;
    if (text[i] != 'X')
      throw ParseError("expected 'X[' at position " + std::to_string(i),
                       -1, static_cast<int>(tuples.size()));
    ++i;
    if (i >= text.size() || text[i] != '[')
      throw ParseError("expected '[' after 'X'", -1, static_cast<int>(tuples.size()));
    ++i;
    std::array<int, 4> t{};
    for (int k = 0; k < 4; ++k) {
      skip_ws();
      size_t j = i;
      while (j < text.size() && std::isdigit(static_cast<unsigned char>(text[j]))) ++j;
      if (j == i)
        throw ParseError("expected arc label in crossing " +
                             std::to_string(tuples.size() + 1),
                         -1, static_cast<int>(tuples.size()));
      t[k] = std::stoi(text.substr(i, j - i));
      i = j;
      skip_ws();
      if (k < 3) {
        if (i >= text.size() || text[i] != ',')
          throw ParseError("expected ',' in crossing " + std::to_string(tuples.size() + 1),
                           -1, static_cast<int>(tuples.size()));
        ++i;
      }
    }
    if (i >= text.size() || text[i] != ']')
      throw ParseError("expected ']' in crossing " + std::to_string(tuples.size() + 1),
                       -1, static_cast<int>(tuples.size()));
    ++i;
    tuples.push_back(t);
    skip_ws();
  }
  return from_tuples(tuples);
}

void PlanarDiagram::validate_and_orient() {
  const int n = crossing_count();
  const int n_arcs = 2 * n;
  succ_.assign(n_arcs + 1, 0);

  // Label counts.
  std::vector<std::vector<Occ>> occs(n_arcs + 1);
  for (int ci = 0; ci < n; ++ci) {
    for (int s = 0; s < 4; ++s) {
      int a = crossings_[ci].arcs[s];
      if (a < 1 || a > n_arcs)
        throw ParseError("arc label " + std::to_string(a) + " out of range 1.." +
                             std::to_string(n_arcs) + " at crossing " + std::to_string(ci + 1),
                         a, ci);
      occs[a].push_back({ci, s});
    }
  }
  for (int a = 1; a <= n_arcs; ++a) {
    if (occs[a].size() != 2)
      throw ParseError("arc label " + std::to_string(a) + " appears " +
                           std::to_string(occs[a].size()) + " times (expected 2)",
                       a);
  }

  // Trace components: walk arc -> passage -> next arc.
  std::vector<bool> arc_seen(n_arcs + 1, false);
  std::vector<std::vector<int>> components;

  auto consecutive_from_min = [](std::vector<int> arcs) {
    auto mn = std::min_element(arcs.begin(), arcs.end());
    std::rotate(arcs.begin(), mn, arcs.end());
    for (size_t k = 0; k < arcs.size(); ++k)
      if (arcs[k] != arcs[0] + static_cast<int>(k)) return std::vector<int>{};
    return arcs;
  };

  for (int start = 1; start <= n_arcs; ++start) {
    if (arc_seen[start]) continue;
    // Walk, departing from occurrence 0 of the start arc.
    std::vector<int> cycle;
    std::vector<Occ> depart;  // departure occurrence per cycle position
    int arc = start;
    Occ out = occs[start][0];
    while (true) {
      cycle.push_back(arc);
      depart.push_back(out);
      arc_seen[arc] = true;
      Occ in{out.crossing, passage_partner_slot(out.slot)};
      int next_arc = crossings_[in.crossing].arcs[in.slot];
      const auto& no = occs[next_arc];
      Occ next_out = (no[0] == in) ? no[1] : no[0];
      if (next_arc == start) {
        if (next_out == occs[start][0]) break;  // clean closure
        throw ParseError("arc connectivity is inconsistent at label " +
                             std::to_string(next_arc),
                         next_arc);
      }
      if (arc_seen[next_arc])
        throw ParseError("arc connectivity is inconsistent at label " +
                             std::to_string(next_arc),
                         next_arc);
      arc = next_arc;
      out = next_out;
    }

    // Decide whether the walk runs with or against the orientation, using
    // the under-passages (the strand must leave on the under-IN slot).
    int dir = 0;  // +1 walk-forward, -1 walk-backward
    for (size_t k = 0; k < cycle.size(); ++k) {
      if (!is_under_slot(depart[k].slot)) continue;
      int want = depart[k].slot == kUnderIn ? +1 : -1;
      if (dir == 0) dir = want;
      else if (dir != want)
        throw ParseError("orientation inconsistency at crossing " +
                             std::to_string(depart[k].crossing + 1),
                         cycle[k], depart[k].crossing);
    }

    std::vector<int> oriented;
    if (dir != 0) {
      oriented = cycle;
      if (dir < 0) std::reverse(oriented.begin(), oriented.end());
      oriented = consecutive_from_min(oriented);
    } else {
      // Component never goes under (pure over-strand circle): either
      // direction is combinatorially admissible; take the one with
      // ascending labels.
      oriented = consecutive_from_min(cycle);
      if (oriented.empty()) {
        std::reverse(cycle.begin(), cycle.end());
        oriented = consecutive_from_min(cycle);
      }
    }
    if (oriented.empty())
      throw ParseError("arc labels do not increase along the component containing arc " +
                           std::to_string(start),
                       start);
    for (size_t k = 0; k < oriented.size(); ++k)
      succ_[oriented[k]] = oriented[(k + 1) % oriented.size()];
    components.push_back(oriented);
  }

  // Component label blocks must tile 1..2n, which the consecutive check plus
  // the exactly-twice rule already guarantees; record the count.
  n_components_ = n == 0 ? 1 : static_cast<int>(components.size());

  // Every under passage must realize succession.
  for (int ci = 0; ci < n; ++ci) {
    const Crossing& c = crossings_[ci];
    if (succ_[c.under_in()] != c.under_out())
      throw ParseError("under-strand labels not successive at crossing " +
                           std::to_string(ci + 1),
                       c.under_in(), ci);
  }

  // Signs: the over-strand departs East (+1) or West (-1); its direction is
  // the one realizing succession.  For the self-paired cases (b == d, or a
  // kink where both directions satisfy succession) the strand leaving the
  // under-out arc enters the over-pass, which fixes the direction.
  for (int ci = 0; ci < n; ++ci) {
    Crossing& c = crossings_[ci];
    int b = c.arcs[kSlotEast], d = c.arcs[kSlotWest];
    bool east_in = succ_[b] == d;   // over-strand runs East -> West
    bool west_in = succ_[d] == b;   // over-strand runs West -> East
    if (east_in && west_in) {
      // Ambiguous by succession alone (two-arc component through this
      // over-pass).  If the under-pass shares the component, the over pass
      // is entered by the under-out arc.
      if (b == c.under_out()) west_in = false;
      else if (d == c.under_out()) east_in = false;
      else west_in = false;  // disjoint over-circle: canonical direction
    }
    if (!east_in && !west_in)
      throw ParseError("over-strand labels not successive at crossing " +
                           std::to_string(ci + 1),
                       b, ci);
    c.sign = east_in ? +1 : -1;
  }
}

int PlanarDiagram::writhe() const {
  int w = 0;
  for (const auto& c : crossings_) w += c.sign;
  return w;
}

std::pair<int, bool> PlanarDiagram::head_passage(int arc) const {
  const int target = succ(arc);
  for (int ci = 0; ci < crossing_count(); ++ci) {
    const Crossing& c = crossings_[ci];
    if (c.under_in() == arc && c.under_out() == target) return {ci, false};
  }
  for (int ci = 0; ci < crossing_count(); ++ci) {
    const Crossing& c = crossings_[ci];
    if (c.over_in() == arc && c.over_out() == target) return {ci, true};
  }
  throw InternalError("head_passage: broken succession at arc " + std::to_string(arc));
}

GaussCode PlanarDiagram::gauss_code() const {
  if (!is_knot()) throw KnotRequired("gauss_code");
  std::vector<GaussEntry> entries;
  if (is_zero_crossing_unknot()) return GaussCode(entries);
  const int n_arcs = arc_count();
  std::vector<int> number(crossing_count(), 0);
  int next_no = 1;
  // Visit passages in arc order: the passage at the head of arc a.
  for (int a = 1; a <= n_arcs; ++a) {
    auto [ci, over] = head_passage(a);
    if (number[ci] == 0) number[ci] = next_no++;
    entries.push_back({number[ci], over, crossings_[ci].sign});
  }
  return GaussCode(entries);
}

std::string PlanarDiagram::str() const {
  if (is_zero_crossing_unknot()) return "U";
  std::ostringstream out;
  for (size_t i = 0; i < crossings_.size(); ++i) {
    if (i) out << " ";
    const auto& a = crossings_[i].arcs;
    out << "X[" << a[0] << "," << a[1] << "," << a[2] << "," << a[3] << "]";
  }
  return out.str();
}

std::vector<std::vector<std::pair<int, int>>> PlanarDiagram::faces() const {
  std::vector<std::vector<std::pair<int, int>>> out;
  if (is_zero_crossing_unknot()) return out;
  // Darts are (crossing, slot); the arc joins its two occurrences. Face
  // walk: traverse the arc, then turn to the next slot counterclockwise.
  const int n = crossing_count();
  std::vector<std::array<Occ, 2>> ends(arc_count() + 1);
  std::vector<int> fill(arc_count() + 1, 0);
  for (int ci = 0; ci < n; ++ci)
    for (int s = 0; s < 4; ++s) {
      int a = crossings_[ci].arcs[s];
      ends[a][fill[a]++] = Occ{ci, s};
    }
  std::vector<bool> used(4 * n, false);
  for (int d0 = 0; d0 < 4 * n; ++d0) {
    if (used[d0]) continue;
    std::vector<std::pair<int, int>> face;
    int d = d0;
    while (!used[d]) {
      used[d] = true;
      int ci = d / 4, s = d % 4;
      face.emplace_back(ci, s);
      int a = crossings_[ci].arcs[s];
      Occ here{ci, s};
      Occ other = (ends[a][0] == here) ? ends[a][1] : ends[a][0];
      int ns = (other.slot + 1) % 4;
      d = other.crossing * 4 + ns;
    }
    out.push_back(std::move(face));
  }
  return out;
}

int PlanarDiagram::face_count() const {
  if (is_zero_crossing_unknot()) return 2;
  return static_cast<int>(faces().size());
}

bool PlanarDiagram::is_planar_connected() const {
  if (is_zero_crossing_unknot()) return true;
  return face_count() == crossing_count() + 2;
}

bool PlanarDiagram::operator==(const PlanarDiagram& o) const {
  if (crossings_.size() != o.crossings_.size()) return false;
  for (size_t i = 0; i < crossings_.size(); ++i)
    if (crossings_[i].arcs != o.crossings_[i].arcs) return false;
  return true;
}

std::string GaussCode::str() const {
  std::ostringstream out;
  for (size_t i = 0; i < entries_.size(); ++i) {
    if (i) out << " ";
    out << (entries_[i].over ? "O" : "U") << entries_[i].crossing
        << (entries_[i].sign > 0 ? "+" : "-");
  }
  return out.str();
}

std::string GaussCode::canonical() const {
  if (entries_.empty()) return "";
  std::string best;
  const size_t m = entries_.size();
  for (size_t r = 0; r < m; ++r) {
    std::map<int, int> renum;
    std::ostringstream out;
    int next = 1;
    for (size_t i = 0; i < m; ++i) {
      const GaussEntry& e = entries_[(r + i) % m];
      auto [it, fresh] = renum.try_emplace(e.crossing, next);
      if (fresh) ++next;
      if (i) out << " ";
      out << (e.over ? "O" : "U") << it->second << (e.sign > 0 ? "+" : "-");
    }
    std::string s = out.str();
    if (best.empty() || s < best) best = s;
  }
  return best;
}

std::ostream& operator<<(std::ostream& os, const PlanarDiagram& d) {
  return os << d.str();
}

}  // namespace knotscope
