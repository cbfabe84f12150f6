#include "knotscope/wirtinger.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

namespace knotscope {

namespace {

struct UnionFind {
  std::vector<int> parent;
  explicit UnionFind(int n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }
  int find(int x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  }
  void unite(int a, int b) { parent[find(a)] = find(b); }
};

}  // namespace

WirtingerPresentation wirtinger_presentation(const PlanarDiagram& d) {
  if (!d.is_knot()) throw KnotRequired("wirtinger_presentation");
  WirtingerPresentation w;
  if (d.is_zero_crossing_unknot()) {
    w.generators = 1;
    return w;
  }
  const int n_arcs = d.arc_count();
  // Wirtinger arcs are maximal over-passes: PD arcs joined across each
  // over-strand passage.
  UnionFind uf(n_arcs + 1);
  for (const Crossing& c : d.crossings()) uf.unite(c.arcs[kSlotEast], c.arcs[kSlotWest]);
  std::vector<int> class_of(n_arcs + 1, -1);
  int next = 0;
  for (int a = 1; a <= n_arcs; ++a) {
    int root = uf.find(a);
    if (class_of[root] < 0) class_of[root] = next++;
  }
  w.generators = next;
  w.arc_class.assign(n_arcs + 1, -1);
  for (int a = 1; a <= n_arcs; ++a) w.arc_class[a] = class_of[uf.find(a)];
  if (w.generators != d.crossing_count())
    throw InternalError("wirtinger_presentation: generator count != crossing count");
  for (const Crossing& c : d.crossings()) {
    WirtingerRelation r;
    r.in = w.arc_class[c.under_in()];
    r.out = w.arc_class[c.under_out()];
    r.over = w.arc_class[c.arcs[kSlotEast]];
    r.eps = c.sign;
    w.relations.push_back(r);
  }
  return w;
}

std::string WirtingerPresentation::str() const {
  std::ostringstream out;
  out << "<";
  for (int g = 0; g < generators; ++g) out << (g ? ", x" : "x") << g + 1;
  out << " | ";
  for (size_t i = 0; i < relations.size(); ++i) {
    const auto& r = relations[i];
    if (i) out << ", ";
    std::string xo = "x" + std::to_string(r.over + 1);
    out << "x" << r.out + 1 << " = ";
    if (r.eps > 0)
      out << xo << " x" << r.in + 1 << " " << xo << "^-1";
    else
      out << xo << "^-1 x" << r.in + 1 << " " << xo;
  }
  out << ">";
  return out.str();
}

AlexanderMatrix alexander_matrix(const WirtingerPresentation& w) {
  AlexanderMatrix m(w.relations.size(),
                    std::vector<LaurentPoly>(w.generators, LaurentPoly::zero()));
  const LaurentPoly t = LaurentPoly::var();
  const LaurentPoly one = LaurentPoly::one();
  for (size_t i = 0; i < w.relations.size(); ++i) {
    const auto& r = w.relations[i];
    // Fox derivatives of x_over^eps x_in x_over^-eps x_out^-1 under x -> t,
    // with the eps = -1 row scaled by the unit -t.
    if (r.eps > 0) {
      m[i][r.in] += t;
      m[i][r.over] += one - t;
      m[i][r.out] += -one;
    } else {
      m[i][r.in] += one;
      m[i][r.over] += t - one;
      m[i][r.out] += -t;
    }
  }
  return m;
}

LaurentPoly laurent_determinant(AlexanderMatrix m) {
  const size_t n = m.size();
  if (n == 0) return LaurentPoly::one();
  for (const auto& row : m)
    if (row.size() != n) throw InternalError("laurent_determinant: matrix not square");
  // Clear negative exponents row by row (unit row scalings only affect the
  // answer by units; callers normalize).
  for (auto& row : m) {
    int mn = 0;
    for (const auto& e : row)
      if (!e.is_zero()) mn = std::min(mn, e.min_exponent());
    if (mn < 0)
      for (auto& e : row) e = e.shifted(-mn);
  }
  // Bareiss fraction-free elimination.
  LaurentPoly prev = LaurentPoly::one();
  int sign = 1;
  for (size_t k = 0; k + 1 < n; ++k) {
    if (m[k][k].is_zero()) {
      size_t swap_row = k + 1;
      while (swap_row < n && m[swap_row][k].is_zero()) ++swap_row;
      if (swap_row == n) return LaurentPoly::zero();
      std::swap(m[k], m[swap_row]);
      sign = -sign;
    }
    for (size_t i = k + 1; i < n; ++i) {
      for (size_t j = k + 1; j < n; ++j) {
        LaurentPoly num = m[i][j] * m[k][k] - m[i][k] * m[k][j];
        m[i][j] = num.is_zero() ? num : num.divide_exact(prev);
      }
      m[i][k] = LaurentPoly::zero();
    }
    prev = m[k][k];
  }
  LaurentPoly det = m[n - 1][n - 1];
  return sign < 0 ? -det : det;
}

LaurentPoly alexander_polynomial_with_column(const PlanarDiagram& d, int column) {
  WirtingerPresentation w = wirtinger_presentation(d);
  const int n = w.generators;
  if (column < 0 || column >= n) throw ParseError("alexander: column out of range");
  if (d.is_zero_crossing_unknot() || n == 1) return LaurentPoly::one();
  AlexanderMatrix full = alexander_matrix(w);
  // Delete the last row (any one relation is redundant) and the chosen
  // column; the determinant is Delta up to units.
  AlexanderMatrix minor;
  for (int i = 0; i + 1 < static_cast<int>(full.size()); ++i) {
    std::vector<LaurentPoly> row;
    for (int j = 0; j < n; ++j)
      if (j != column) row.push_back(full[i][j]);
    minor.push_back(std::move(row));
  }
  LaurentPoly det = laurent_determinant(std::move(minor));
  if (det.is_zero())
    throw InternalError("alexander: vanishing determinant on a knot diagram");
  return det.normalized_up_to_units();
}

LaurentPoly alexander_polynomial(const PlanarDiagram& d) {
  return alexander_polynomial_with_column(d, 0);
}

Int knot_determinant(const PlanarDiagram& d) {
  LaurentPoly delta = alexander_polynomial(d);
  Rat v = delta.eval(Rat(-1));
  if (v.get_den() != 1) throw InternalError("knot_determinant: non-integer value");
  Int det = v.get_num();
  if (det < 0) det = -det;
  if (det % 2 == 0) throw InternalError("knot_determinant: even value on a knot");
  return det;
}

int genus_lower_bound(const PlanarDiagram& d) {
  LaurentPoly delta = alexander_polynomial(d);
  int span = delta.degree_span();
  if (span % 2 != 0)
    throw InternalError("genus_lower_bound: odd degree span violates Delta symmetry");
  return span / 2;
}

Int fox_colorings_count(const PlanarDiagram& d, int p) {
  if (p < 3 || p % 2 == 0) throw ParseError("fox_colorings_count: p must be an odd prime");
  for (int q = 3; q * q <= p; q += 2)
    if (p % q == 0) throw ParseError("fox_colorings_count: p must be an odd prime");
  WirtingerPresentation w = wirtinger_presentation(d);
  const int m = w.generators;
  // Coloring relations in + out - 2*over = 0 over F_p.
  std::vector<std::vector<long>> rows;
  for (const auto& r : w.relations) {
    std::vector<long> row(m, 0);
    row[r.in] += 1;
    row[r.out] += 1;
    row[r.over] -= 2;
    for (auto& x : row) x = ((x % p) + p) % p;
    rows.push_back(std::move(row));
  }
  // Rank over F_p.
  int rank = 0;
  for (int col = 0; col < m && rank < static_cast<int>(rows.size()); ++col) {
    int pivot = -1;
    for (int i = rank; i < static_cast<int>(rows.size()); ++i)
      if (rows[i][col] != 0) {
        pivot = i;
        break;
      }
    if (pivot < 0) continue;
    std::swap(rows[rank], rows[pivot]);
    // Normalize pivot to 1 (Fermat inverse).
    long inv = 1, base = rows[rank][col] % p, e = p - 2;
    while (e) {
      if (e & 1) inv = inv * base % p;
      base = base * base % p;
      e >>= 1;
    }
    for (auto& x : rows[rank]) x = x * inv % p;
    for (int i = 0; i < static_cast<int>(rows.size()); ++i) {
      if (i == rank || rows[i][col] == 0) continue;
      long f = rows[i][col];
      for (int j = 0; j < m; ++j) rows[i][j] = ((rows[i][j] - f * rows[rank][j]) % p + p) % p;
    }
    ++rank;
  }
  int nullity = m - rank;
  return pow_int(Int(p), static_cast<unsigned long>(nullity));
}

long count_s3_homomorphisms(const WirtingerPresentation& w) {
  if (w.generators > 12)
    throw SizeLimitExceeded("count_s3_homomorphisms: more than 12 generators");
  // S3 as permutations of {0,1,2}.
  static const int perms[6][3] = {{0, 1, 2}, {0, 2, 1}, {1, 0, 2},
                                  {1, 2, 0}, {2, 0, 1}, {2, 1, 0}};
  auto compose = [](int a, int b) {  // (a*b)(x) = a(b(x))
    int r[3];
    for (int x = 0; x < 3; ++x) r[x] = perms[a][perms[b][x]];
    for (int i = 0; i < 6; ++i)
      if (perms[i][0] == r[0] && perms[i][1] == r[1] && perms[i][2] == r[2]) return i;
    return -1;
  };
  auto inverse = [&](int a) {
    for (int i = 0; i < 6; ++i)
      if (compose(a, i) == 0) return i;
    return -1;
  };
  const int m = w.generators;
  std::vector<int> assign(m, 0);
  long count = 0;
  while (true) {
    bool ok = true;
    for (const auto& r : w.relations) {
      int xo = assign[r.over], xi = assign[r.in];
      int lhs = assign[r.out];
      int rhs = r.eps > 0 ? compose(compose(xo, xi), inverse(xo))
                          : compose(compose(inverse(xo), xi), xo);
      if (lhs != rhs) {
        ok = false;
        break;
      }
    }
    if (ok) ++count;
    int i = 0;
    while (i < m && ++assign[i] == 6) assign[i++] = 0;
    if (i == m) break;
  }
  return count;
}

}  // namespace knotscope
