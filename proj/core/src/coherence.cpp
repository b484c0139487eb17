#include "signo/coherence.hpp"

#include <algorithm>
#include <cstdlib>
#include <map>
#include <set>

#include "signo/error.hpp"

namespace signo {

namespace {

// true iff the vertex multiset holds some pair {-e_k, e_k} with k < n
bool has_inner_antipodes(const std::vector<int>& vertices, int n) {
  std::set<int> seen(vertices.begin(), vertices.end());
  for (int k = 1; k < n; ++k)
    if (seen.count(k) && seen.count(-k)) return true;
  return false;
}

}  // namespace

bool is_coherent_fast(const MonotonePath& p) {
  std::set<int> seen(p.interior.begin(), p.interior.end());
  for (int k : p.interior)
    if (seen.count(-k)) return false;
  return true;
}

bool is_coherent_fast(const CellularString& s, int n) {
  return !has_inner_antipodes(s.vertex_set(), n);
}

std::vector<LinConstraint> coherence_system(const std::vector<Face>& cells, const Orientation& o) {
  const int n = o.n();
  std::vector<LinConstraint> rows;
  std::set<std::pair<QVec, int>> seen;
  auto bump = [&](QVec& row, int vertex, const Rat& coef) {
    int m = std::abs(vertex);
    row[m - 1] += vertex > 0 ? coef : Rat(-coef);
  };
  for (const auto& cell : cells) {
    if (cell.size() < 2) fail(Errc::InvalidString, "cell with fewer than two vertices");
    int b = *std::min_element(cell.begin(), cell.end());
    int c = *std::max_element(cell.begin(), cell.end());
    Rat ab = o.value(b), ac = o.value(c);
    Rat delta = ac - ab;
    if (delta <= 0) fail(Errc::InvalidString, "cell without distinct extremes");
    for (int w = -n; w <= n; ++w) {
      if (w == 0 || w == b || w == c) continue;
      Rat aw = o.value(w);
      // (ac - ab) phi(w) + (aw - ac) phi(b) + (ab - aw) phi(c), cleared of the
      // positive denominator: positive iff w sits strictly above the cell line.
      QVec row = zero_vec(n);
      bump(row, w, delta);
      bump(row, b, aw - ac);
      bump(row, c, ab - aw);
      bool in_cell = std::find(cell.begin(), cell.end(), w) != cell.end();
      auto kind = in_cell ? ConstraintKind::Eq : ConstraintKind::StrictPos;
      if (is_zero(row) && kind == ConstraintKind::Eq) continue;
      if (seen.insert({row, static_cast<int>(kind)}).second)
        rows.push_back({std::move(row), kind});
    }
  }
  return rows;
}

std::optional<QVec> is_coherent_lp(const MonotonePath& p, const Orientation& o) {
  return is_coherent_lp(path_to_string(p, o.n()), o);
}

std::optional<QVec> is_coherent_lp(const CellularString& s, const Orientation& o) {
  if (!is_valid_string(s, o.n())) fail(Errc::InvalidString, "not a cellular string");
  return lp_feasible_strict(coherence_system(s.cells, o));
}

QVec build_witness(const MonotonePath& p, const Orientation& o) {
  return build_witness(path_to_string(p, o.n()), o);
}

QVec build_witness(const CellularString& s, const Orientation& o) {
  const int n = o.n();
  if (!is_valid_string(s, n)) fail(Errc::InvalidString, "not a cellular string");
  if (!is_coherent_fast(s, n)) fail(Errc::IncoherentInput, "string fails the antipode criterion");

  const int k = static_cast<int>(s.cells.size());
  std::map<int, Rat> val;  // phi on the vertices that occur
  val[-n] = 0;
  val[n] = 0;
  // chain endpoints: slope -1/j on segment j, the last one is pinned at e_n
  for (int j = 1; j < k; ++j) {
    int b = s.cells[j - 1].front(), c = s.cells[j - 1].back();
    val[c] = val[b] - (o.value(c) - o.value(b)) / j;
  }
  // interior cell vertices sit on their own segment
  for (int j = 1; j <= k; ++j) {
    const Face& cell = s.cells[j - 1];
    int b = cell.front(), c = cell.back();
    Rat slope = (val[c] - val[b]) / (o.value(c) - o.value(b));
    for (int w : cell) {
      if (w == b || w == c) continue;
      val[w] = val[b] + slope * (o.value(w) - o.value(b));
    }
  }
  QVec phi = zero_vec(n);  // coordinates without an antipode in the string stay 0
  for (const auto& [w, t] : val) {
    int m = std::abs(w);
    phi[m - 1] = w > 0 ? t : Rat(-t);
  }

  // exact re-check; fall back to the LP witness if any strict row is weak
  bool ok = true;
  for (const auto& c : coherence_system(s.cells, o)) {
    Rat v = dot(c.coeffs, phi);
    if (c.kind == ConstraintKind::Eq ? v != 0 : v <= 0) {
      ok = false;
      break;
    }
  }
  if (ok) return phi;
  auto w = is_coherent_lp(s, o);
  if (!w) fail(Errc::Internal, "coherent string rejected by the LP");
  return *w;
}

}  // namespace signo
