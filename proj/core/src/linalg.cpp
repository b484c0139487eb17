#include "signo/linalg.hpp"

#include <algorithm>

namespace signo {

namespace {

// Reduced row echelon form in place. Returns the pivot column of each pivot row.
std::vector<int> rref(std::vector<QVec>& rows, int cols) {
  std::vector<int> pivot_cols;
  int r = 0;
  for (int c = 0; c < cols && r < static_cast<int>(rows.size()); ++c) {
    int p = -1;
    for (int i = r; i < static_cast<int>(rows.size()); ++i)
      if (rows[i][c] != 0) {
        p = i;
        break;
      }
    if (p < 0) continue;
    std::swap(rows[r], rows[p]);
    Rat inv = Rat(1) / rows[r][c];
    for (auto& x : rows[r]) x *= inv;
    for (int i = 0; i < static_cast<int>(rows.size()); ++i) {
      if (i == r || rows[i][c] == 0) continue;
      Rat f = rows[i][c];
      for (int j = 0; j < static_cast<int>(rows[i].size()); ++j) rows[i][j] -= f * rows[r][j];
    }
    pivot_cols.push_back(c);
    ++r;
  }
  return pivot_cols;
}

}  // namespace

std::optional<QVec> solve_linear(const std::vector<std::pair<QVec, Rat>>& system) {
  if (system.empty()) return QVec{};
  size_t d = system[0].first.size();
  std::vector<QVec> aug;
  aug.reserve(system.size());
  for (const auto& [row, rhs] : system) {
    if (row.size() != d)
      fail(Errc::DimensionMismatch, "ragged system row of length " + std::to_string(row.size()));
    QVec r = row;
    r.push_back(rhs);
    aug.push_back(std::move(r));
  }
  auto pivots = rref(aug, static_cast<int>(d));
  // a pivot in the augmented column means 0 = 1
  for (const auto& row : aug) {
    bool zero_lhs = true;
    for (size_t j = 0; j < d; ++j)
      if (row[j] != 0) {
        zero_lhs = false;
        break;
      }
    if (zero_lhs && row[d] != 0) return std::nullopt;
  }
  QVec x = zero_vec(static_cast<int>(d));
  for (size_t i = 0; i < pivots.size(); ++i) x[pivots[i]] = aug[i][d];
  return x;
}

int rank(std::vector<QVec> rows) {
  if (rows.empty()) return 0;
  size_t d = rows[0].size();
  for (const auto& r : rows)
    if (r.size() != d) fail(Errc::DimensionMismatch, "ragged matrix");
  return static_cast<int>(rref(rows, static_cast<int>(d)).size());
}

std::vector<QVec> nullspace(const std::vector<QVec>& rows, int dim) {
  for (const auto& r : rows)
    if (static_cast<int>(r.size()) != dim) fail(Errc::DimensionMismatch, "ragged matrix");
  std::vector<QVec> m = rows;
  auto pivots = rref(m, dim);
  std::vector<bool> is_pivot(dim, false);
  for (int c : pivots) is_pivot[c] = true;
  std::vector<QVec> basis;
  for (int f = 0; f < dim; ++f) {
    if (is_pivot[f]) continue;
    QVec v = zero_vec(dim);
    v[f] = 1;
    for (size_t i = 0; i < pivots.size(); ++i) v[pivots[i]] = -m[i][f];
    basis.push_back(std::move(v));
  }
  return basis;
}

int affine_rank(const std::vector<QVec>& points) {
  if (points.empty()) return -1;
  std::vector<QVec> diffs;
  for (size_t i = 1; i < points.size(); ++i) diffs.push_back(sub(points[i], points[0]));
  if (diffs.empty()) return 0;
  return rank(std::move(diffs));
}

}  // namespace signo
