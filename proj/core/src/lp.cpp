#include "signo/lp.hpp"

#include <algorithm>

#include "signo/linalg.hpp"

namespace signo {

namespace detail {

Phase1 phase1_simplex(std::vector<QVec> rows, QVec rhs) {
  const int m = static_cast<int>(rows.size());
  if (m == 0) return {true, {}, {}, 0};
  const int k = static_cast<int>(rows[0].size());
  for (const auto& r : rows)
    if (static_cast<int>(r.size()) != k) fail(Errc::DimensionMismatch, "ragged LP rows");
  if (static_cast<int>(rhs.size()) != m) fail(Errc::DimensionMismatch, "rhs length");

  // Flip rows to make the right-hand side nonnegative, so the artificial
  // variables form a feasible starting basis.
  std::vector<int> flip(m, 1);
  for (int i = 0; i < m; ++i)
    if (rhs[i] < 0) {
      flip[i] = -1;
      rhs[i] = -rhs[i];
      for (auto& x : rows[i]) x = -x;
    }

  // Tableau: structural columns 0..k-1, artificial columns k..k+m-1, rhs in `rhs`.
  const int total = k + m;
  std::vector<QVec> t(m, zero_vec(total));
  for (int i = 0; i < m; ++i) {
    for (int j = 0; j < k; ++j) t[i][j] = rows[i][j];
    t[i][k + i] = 1;
  }
  std::vector<int> basis(m);
  for (int i = 0; i < m; ++i) basis[i] = k + i;

  // Reduced costs for objective = sum of artificials: c_j - sum of rows for
  // structural columns, 0 for the (basic) artificials.
  QVec cost = zero_vec(total);
  for (int j = 0; j < k; ++j)
    for (int i = 0; i < m; ++i) cost[j] -= t[i][j];

  for (;;) {
    int enter = -1;
    for (int j = 0; j < total; ++j)
      if (cost[j] < 0) {
        enter = j;
        break;
      }
    if (enter < 0) break;
    int leave = -1;
    Rat best;
    for (int i = 0; i < m; ++i) {
      if (t[i][enter] <= 0) continue;
      Rat ratio = rhs[i] / t[i][enter];
      if (leave < 0 || ratio < best || (ratio == best && basis[i] < basis[leave])) {
        best = ratio;
        leave = i;
      }
    }
    if (leave < 0) fail(Errc::Internal, "phase-1 objective unbounded");
    Rat inv = Rat(1) / t[leave][enter];
    for (auto& x : t[leave]) x *= inv;
    rhs[leave] *= inv;
    for (int i = 0; i < m; ++i) {
      if (i == leave || t[i][enter] == 0) continue;
      Rat f = t[i][enter];
      for (int j = 0; j < total; ++j) t[i][j] -= f * t[leave][j];
      rhs[i] -= f * rhs[leave];
    }
    if (cost[enter] != 0) {
      Rat f = cost[enter];
      for (int j = 0; j < total; ++j) cost[j] -= f * t[leave][j];
    }
    basis[leave] = enter;
  }

  Phase1 out;
  out.objective = 0;
  for (int i = 0; i < m; ++i)
    if (basis[i] >= k) out.objective += rhs[i];
  out.feasible = (out.objective == 0);
  out.x.assign(k, Rat(0));
  if (out.feasible)
    for (int i = 0; i < m; ++i)
      if (basis[i] < k) out.x[basis[i]] = rhs[i];
  // Dual multipliers: reduced cost of artificial i is 1 - pi_i in the solved
  // (possibly flipped) system; undo the flip to price the original rows.
  out.price.assign(m, Rat(0));
  for (int i = 0; i < m; ++i) {
    Rat pi = Rat(1) - cost[k + i];
    out.price[i] = flip[i] < 0 ? Rat(-pi) : pi;
  }
  return out;
}

}  // namespace detail

std::optional<QVec> lp_feasible_strict(const std::vector<LinConstraint>& cons) {
  int d = -1;
  for (const auto& c : cons) {
    if (d < 0) d = static_cast<int>(c.coeffs.size());
    if (static_cast<int>(c.coeffs.size()) != d)
      fail(Errc::DimensionMismatch, "constraint rows of mixed length");
  }
  if (d < 0) return QVec{};

  std::vector<QVec> eq, strict;
  for (const auto& c : cons) {
    if (c.kind == ConstraintKind::Eq) {
      if (!is_zero(c.coeffs)) eq.push_back(c.coeffs);
    } else {
      if (is_zero(c.coeffs)) return std::nullopt;  // 0 > 0 can never hold
      strict.push_back(c.coeffs);
    }
  }

  // Restrict to the nullspace of the equalities, then decide B psi >= 1.
  std::vector<QVec> basis;
  if (eq.empty()) {
    for (int i = 0; i < d; ++i) {
      QVec e = zero_vec(d);
      e[i] = 1;
      basis.push_back(std::move(e));
    }
  } else {
    basis = nullspace(eq, d);
  }
  if (strict.empty()) {
    // any nullspace point works; use 0
    return zero_vec(d);
  }
  const int r = static_cast<int>(basis.size());
  if (r == 0) return std::nullopt;

  const int mm = static_cast<int>(strict.size());
  std::vector<QVec> b(mm, zero_vec(r));
  for (int i = 0; i < mm; ++i)
    for (int j = 0; j < r; ++j) b[i][j] = dot(strict[i], basis[j]);

  // Farkas alternative of { B psi >= 1 }: a certificate y >= 0 with
  // B^T y = 0 and sum(y) = 1 exists iff the system is infeasible. When the
  // phase-1 optimum is positive no certificate exists, and its dual prices
  // (phi~, v) satisfy B(-phi~) >= v * 1 with v = optimum > 0, so -phi~/v is a
  // witness for B psi >= 1.
  std::vector<QVec> frows(r + 1, zero_vec(mm));
  for (int j = 0; j < mm; ++j) {
    for (int i = 0; i < r; ++i) frows[i][j] = b[j][i];
    frows[r][j] = 1;
  }
  QVec frhs = zero_vec(r + 1);
  frhs[r] = 1;
  auto p1 = detail::phase1_simplex(std::move(frows), std::move(frhs));
  if (p1.feasible) return std::nullopt;

  Rat v = p1.price[r];
  if (v <= 0) fail(Errc::Internal, "farkas dual price not positive");
  QVec psi(r);
  for (int j = 0; j < r; ++j) psi[j] = -p1.price[j] / v;
  QVec phi = zero_vec(d);
  for (int j = 0; j < r; ++j) phi = add(phi, scale(psi[j], basis[j]));

  // The witness is exact; verify before handing it out.
  for (const auto& c : cons) {
    Rat val = dot(c.coeffs, phi);
    if (c.kind == ConstraintKind::Eq ? val != 0 : val < 1)
      fail(Errc::Internal, "lp witness failed verification");
  }
  return phi;
}

bool is_vertex(const QVec& p, const std::vector<QVec>& cloud) {
  const int d = static_cast<int>(p.size());
  std::vector<QVec> others;
  bool found = false;
  for (const auto& q : cloud) {
    if (static_cast<int>(q.size()) != d) fail(Errc::DimensionMismatch, "cloud point dimension");
    if (q == p) {
      found = true;
      continue;
    }
    if (std::find(others.begin(), others.end(), q) == others.end()) others.push_back(q);
  }
  if (!found) fail(Errc::PointNotInCloud, "query point must be a member of the cloud");
  if (others.empty()) return true;

  // p in conv(others)?  sum lambda_q q = p, sum lambda = 1, lambda >= 0.
  const int m = static_cast<int>(others.size());
  std::vector<QVec> rows(d + 1, zero_vec(m));
  for (int j = 0; j < m; ++j) {
    for (int i = 0; i < d; ++i) rows[i][j] = others[j][i];
    rows[d][j] = 1;
  }
  QVec rhs = p;
  rhs.push_back(1);
  auto p1 = detail::phase1_simplex(std::move(rows), std::move(rhs));
  return !p1.feasible;
}

}  // namespace signo
