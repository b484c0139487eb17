#include "signo/verify.hpp"

#include <algorithm>
#include <map>
#include <utility>

#include "signo/linalg.hpp"
#include "signo/lp.hpp"

namespace signo {

std::vector<MppPoint> brute_mpp(const Orientation& o) {
  // first path (in enumeration order) wins as the representative source
  std::map<QVec, MonotonePath> seen;
  for (const auto& p : enumerate_paths(o.n())) {
    QVec x = bs_point(p, o).coords;
    seen.emplace(std::move(x), p);
  }
  std::vector<QVec> cloud;
  cloud.reserve(seen.size());
  for (const auto& [x, p] : seen) cloud.push_back(x);
  std::vector<MppPoint> out;
  for (const auto& [x, p] : seen)
    if (is_vertex(x, cloud)) out.push_back(MppPoint{x, p});
  return out;
}

const char* facet_status_name(FacetStatus s) {
  switch (s) {
    case FacetStatus::Ok: return "OK";
    case FacetStatus::ValidityViolation: return "VALIDITY_VIOLATION";
    case FacetStatus::RankDeficient: return "RANK_DEFICIENT";
  }
  return "?";
}

bool FacetReport::ok() const {
  if (!count_ok || !adjacency_ok) return false;
  for (const auto& c : checks)
    if (c.status != FacetStatus::Ok || !c.tight_is_predicted_interval) return false;
  return true;
}

namespace {

// sign vectors tau with tau(i) = eps(i) and tau(j) in {0, eps(j)} elsewhere
std::vector<SignVector> predicted_tight(const FacetLabel& lab) {
  const int m = static_cast<int>(lab.eps.entries.size());
  std::vector<int> free_pos;
  for (int j = 0; j < m; ++j)
    if (j != lab.i - 1) free_pos.push_back(j);
  std::vector<SignVector> out;
  std::vector<int> pick(free_pos.size(), 0);  // 0 = zero, 1 = eps(j)
  for (;;) {
    SignVector tau;
    tau.entries.assign(m, 0);
    tau.entries[lab.i - 1] = lab.eps.entries[lab.i - 1];
    for (size_t t = 0; t < free_pos.size(); ++t)
      if (pick[t]) tau.entries[free_pos[t]] = lab.eps.entries[free_pos[t]];
    out.push_back(std::move(tau));
    size_t c = 0;
    while (c < pick.size() && pick[c] == 1) pick[c++] = 0;
    if (c == pick.size()) break;
    pick[c] = 1;
  }
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace

FacetReport confirm_facets(const std::vector<std::pair<SignVector, QVec>>& verts,
                           const std::vector<FacetIneq>& ineqs, int n) {
  FacetReport rep;
  std::map<SignVector, std::vector<int>> tight_at;  // vertex label -> facet ids
  for (int fi = 0; fi < static_cast<int>(ineqs.size()); ++fi) {
    const auto& f = ineqs[fi];
    FacetCheck c;
    c.label = f.label;
    bool valid = true;
    std::vector<QVec> tight_pts;
    for (const auto& [sv, x] : verts) {
      Rat v = dot(f.normal, x);
      if (v < f.rhs) {
        valid = false;
      } else if (v == f.rhs) {
        c.tight.push_back(sv);
        tight_pts.push_back(x);
        tight_at[sv].push_back(fi);
      }
    }
    std::sort(c.tight.begin(), c.tight.end());
    c.tight_is_predicted_interval = (c.tight == predicted_tight(f.label));
    c.tight_affine_rank = affine_rank(tight_pts);
    if (!valid)
      c.status = FacetStatus::ValidityViolation;
    else if (c.tight_affine_rank != n - 2)
      c.status = FacetStatus::RankDeficient;
    rep.checks.push_back(std::move(c));
  }

  Int expected = Int(n - 1) * (Int(1) << (n - 1));
  rep.count_ok = (Int(ineqs.size()) == expected &&
                  Int(ineqs.size()) == fvector_closed(n, n - 2));

  rep.adjacency_ok = true;
  for (size_t i = 0; i < verts.size() && rep.adjacency_ok; ++i)
    for (size_t j = i + 1; j < verts.size(); ++j) {
      if (!mpp_adjacent(verts[i].first, verts[j].first)) continue;
      const auto& ti = tight_at[verts[i].first];
      const auto& tj = tight_at[verts[j].first];
      std::vector<int> common;
      std::set_intersection(ti.begin(), ti.end(), tj.begin(), tj.end(),
                            std::back_inserter(common));
      if (static_cast<int>(common.size()) < n - 2) {
        rep.adjacency_ok = false;
        break;
      }
    }
  return rep;
}

IncidenceMatrix incidence(const std::vector<std::pair<SignVector, QVec>>& verts,
                          const std::vector<FacetIneq>& ineqs) {
  auto vs = verts;
  std::sort(vs.begin(), vs.end(),
            [](const auto& a, const auto& b) { return a.first < b.first; });
  auto fs = ineqs;
  std::sort(fs.begin(), fs.end(),
            [](const FacetIneq& a, const FacetIneq& b) { return a.label < b.label; });
  IncidenceMatrix m;
  for (const auto& [sv, x] : vs) m.rows.push_back(sv);
  for (const auto& f : fs) m.cols.push_back(f.label);
  for (const auto& [sv, x] : vs) {
    std::vector<char> row;
    row.reserve(fs.size());
    for (const auto& f : fs) row.push_back(dot(f.normal, x) == f.rhs ? 1 : 0);
    m.bits.push_back(std::move(row));
  }
  return m;
}

bool equivalent(const IncidenceMatrix& a, const IncidenceMatrix& b) {
  if (a.rows != b.rows || a.cols != b.cols)
    fail(Errc::LabelMismatch, "incidence matrices carry different label sets");
  return a.bits == b.bits;
}

std::vector<std::pair<SignVector, QVec>> as_labeled_points(
    const std::vector<std::pair<SignVector, MppPoint>>& verts) {
  std::vector<std::pair<SignVector, QVec>> out;
  out.reserve(verts.size());
  for (const auto& [sv, p] : verts) out.emplace_back(sv, p.coords);
  return out;
}

namespace {

// is [u,w] an edge of the hull of `verts` (all in convex position)?
// Feasibility of  sum_v lambda_v v = t_u u + t_w w,  sum lambda = 1,
// t_u + t_w = 1, everything >= 0  over v outside {u,w} says it is not.
bool hull_edge(const std::vector<QVec>& verts, size_t u, size_t w) {
  const size_t d = verts[u].size();
  std::vector<size_t> others;
  for (size_t v = 0; v < verts.size(); ++v)
    if (v != u && v != w) others.push_back(v);
  if (others.empty()) return true;
  const size_t m = others.size() + 2;  // lambdas, then t_u, t_w
  std::vector<QVec> rows;
  QVec rhs;
  for (size_t c = 0; c < d; ++c) {
    QVec row(m, Rat(0));
    for (size_t k = 0; k < others.size(); ++k) row[k] = verts[others[k]][c];
    row[others.size()] = Rat(-verts[u][c]);
    row[others.size() + 1] = Rat(-verts[w][c]);
    rows.push_back(std::move(row));
    rhs.push_back(Rat(0));
  }
  QVec lam_row(m, Rat(0)), t_row(m, Rat(0));
  for (size_t k = 0; k < others.size(); ++k) lam_row[k] = 1;
  t_row[others.size()] = 1;
  t_row[others.size() + 1] = 1;
  rows.push_back(std::move(lam_row));
  rhs.push_back(Rat(1));
  rows.push_back(std::move(t_row));
  rhs.push_back(Rat(1));
  return !detail::phase1_simplex(std::move(rows), std::move(rhs)).feasible;
}

}  // namespace

std::vector<QVec> mpp_of_cloud(const std::vector<QVec>& cloud, const QVec& ell) {
  const size_t d = ell.size();
  std::vector<QVec> pts = cloud;
  for (const auto& p : pts)
    if (p.size() != d)
      fail(Errc::DimensionMismatch, "cloud point dimension differs from functional");
  std::sort(pts.begin(), pts.end());
  pts.erase(std::unique(pts.begin(), pts.end()), pts.end());
  if (pts.size() < 2) fail(Errc::NotGeneric, "need at least two distinct points");
  {
    std::vector<Rat> vals;
    for (const auto& p : pts) vals.push_back(dot(ell, p));
    std::sort(vals.begin(), vals.end());
    for (size_t i = 1; i < vals.size(); ++i)
      if (vals[i] == vals[i - 1])
        fail(Errc::NotGeneric, "functional is not injective on the cloud");
  }

  std::vector<QVec> verts;
  std::vector<Rat> lv;
  for (const auto& p : pts)
    if (is_vertex(p, pts)) {
      verts.push_back(p);
      lv.push_back(dot(ell, p));
    }

  const size_t m = verts.size();
  std::vector<std::vector<size_t>> up(m);  // edges toward larger functional value
  for (size_t u = 0; u < m; ++u)
    for (size_t w = u + 1; w < m; ++w)
      if (hull_edge(verts, u, w)) {
        if (lv[u] < lv[w])
          up[u].push_back(w);
        else
          up[w].push_back(u);
      }

  size_t src = 0, snk = 0;
  for (size_t v = 1; v < m; ++v) {
    if (lv[v] < lv[src]) src = v;
    if (lv[v] > lv[snk]) snk = v;
  }
  const Rat denom = Rat(2 * (lv[snk] - lv[src]));

  std::vector<QVec> averages;
  std::vector<size_t> chain{src};
  auto walk = [&](auto&& self, size_t u) -> void {
    if (u == snk) {
      QVec x(d, Rat(0));
      for (size_t j = 1; j < chain.size(); ++j) {
        const Rat w = Rat(lv[chain[j]] - lv[chain[j - 1]]);
        for (size_t c = 0; c < d; ++c)
          x[c] += Rat(w * Rat(verts[chain[j - 1]][c] + verts[chain[j]][c]));
      }
      for (size_t c = 0; c < d; ++c) x[c] = Rat(x[c] / denom);
      averages.push_back(std::move(x));
      return;
    }
    for (size_t w : up[u]) {
      chain.push_back(w);
      self(self, w);
      chain.pop_back();
    }
  };
  walk(walk, src);

  std::sort(averages.begin(), averages.end());
  averages.erase(std::unique(averages.begin(), averages.end()), averages.end());
  std::vector<QVec> out;
  for (const auto& x : averages)
    if (is_vertex(x, averages)) out.push_back(x);
  return out;
}

}  // namespace signo
