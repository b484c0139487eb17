#include "signo/signlattice.hpp"

#include <algorithm>
#include <map>

#include "signo/error.hpp"

namespace signo {

bool poset_leq(const SignVector& s, const SignVector& t) {
  if (s.size() != t.size()) fail(Errc::LengthMismatch, "sign vectors of different length");
  for (int i = 0; i < s.size(); ++i)
    if (s.entries[i] != 0 && s.entries[i] != t.entries[i]) return false;
  return true;
}

int Interval::dim() const {
  int d = 0;
  for (int e : hi.entries) d += (e != 0);
  for (int e : lo.entries) d -= (e != 0);
  return d;
}

std::vector<SignVector> all_sign_vectors(int n) {
  if (n < 2) fail(Errc::DimOutOfRange, "sign vectors need n >= 2");
  std::vector<SignVector> out;
  SignVector s;
  s.entries.assign(n - 1, -1);
  for (;;) {
    if (!is_zero(s)) out.push_back(s);
    int i = n - 2;
    while (i >= 0 && s.entries[i] == 1) s.entries[i--] = -1;
    if (i < 0) break;
    ++s.entries[i];
  }
  return out;
}

std::vector<Interval> faces(int n, int m) {
  if (n < 2) fail(Errc::DimOutOfRange, "faces need n >= 2");
  if (m < 0 || m > n - 2) fail(Errc::DimOutOfRange, "face dimension m = " + std::to_string(m));
  std::vector<Interval> out;
  for (const auto& hi : all_sign_vectors(n)) {
    std::vector<int> supp;
    for (int i = 0; i < hi.size(); ++i)
      if (hi.entries[i] != 0) supp.push_back(i);
    int keep = static_cast<int>(supp.size()) - m;
    if (keep < 1) continue;
    // ascending index combinations of size `keep`
    std::vector<int> comb(keep);
    for (int i = 0; i < keep; ++i) comb[i] = i;
    for (;;) {
      SignVector lo;
      lo.entries.assign(n - 1, 0);
      for (int c : comb) lo.entries[supp[c]] = hi.entries[supp[c]];
      out.push_back({lo, hi});
      int i = keep - 1;
      while (i >= 0 && comb[i] == static_cast<int>(supp.size()) - keep + i) --i;
      if (i < 0) break;
      ++comb[i];
      for (int j = i + 1; j < keep; ++j) comb[j] = comb[j - 1] + 1;
    }
  }
  return out;
}

namespace {

Int factorial(int k) {
  Int f = 1;
  for (int i = 2; i <= k; ++i) f *= i;
  return f;
}

}  // namespace

Int fvector_closed(int n, int m) {
  if (n < 2) fail(Errc::DimOutOfRange, "need n >= 2");
  if (m < 0 || m > n - 2) fail(Errc::DimOutOfRange, "face dimension m = " + std::to_string(m));
  Int total = 0;
  for (int k = 1; k <= n - 1 - m; ++k) {
    int rest = n - 1 - k - m;
    Int multinom = factorial(n - 1) / (factorial(k) * factorial(m) * factorial(rest));
    total += multinom * (Int(1) << (k + m));
  }
  return total;
}

std::vector<Int> fvector(int n) {
  std::vector<Int> f;
  for (int m = 0; m <= n - 2; ++m) f.push_back(fvector_closed(n, m));
  return f;
}

bool mpp_adjacent(const SignVector& s, const SignVector& t) { return taxicab(s, t) == 1; }

Graph mpp_graph(int n) {
  auto verts = all_sign_vectors(n);
  Graph g;
  g.nv = static_cast<int>(verts.size());
  g.adj.resize(g.nv);
  for (int i = 0; i < g.nv; ++i)
    for (int j = i + 1; j < g.nv; ++j)
      if (mpp_adjacent(verts[i], verts[j])) {
        g.adj[i].push_back(j);
        g.adj[j].push_back(i);
      }
  return g;
}

int mpp_diameter(int n) {
  if (n < 2) fail(Errc::DimOutOfRange, "need n >= 2");
  if (n == 2) return 2;  // segment: taxicab metric between its two vertices
  return diameter(mpp_graph(n));
}

Signohedron signohedron(int n) {
  if (n < 2) fail(Errc::DimOutOfRange, "need n >= 2");
  Signohedron s;
  for (const auto& sv : all_sign_vectors(n)) {
    int supp = 0;
    for (int e : sv.entries) supp += (e != 0);
    QVec p;
    for (int e : sv.entries) p.push_back(Rat(e) / (supp + 1));
    s.vertices.emplace_back(sv, std::move(p));
  }
  for (int i = 1; i <= n - 1; ++i) {
    SignVector eta;
    eta.entries.assign(n - 1, -1);
    for (;;) {
      // <w, x> <= 1 with w = eta + eta(i) e_i, stored as <-w, x> >= -1
      QVec normal;
      for (int k = 1; k <= n - 1; ++k)
        normal.push_back(Rat(-eta.entries[k - 1] * (k == i ? 2 : 1)));
      s.facets.push_back({std::move(normal), Rat(-1), FacetLabel{i, eta}});
      int j = n - 2;
      while (j >= 0 && eta.entries[j] == 1) eta.entries[j--] = -1;
      if (j < 0) break;
      eta.entries[j] = 1;
    }
  }
  return s;
}

}  // namespace signo
