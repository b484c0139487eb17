#include "signo/mppcore.hpp"

#include <algorithm>
#include <cstdlib>

#include "signo/error.hpp"
#include "signo/lp.hpp"

namespace signo {

QVec bs_point_chain(const std::vector<int>& chain, const Orientation& o) {
  const int n = o.n();
  if (chain.size() < 2 || chain.front() != -n || chain.back() != n)
    fail(Errc::InvalidPath, "chain must run from -e_n to e_n");
  for (size_t j = 1; j < chain.size(); ++j)
    if (chain[j] <= chain[j - 1]) fail(Errc::InvalidPath, "chain must ascend in a-value");
  Rat denom = 4 * o.values().back();  // 2 * a(e_n - (-e_n))
  QVec acc = zero_vec(n);
  for (size_t j = 1; j < chain.size(); ++j) {
    int u = chain[j - 1], v = chain[j];
    Rat w = o.value(v) - o.value(u);
    acc[std::abs(u) - 1] += u > 0 ? w : Rat(-w);
    acc[std::abs(v) - 1] += v > 0 ? w : Rat(-w);
  }
  return scale(Rat(1) / denom, acc);
}

MppPoint bs_point(const MonotonePath& p, const Orientation& o) {
  if (!is_valid_interior(p.interior, o.n())) fail(Errc::InvalidPath, "invalid path");
  return {bs_point_chain(p.chain(o.n()), o), p};
}

std::vector<std::pair<SignVector, MppPoint>> mpp_vertices(const Orientation& o) {
  const int n = o.n();
  if (n < 2) fail(Errc::DimOutOfRange, "mpp needs n >= 2");
  std::vector<std::pair<SignVector, MppPoint>> out;
  SignVector s;
  s.entries.assign(n - 1, -1);
  for (;;) {
    if (!is_zero(s)) out.emplace_back(s, bs_point(signvector_to_path(s), o));
    int i = n - 2;
    while (i >= 0 && s.entries[i] == 1) s.entries[i--] = -1;
    if (i < 0) break;
    ++s.entries[i];
  }
  return out;
}

FacetIneq facet_functional(int i, const SignVector& eps, const Orientation& o) {
  const int n = o.n();
  if (i < 1 || i > n - 1) fail(Errc::IndexOutOfRange, "facet index i = " + std::to_string(i));
  if (eps.size() != n - 1) fail(Errc::LengthMismatch, "eps must have length n-1");
  for (int e : eps.entries)
    if (e == 0) fail(Errc::LengthMismatch, "eps must have full support");

  Rat an = o.values().back();
  Rat s = eps.entries[i - 1] * o.values()[i - 1];  // signed value of the split vertex
  Rat slope2 = (s + an) / (an - s);
  QVec normal = zero_vec(n);
  for (int k = 1; k <= n - 1; ++k) {
    int e = eps.entries[k - 1];
    Rat t = e * o.values()[k - 1];
    Rat on_vertex = t <= s ? Rat(-t - an) : Rat(slope2 * (t - an));
    normal[k - 1] = e > 0 ? on_vertex : Rat(-on_vertex);
  }
  return {std::move(normal), (-s - an) / 2, FacetLabel{i, eps}};
}

std::vector<FacetIneq> mpp_facets(const Orientation& o) {
  const int n = o.n();
  std::vector<FacetIneq> out;
  for (int i = 1; i <= n - 1; ++i) {
    SignVector eps;
    eps.entries.assign(n - 1, -1);
    for (;;) {
      out.push_back(facet_functional(i, eps, o));
      int j = n - 2;
      while (j >= 0 && eps.entries[j] == 1) eps.entries[j--] = -1;
      if (j < 0) break;
      eps.entries[j] = 1;
    }
  }
  return out;
}

std::vector<QVec> project_cs(const std::vector<QVec>& reps, const QVec& ell_values) {
  if (reps.size() != ell_values.size())
    fail(Errc::LengthMismatch, "one functional value per representative vertex");
  if (reps.size() < 2) fail(Errc::DimOutOfRange, "projection needs n >= 2");
  const size_t d = reps[0].size();
  for (const auto& v : reps)
    if (v.size() != d) fail(Errc::DimensionMismatch, "representative vertex dimension");

  auto [o, relabel] = normalize(ell_values);
  // model coordinate i maps to sign[i] * v_{source[i]}
  std::vector<QVec> img;
  for (int i = 0; i < o.n(); ++i) {
    QVec w = reps[relabel.source[i]];
    if (relabel.sign[i] < 0) w = neg(w);
    img.push_back(std::move(w));
  }
  std::vector<QVec> pts;
  for (const auto& [sv, mp] : mpp_vertices(o)) {
    QVec p = zero_vec(static_cast<int>(d));
    for (int i = 0; i < o.n(); ++i) p = add(p, scale(mp.coords[i], img[i]));
    pts.push_back(std::move(p));
  }
  std::sort(pts.begin(), pts.end());
  pts.erase(std::unique(pts.begin(), pts.end()), pts.end());
  std::vector<QVec> out;
  for (const auto& p : pts)
    if (is_vertex(p, pts)) out.push_back(p);
  return out;
}

}  // namespace signo
