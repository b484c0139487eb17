#include "signo/pathspace.hpp"

#include <algorithm>
#include <cstdlib>
#include <map>

#include "signo/error.hpp"

namespace signo {

std::string SignVector::str() const {
  std::string out;
  for (int e : entries) out += (e < 0 ? '-' : e > 0 ? '+' : '0');
  return out;
}

SignVector parse_sign_vector(std::string_view s) {
  SignVector v;
  for (char c : s) {
    if (c == '-') v.entries.push_back(-1);
    else if (c == '0') v.entries.push_back(0);
    else if (c == '+') v.entries.push_back(1);
    else fail(Errc::ParseError, std::string("bad sign vector character '") + c + "'");
  }
  return v;
}

int taxicab(const SignVector& a, const SignVector& b) {
  if (a.size() != b.size()) fail(Errc::LengthMismatch, "sign vectors of different length");
  int d = 0;
  for (int i = 0; i < a.size(); ++i) d += std::abs(a.entries[i] - b.entries[i]);
  return d;
}

bool is_zero(const SignVector& s) {
  return std::all_of(s.entries.begin(), s.entries.end(), [](int e) { return e == 0; });
}

std::vector<int> MonotonePath::chain(int n) const {
  std::vector<int> c;
  c.reserve(interior.size() + 2);
  c.push_back(-n);
  c.insert(c.end(), interior.begin(), interior.end());
  c.push_back(n);
  return c;
}

bool is_valid_interior(const std::vector<int>& interior, int n) {
  if (interior.empty()) return false;
  int prev = -n;  // implicit start -e_n
  for (int k : interior) {
    if (k == 0 || std::abs(k) > n - 1) return false;
    if (k <= prev) return false;       // must ascend in a-value
    if (k == -prev) return false;      // consecutive antipodes are not an edge
    prev = k;
  }
  return true;  // final step to e_n can never be antipodal (|prev| <= n-1)
}

MonotonePath make_path(std::vector<int> interior, int n) {
  if (!is_valid_interior(interior, n))
    fail(Errc::InvalidPath, "not a monotone path interior on n=" + std::to_string(n));
  return MonotonePath{std::move(interior)};
}

std::vector<MonotonePath> enumerate_paths(int n) {
  if (n < 2) fail(Errc::DimOutOfRange, "paths need n >= 2");
  const int w = n - 1;
  // occupancy word symbols, in order: 0:'-' 1:absent 2:'+' 3:both
  std::vector<int> word(w, 0);
  std::vector<MonotonePath> out;
  for (;;) {
    bool some = false, ok = true;
    for (int k = 0; k < w && ok; ++k) {
      if (word[k] != 1) {
        // 'both' needs an earlier occupied coordinate to separate -e_k from e_k
        if (word[k] == 3 && !some) ok = false;
        some = true;
      }
    }
    if (ok && some) {
      std::vector<int> interior;
      for (int k = w; k >= 1; --k)
        if (word[k - 1] == 0 || word[k - 1] == 3) interior.push_back(-k);
      for (int k = 1; k <= w; ++k)
        if (word[k - 1] == 2 || word[k - 1] == 3) interior.push_back(k);
      out.push_back(MonotonePath{std::move(interior)});
    }
    int i = w - 1;
    while (i >= 0 && word[i] == 3) word[i--] = 0;
    if (i < 0) break;
    ++word[i];
  }
  return out;
}

Int count_paths_closed(int n) {
  if (n < 2) fail(Errc::DimOutOfRange, "paths need n >= 2");
  Int p = (Int(1) << (2 * n - 1)) - 2;
  return p / 3;
}

Int count_coherent_closed(int n) {
  if (n < 2) fail(Errc::DimOutOfRange, "paths need n >= 2");
  Int p = 1;
  for (int i = 1; i < n; ++i) p *= 3;
  return p - 1;
}

SignVector path_to_signvector(const MonotonePath& p, int n) {
  SignVector s;
  s.entries.assign(n - 1, 0);
  for (int k : p.interior) {
    int m = std::abs(k);
    if (m < 1 || m > n - 1) fail(Errc::IndexOutOfRange, "interior entry " + std::to_string(k));
    int v = k > 0 ? 1 : -1;
    if (s.entries[m - 1] != 0 && s.entries[m - 1] != v)
      fail(Errc::NotCoherentEncoding,
           "path holds both of +-e_" + std::to_string(m) + "; no sign vector encodes it");
    s.entries[m - 1] = v;
  }
  return s;
}

MonotonePath signvector_to_path(const SignVector& s) {
  if (is_zero(s)) fail(Errc::InvalidPath, "the zero sign vector encodes no path");
  std::vector<int> interior;
  for (int k = s.size(); k >= 1; --k)
    if (s.entries[k - 1] < 0) interior.push_back(-k);
  for (int k = 1; k <= s.size(); ++k)
    if (s.entries[k - 1] > 0) interior.push_back(k);
  return MonotonePath{std::move(interior)};
}

std::vector<int> CellularString::vertex_set() const {
  std::vector<int> v;
  for (const auto& c : cells) v.insert(v.end(), c.begin(), c.end());
  std::sort(v.begin(), v.end());
  v.erase(std::unique(v.begin(), v.end()), v.end());
  return v;
}

bool is_valid_string(const CellularString& s, int n) {
  if (s.cells.empty()) return false;
  int at = -n;
  for (const auto& c : s.cells) {
    if (c.size() < 2 || !std::is_sorted(c.begin(), c.end())) return false;
    if (!is_face(c, n)) return false;
    if (c.front() != at) return false;
    at = c.back();
  }
  return at == n;
}

CellularString path_to_string(const MonotonePath& p, int n) {
  if (!is_valid_interior(p.interior, n)) fail(Errc::InvalidPath, "invalid path");
  auto ch = p.chain(n);
  CellularString s;
  for (size_t i = 0; i + 1 < ch.size(); ++i) s.cells.push_back(Face{ch[i], ch[i + 1]});
  return s;
}

namespace {

// Faces with a prescribed minimum vertex, each with >= 2 vertices, enumerated
// by an odometer over the per-coordinate choices (none < -j < +j).
std::vector<Face> faces_from(int v, int n) {
  std::vector<int> slots;  // coordinates other than |v|
  for (int j = 1; j <= n; ++j)
    if (j != std::abs(v)) slots.push_back(j);
  std::vector<int> pick(slots.size(), 0);  // 0 none, 1 -j, 2 +j
  std::vector<Face> out;
  for (;;) {
    Face f{v};
    bool any = false, ok = true;
    for (size_t i = 0; i < slots.size() && ok; ++i) {
      if (pick[i] == 0) continue;
      int w = pick[i] == 1 ? -slots[i] : slots[i];
      if (w <= v) ok = false;  // the minimum must stay v
      f.push_back(w);
      any = true;
    }
    if (ok && any) {
      std::sort(f.begin(), f.end());
      out.push_back(std::move(f));
    }
    int i = static_cast<int>(pick.size()) - 1;
    while (i >= 0 && pick[i] == 2) pick[i--] = 0;
    if (i < 0) break;
    ++pick[i];
  }
  return out;
}

}  // namespace

std::vector<CellularString> enumerate_strings(int n) {
  if (n < 2) fail(Errc::DimOutOfRange, "strings need n >= 2");
  // chains of faces from v up to e_n, memoized per start vertex
  std::map<int, std::vector<std::vector<Face>>> memo;
  auto chains = [&](auto&& self, int v) -> const std::vector<std::vector<Face>>& {
    auto it = memo.find(v);
    if (it != memo.end()) return it->second;
    std::vector<std::vector<Face>> acc;
    if (v == n) {
      acc.push_back({});
    } else {
      for (const auto& f : faces_from(v, n))
        for (const auto& tail : self(self, f.back())) {
          std::vector<Face> c{f};
          c.insert(c.end(), tail.begin(), tail.end());
          acc.push_back(std::move(c));
        }
    }
    return memo.emplace(v, std::move(acc)).first->second;
  };
  std::vector<CellularString> out;
  for (const auto& c : chains(chains, -n)) out.push_back(CellularString{c});
  return out;
}

}  // namespace signo
