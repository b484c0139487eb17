#include "signo/crosspoly.hpp"

#include <algorithm>
#include <cstdlib>
#include <numeric>

#include "signo/error.hpp"

namespace signo {

Orientation::Orientation(QVec values) : a_(std::move(values)) {
  if (a_.empty()) fail(Errc::DimOutOfRange, "orientation needs n >= 1");
  Rat prev = 0;
  for (size_t i = 0; i < a_.size(); ++i) {
    if (a_[i] <= prev)
      fail(Errc::NotGeneric, "orientation values must be positive and strictly increasing");
    prev = a_[i];
  }
}

Orientation Orientation::canonical(int n) {
  if (n < 1) fail(Errc::DimOutOfRange, "n must be >= 1");
  QVec a;
  for (int i = 1; i <= n; ++i) a.emplace_back(i);
  return Orientation(std::move(a));
}

Rat Orientation::value(int k) const {
  int m = std::abs(k);
  if (k == 0 || m > n()) fail(Errc::IndexOutOfRange, "signed index " + std::to_string(k));
  return k > 0 ? a_[m - 1] : Rat(-a_[m - 1]);
}

bool SignedPerm::is_identity() const {
  for (size_t i = 0; i < source.size(); ++i)
    if (source[i] != static_cast<int>(i) || sign[i] != 1) return false;
  return true;
}

std::pair<Orientation, SignedPerm> normalize(const QVec& raw) {
  const int n = static_cast<int>(raw.size());
  if (n < 1) fail(Errc::DimOutOfRange, "empty functional");
  for (int i = 0; i < n; ++i)
    if (raw[i] == 0)
      fail(Errc::NotGeneric, "zero functional value at position " + std::to_string(i + 1));
  std::vector<int> order(n);
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(),
                   [&](int i, int j) { return abs(raw[i]) < abs(raw[j]); });
  for (int i = 0; i + 1 < n; ++i)
    if (abs(raw[order[i]]) == abs(raw[order[i + 1]]))
      fail(Errc::NotGeneric, "tied absolute values at positions " +
                                 std::to_string(order[i] + 1) + ", " +
                                 std::to_string(order[i + 1] + 1));
  QVec a;
  SignedPerm p;
  for (int i = 0; i < n; ++i) {
    a.push_back(abs(raw[order[i]]));
    p.source.push_back(order[i]);
    p.sign.push_back(raw[order[i]] > 0 ? 1 : -1);
  }
  return {Orientation(std::move(a)), std::move(p)};
}

bool is_face(const Face& s, int n) {
  std::vector<bool> seen(n + 1, false);
  for (int k : s) {
    int m = std::abs(k);
    if (k == 0 || m > n) fail(Errc::IndexOutOfRange, "signed index " + std::to_string(k));
    if (seen[m]) return false;  // a repeat or an antipodal pair
    seen[m] = true;
  }
  return true;
}

std::pair<int, int> face_extremes(const Face& s, const Orientation& o) {
  if (s.empty() || !is_face(s, o.n())) fail(Errc::NotAFace, "face_extremes needs a nonempty face");
  auto [lo, hi] = std::minmax_element(s.begin(), s.end());
  return {*lo, *hi};  // integer order == a-value order under a canonical orientation
}

}  // namespace signo
