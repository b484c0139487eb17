#include "signo/rational.hpp"

#include <cctype>

namespace signo {

std::string rat_to_string(const Rat& r) { return r.str(); }

Rat rat_from_string(std::string_view s) {
  auto is_int = [](std::string_view t) {
    if (!t.empty() && (t[0] == '-' || t[0] == '+')) t.remove_prefix(1);
    if (t.empty()) return false;
    for (char c : t)
      if (!std::isdigit(static_cast<unsigned char>(c))) return false;
    return true;
  };
  std::string_view num = s, den;
  if (auto slash = s.find('/'); slash != std::string_view::npos) {
    num = s.substr(0, slash);
    den = s.substr(slash + 1);
    if (!is_int(den)) fail(Errc::ParseError, "bad rational '" + std::string(s) + "'");
  }
  if (!is_int(num)) fail(Errc::ParseError, "bad rational '" + std::string(s) + "'");
  if (num.front() == '+') num.remove_prefix(1);
  if (!den.empty() && den.front() == '+') den.remove_prefix(1);
  Int p{std::string(num)};
  Int q = den.empty() ? Int(1) : Int{std::string(den)};
  if (q == 0) fail(Errc::ParseError, "zero denominator in '" + std::string(s) + "'");
  return Rat(p) / Rat(q);
}

std::string qvec_to_string(const QVec& v) {
  std::string out = "(";
  for (size_t i = 0; i < v.size(); ++i) {
    if (i) out += ", ";
    out += rat_to_string(v[i]);
  }
  return out + ")";
}

QVec zero_vec(int d) { return QVec(static_cast<size_t>(d), Rat(0)); }

static void check_dims(const QVec& a, const QVec& b) {
  if (a.size() != b.size())
    fail(Errc::DimensionMismatch,
         "vector lengths " + std::to_string(a.size()) + " vs " + std::to_string(b.size()));
}

Rat dot(const QVec& a, const QVec& b) {
  check_dims(a, b);
  Rat s = 0;
  for (size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

QVec add(const QVec& a, const QVec& b) {
  check_dims(a, b);
  QVec r(a);
  for (size_t i = 0; i < a.size(); ++i) r[i] += b[i];
  return r;
}

QVec sub(const QVec& a, const QVec& b) {
  check_dims(a, b);
  QVec r(a);
  for (size_t i = 0; i < a.size(); ++i) r[i] -= b[i];
  return r;
}

QVec scale(const Rat& c, const QVec& v) {
  QVec r(v);
  for (auto& x : r) x *= c;
  return r;
}

QVec neg(const QVec& v) { return scale(Rat(-1), v); }

bool is_zero(const QVec& v) {
  for (const auto& x : v)
    if (x != 0) return false;
  return true;
}

}  // namespace signo
