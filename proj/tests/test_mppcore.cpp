#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <cstdlib>
#include <map>
#include <set>

#include "signo/mppcore.hpp"

using namespace signo;

namespace {

template <typename F>
bool fails_with(F&& f, Errc want) {
  try {
    f();
  } catch (const Error& e) {
    return e.code() == want;
  }
  return false;
}

QVec q(std::initializer_list<const char*> xs) {
  QVec v;
  for (auto* x : xs) v.push_back(rat_from_string(x));
  return v;
}

std::map<std::string, QVec> vertex_table(const Orientation& o) {
  std::map<std::string, QVec> t;
  for (const auto& [sv, p] : mpp_vertices(o)) t[sv.str()] = p.coords;
  return t;
}

// midpoint-rule average of the path curve, evaluated in doubles: the section
// at height t is the point of the chain polyline with a-value t.
std::vector<double> numeric_average(const MonotonePath& p, const Orientation& o, int samples) {
  const int n = o.n();
  auto chain = p.chain(n);
  std::vector<double> heights;
  for (int v : chain) heights.push_back(static_cast<double>(o.value(v)));
  const double lo = heights.front(), hi = heights.back();
  std::vector<double> acc(n, 0.0);
  for (int i = 0; i < samples; ++i) {
    double t = lo + (hi - lo) * (i + 0.5) / samples;
    size_t seg = 1;
    while (seg + 1 < chain.size() && heights[seg] < t) ++seg;
    double lam = (t - heights[seg - 1]) / (heights[seg] - heights[seg - 1]);
    int u = chain[seg - 1], v = chain[seg];
    acc[std::abs(u) - 1] += (1 - lam) * (u > 0 ? 1 : -1);
    acc[std::abs(v) - 1] += lam * (v > 0 ? 1 : -1);
  }
  for (double& x : acc) x /= samples;
  return acc;
}

}  // namespace

TEST_CASE("segment averages at n=2") {
  Orientation o = Orientation::canonical(2);
  CHECK(bs_point(make_path({1}, 2), o).coords == q({"1/2", "-1/4"}));
  CHECK(bs_point(make_path({-1}, 2), o).coords == q({"-1/2", "1/4"}));
}

TEST_CASE("octagon vertices are the frozen exact points") {
  auto t = vertex_table(Orientation::canonical(3));
  REQUIRE(t.size() == 8);
  CHECK(t["+0"] == q({"1/2", "0", "-1/6"}));
  CHECK(t["0+"] == q({"0", "1/2", "-1/3"}));
  CHECK(t["++"] == q({"5/12", "1/6", "-1/4"}));
  CHECK(t["+-"] == q({"5/12", "-1/3", "1/12"}));
  CHECK(t["-+"] == q({"-5/12", "1/3", "-1/12"}));
  CHECK(t["-0"] == q({"-1/2", "0", "1/6"}));
  CHECK(t["0-"] == q({"0", "-1/2", "1/3"}));
  CHECK(t["--"] == q({"-5/12", "-1/6", "1/4"}));
}

TEST_CASE("vertex counts follow the coherent count") {
  CHECK(mpp_vertices(Orientation::canonical(4)).size() == 26);
  CHECK(mpp_vertices(Orientation::canonical(5)).size() == 80);
}

TEST_CASE("every section average lies in the zero hyperplane of the functional") {
  for (int n = 2; n <= 5; ++n) {
    Orientation o = Orientation::canonical(n);
    for (const auto& p : enumerate_paths(n))
      CHECK(dot(o.values(), bs_point(p, o).coords) == 0);
  }
  Orientation odd({Rat(1) / 2, Rat(7) / 3, Rat(4)});
  for (const auto& p : enumerate_paths(3))
    CHECK(dot(odd.values(), bs_point(p, odd).coords) == 0);
}

TEST_CASE("the vertex set is centrally symmetric with negated labels") {
  for (int n = 3; n <= 4; ++n) {
    auto t = vertex_table(Orientation::canonical(n));
    for (const auto& [s, x] : t) {
      std::string ns;
      for (char c : s) ns += (c == '+' ? '-' : c == '-' ? '+' : '0');
      REQUIRE(t.count(ns));
      CHECK(t[ns] == neg(x));
    }
  }
}

TEST_CASE("degenerate chains average too") {
  Orientation o = Orientation::canonical(3);
  CHECK(bs_point_chain({-3, -2, 2, 3}, o) == zero_vec(3));
  CHECK(bs_point_chain({-3, 3}, o) == zero_vec(3));
  CHECK(fails_with([&] { bs_point_chain({3, -3}, o); }, Errc::InvalidPath));
  CHECK(fails_with([&] { bs_point_chain({-3, 1}, o); }, Errc::InvalidPath));
  CHECK(fails_with([&] { bs_point_chain({-3, 1, 1, 3}, o); }, Errc::InvalidPath));
}

TEST_CASE("numeric quadrature agrees with the exact section average") {
  for (int n : {3, 4}) {
    Orientation o = Orientation::canonical(n);
    for (const auto& p : enumerate_paths(n)) {
      QVec exact = bs_point(p, o).coords;
      auto approx = numeric_average(p, o, 20000);
      for (int i = 0; i < n; ++i)
        CHECK(std::abs(approx[i] - static_cast<double>(exact[i])) < 1e-3);
    }
  }
}

TEST_CASE("frozen facet functionals at n=3") {
  Orientation o = Orientation::canonical(3);
  auto f1 = facet_functional(1, parse_sign_vector("++"), o);
  CHECK(f1.normal == q({"-4", "-2", "0"}));
  CHECK(f1.rhs == Rat(-2));
  auto f2 = facet_functional(2, parse_sign_vector("++"), o);
  CHECK(f2.normal == q({"-4", "-5", "0"}));
  CHECK(f2.rhs == Rat(-5) / 2);
  auto f3 = facet_functional(1, parse_sign_vector("-+"), o);
  CHECK(f3.normal == q({"2", "-1/2", "0"}));
  CHECK(f3.rhs == Rat(-1));

  auto t = vertex_table(o);
  for (const auto& [s, x] : t) {
    CHECK(dot(f3.normal, x) >= f3.rhs);
    if (s == "-0" || s == "-+")
      CHECK(dot(f3.normal, x) == f3.rhs);
    else
      CHECK(dot(f3.normal, x) > f3.rhs);
  }
}

TEST_CASE("facet family size and argument validation") {
  Orientation o = Orientation::canonical(4);
  CHECK(mpp_facets(o).size() == 24);
  CHECK(mpp_facets(Orientation::canonical(2)).size() == 2);
  CHECK(fails_with([&] { facet_functional(0, parse_sign_vector("+++"), o); },
                   Errc::IndexOutOfRange));
  CHECK(fails_with([&] { facet_functional(4, parse_sign_vector("+++"), o); },
                   Errc::IndexOutOfRange));
  CHECK(fails_with([&] { facet_functional(1, parse_sign_vector("+0+"), o); },
                   Errc::LengthMismatch));
  CHECK(fails_with([&] { facet_functional(1, parse_sign_vector("++"), o); },
                   Errc::LengthMismatch));
}

TEST_CASE("hexagon projection keeps only the two extreme images") {
  // conv(+-(1,0), +-(0,1), +-(1,1)) with ell = (1,2): values 1, 2, 3
  std::vector<QVec> reps = {q({"1", "0"}), q({"0", "1"}), q({"1", "1"})};
  auto out = project_cs(reps, {1, 2, 3});
  REQUIRE(out.size() == 2);
  CHECK(out[0] == q({"-1/2", "1/4"}));
  CHECK(out[1] == q({"1/2", "-1/4"}));
}

TEST_CASE("hexagon projection is invariant under relabeling the input") {
  std::vector<QVec> reps = {q({"1", "0"}), q({"0", "1"}), q({"1", "1"})};
  auto base = project_cs(reps, {1, 2, 3});
  // same polytope with shuffled, reflected representatives
  std::vector<QVec> reps2 = {q({"1", "1"}), q({"-1", "0"}), q({"0", "1"})};
  auto out = project_cs(reps2, {3, -1, 2});
  CHECK(out == base);
}

TEST_CASE("projection argument validation") {
  std::vector<QVec> reps = {q({"1", "0"}), q({"0", "1"})};
  CHECK(fails_with([&] { project_cs(reps, {1, 2, 3}); }, Errc::LengthMismatch));
  CHECK(fails_with([&] { project_cs({q({"1", "0"})}, {1}); }, Errc::DimOutOfRange));
  CHECK(fails_with([&] { project_cs({q({"1", "0"}), q({"1"})}, {1, 2}); },
                   Errc::DimensionMismatch));
  CHECK(fails_with([&] { project_cs(reps, {2, -2}); }, Errc::NotGeneric));
}

TEST_CASE("the square projects to its own segment") {
  // identity projection: reps are the standard basis of the plane
  std::vector<QVec> reps = {q({"1", "0"}), q({"0", "1"})};
  auto out = project_cs(reps, {1, 2});
  auto verts = mpp_vertices(Orientation::canonical(2));
  std::set<QVec> want;
  for (const auto& [sv, p] : verts) want.insert(p.coords);
  CHECK(std::set<QVec>(out.begin(), out.end()) == want);
}
