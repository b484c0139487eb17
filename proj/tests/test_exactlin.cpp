#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "signo/linalg.hpp"
#include "signo/lp.hpp"
#include "signo/rational.hpp"

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

QVec qv(std::initializer_list<int> xs) {
  QVec v;
  for (int x : xs) v.push_back(x);
  return v;
}

}  // namespace

TEST_CASE("rational round trip and reduction") {
  CHECK(rat_from_string("3/4") == Rat(3) / 4);
  CHECK(rat_from_string("-7") == Rat(-7));
  CHECK(rat_from_string("+2/6") == Rat(1) / 3);
  CHECK(rat_to_string(rat_from_string("0/5")) == "0");
  CHECK(rat_to_string(Rat(-5) / 10) == "-1/2");
  CHECK(rat_from_string("1/-2") == Rat(-1) / 2);
  CHECK(qvec_to_string({Rat(1) / 2, Rat(-3)}) == "(1/2, -3)");
}

TEST_CASE("rational parse errors") {
  for (const char* bad : {"", "1/0", "a", "1.5", "1/ 2", "--3", "2/"})
    CHECK_MESSAGE(fails_with([&] { rat_from_string(bad); }, Errc::ParseError), bad);
}

TEST_CASE("vector ops enforce dimensions") {
  CHECK(dot(qv({1, 2}), qv({3, 4})) == 11);
  CHECK(add(qv({1, 2}), qv({3, 4})) == qv({4, 6}));
  CHECK(sub(qv({1, 2}), qv({3, 4})) == qv({-2, -2}));
  CHECK(neg(qv({1, -2})) == qv({-1, 2}));
  CHECK(is_zero(zero_vec(3)));
  CHECK_FALSE(is_zero(qv({0, 1})));
  CHECK(fails_with([] { dot(qv({1}), qv({1, 2})); }, Errc::DimensionMismatch));
  CHECK(fails_with([] { add(qv({1}), qv({1, 2})); }, Errc::DimensionMismatch));
}

TEST_CASE("solve_linear") {
  // x + y = 3, x - y = 1
  auto s = solve_linear({{qv({1, 1}), Rat(3)}, {qv({1, -1}), Rat(1)}});
  REQUIRE(s.has_value());
  CHECK(*s == qv({2, 1}));

  CHECK_FALSE(solve_linear({{qv({1, 0}), Rat(1)}, {qv({1, 0}), Rat(2)}}).has_value());

  // underdetermined: free coordinates pinned to zero
  auto u = solve_linear({{qv({1, 1}), Rat(2)}});
  REQUIRE(u.has_value());
  CHECK(*u == qv({2, 0}));
}

TEST_CASE("rank and nullspace") {
  CHECK(rank({qv({1, 2}), qv({2, 4})}) == 1);
  CHECK(rank({qv({1, 0}), qv({0, 1})}) == 2);
  CHECK(rank({}) == 0);

  auto ns = nullspace({qv({1, 2})}, 2);
  REQUIRE(ns.size() == 1);
  CHECK(ns[0] == qv({-2, 1}));

  auto full = nullspace({}, 2);
  REQUIRE(full.size() == 2);
  CHECK(full[0] == qv({1, 0}));
  CHECK(full[1] == qv({0, 1}));

  CHECK(nullspace({qv({1, 0}), qv({0, 1})}, 2).empty());
}

TEST_CASE("affine_rank") {
  CHECK(affine_rank({}) == -1);
  CHECK(affine_rank({qv({5, 5})}) == 0);
  CHECK(affine_rank({qv({0, 0}), qv({2, 2})}) == 1);
  CHECK(affine_rank({qv({0, 0}), qv({1, 1}), qv({2, 2})}) == 1);
  CHECK(affine_rank({qv({0, 0}), qv({1, 0}), qv({0, 1})}) == 2);
}

TEST_CASE("strict feasibility basics") {
  auto w = lp_feasible_strict({{qv({1, 0}), ConstraintKind::StrictPos}});
  REQUIRE(w.has_value());
  CHECK(dot(qv({1, 0}), *w) >= 1);

  CHECK_FALSE(lp_feasible_strict({{qv({1}), ConstraintKind::StrictPos},
                                  {qv({-1}), ConstraintKind::StrictPos}})
                  .has_value());

  CHECK_FALSE(lp_feasible_strict({{qv({1, 0}), ConstraintKind::StrictPos},
                                  {qv({1, 0}), ConstraintKind::Eq}})
                  .has_value());

  // classic infeasible triple
  CHECK_FALSE(lp_feasible_strict({{qv({1, 0}), ConstraintKind::StrictPos},
                                  {qv({0, 1}), ConstraintKind::StrictPos},
                                  {qv({-1, -1}), ConstraintKind::StrictPos}})
                  .has_value());

  // equalities restrict the witness to a subspace
  auto m = lp_feasible_strict({{qv({1, 1}), ConstraintKind::StrictPos},
                               {qv({1, -1}), ConstraintKind::Eq}});
  REQUIRE(m.has_value());
  CHECK((*m)[0] == (*m)[1]);
  CHECK(dot(qv({1, 1}), *m) >= 1);

  // no strict rows: the zero vector satisfies everything
  auto z = lp_feasible_strict({{qv({1, 2, 3}), ConstraintKind::Eq}});
  REQUIRE(z.has_value());
  CHECK(is_zero(*z));
}

TEST_CASE("random feasible strict systems return verified witnesses") {
  std::mt19937 rng(20240817);
  std::uniform_int_distribution<int> small(-5, 5);
  for (int rep = 0; rep < 40; ++rep) {
    QVec target;
    do {
      target.clear();
      for (int i = 0; i < 3; ++i) target.push_back(small(rng));
    } while (is_zero(target));
    std::vector<LinConstraint> cons;
    for (int r = 0; r < 8; ++r) {
      QVec row;
      for (int i = 0; i < 3; ++i) row.push_back(small(rng));
      Rat d = dot(row, target);
      if (d == 0)
        cons.push_back({row, ConstraintKind::Eq});
      else
        cons.push_back({d > 0 ? row : neg(row), ConstraintKind::StrictPos});
    }
    auto w = lp_feasible_strict(cons);
    REQUIRE(w.has_value());
    for (const auto& c : cons) {
      Rat v = dot(c.coeffs, *w);
      if (c.kind == ConstraintKind::Eq)
        CHECK(v == 0);
      else
        CHECK(v >= 1);
    }
  }
}

TEST_CASE("random positive combinations of rows to zero are infeasible") {
  std::mt19937 rng(991);
  std::uniform_int_distribution<int> small(-4, 4);
  std::uniform_int_distribution<int> pos(1, 3);
  for (int rep = 0; rep < 40; ++rep) {
    std::vector<QVec> rows;
    for (int r = 0; r < 3; ++r) {
      QVec row;
      do {
        row.clear();
        for (int i = 0; i < 3; ++i) row.push_back(small(rng));
      } while (is_zero(row));
      rows.push_back(row);
    }
    QVec last = zero_vec(3);
    for (const auto& row : rows) last = sub(last, scale(pos(rng), row));
    std::vector<LinConstraint> cons;
    for (const auto& row : rows) cons.push_back({row, ConstraintKind::StrictPos});
    cons.push_back({last, ConstraintKind::StrictPos});
    CHECK_FALSE(lp_feasible_strict(cons).has_value());
  }
}

TEST_CASE("strict feasibility is invariant under positive row scaling") {
  std::mt19937 rng(5);
  std::uniform_int_distribution<int> small(-4, 4);
  std::uniform_int_distribution<int> pq(1, 5);
  for (int rep = 0; rep < 25; ++rep) {
    std::vector<LinConstraint> cons;
    for (int r = 0; r < 5; ++r) {
      QVec row;
      for (int i = 0; i < 3; ++i) row.push_back(small(rng));
      cons.push_back({row, r % 2 ? ConstraintKind::Eq : ConstraintKind::StrictPos});
    }
    bool base = lp_feasible_strict(cons).has_value();
    auto scaled = cons;
    for (auto& c : scaled) c.coeffs = scale(Rat(pq(rng)) / pq(rng), c.coeffs);
    CHECK(lp_feasible_strict(scaled).has_value() == base);
  }
}

TEST_CASE("phase-1 simplex primitive") {
  auto r = detail::phase1_simplex({qv({1, 1})}, qv({2}));
  CHECK(r.feasible);
  REQUIRE(r.x.size() == 2);
  CHECK(r.x[0] + r.x[1] == 2);
  CHECK(r.x[0] >= 0);
  CHECK(r.x[1] >= 0);

  auto bad = detail::phase1_simplex({qv({1, 0}), qv({1, 0})}, qv({1, 2}));
  CHECK_FALSE(bad.feasible);
  CHECK(bad.objective > 0);

  // negative rhs is re-signed internally
  auto neg_rhs = detail::phase1_simplex({qv({1, -1})}, qv({-3}));
  CHECK(neg_rhs.feasible);
  CHECK(neg_rhs.x[0] - neg_rhs.x[1] == -3);
}

TEST_CASE("is_vertex on a square with its center") {
  std::vector<QVec> cloud = {qv({1, 1}), qv({1, -1}), qv({-1, 1}), qv({-1, -1}),
                             qv({0, 0})};
  for (int i = 0; i < 4; ++i) CHECK(is_vertex(cloud[i], cloud));
  CHECK_FALSE(is_vertex(qv({0, 0}), cloud));
  CHECK(fails_with([&] { is_vertex(qv({7, 7}), cloud); }, Errc::PointNotInCloud));
}

TEST_CASE("is_vertex: origin inside the 5-dimensional cross-polytope") {
  std::vector<QVec> cloud;
  for (int i = 0; i < 5; ++i)
    for (int s : {1, -1}) {
      QVec p = zero_vec(5);
      p[i] = s;
      cloud.push_back(p);
    }
  cloud.push_back(zero_vec(5));
  CHECK_FALSE(is_vertex(zero_vec(5), cloud));
  for (int i = 0; i < 10; ++i) CHECK(is_vertex(cloud[i], cloud));
}

TEST_CASE("is_vertex ignores duplicate cloud entries") {
  std::vector<QVec> cloud = {qv({0, 0}), qv({0, 0}), qv({1, 0})};
  CHECK(is_vertex(qv({0, 0}), cloud));
  CHECK(is_vertex(qv({1, 0}), cloud));
}
