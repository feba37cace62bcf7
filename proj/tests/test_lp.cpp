#include <doctest.h>

#include "convertbw/lp.hpp"

using namespace convertbw;

namespace {

CodeParams params(std::size_t lam, std::size_t kF, std::size_t rF, std::size_t rI,
                  std::size_t ell) {
  return validate_params(lam, kF, rF, rI, ell, 2);
}

}  // namespace

TEST_SUITE("lp") {

TEST_CASE("no constraints: the origin wins") {
  auto sol = solve(LpProblem({}, Rat(5), Rat(5)));
  REQUIRE(sol.has_value());
  CHECK(sol->x == Rat(0));
  CHECK(sol->y == Rat(0));
  CHECK(sol->value == Rat(0));
  CHECK(sol->vertex_kind == VertexKind::BoxCorner);
}

TEST_CASE("infeasible when the box cannot reach the constraint") {
  auto sol = solve(LpProblem({{Rat(1), Rat(1), Rat(10)}}, Rat(4), Rat(4)));
  CHECK_FALSE(sol.has_value());
}

TEST_CASE("degenerate constraint rejected") {
  CHECK_THROWS_AS(LpProblem({{Rat(0), Rat(0), Rat(1)}}, Rat(1), Rat(1)), BadParams);
}

TEST_CASE("third-regime problem for the worked example") {
  auto sol = solve(thm3_problem(params(2, 2, 1, 4, 4)));
  REQUIRE(sol.has_value());
  CHECK(sol->x == Rat(0));
  CHECK(sol->y == Rat(8));
  CHECK(sol->value == Rat(8));
  CHECK(sol->vertex_kind == VertexKind::ConstraintBox);
}

TEST_CASE("interior optimum matches the displayed coordinates") {
  auto sol = solve(thm3_problem(params(2, 3, 1, 4, 1)));
  REQUIRE(sol.has_value());
  CHECK(sol->x == Rat(6, 7));
  CHECK(sol->y == Rat(12, 7));
  CHECK(sol->value == Rat(18, 7));
  CHECK(sol->vertex_kind == VertexKind::ConstraintConstraint);
}

TEST_CASE("boundary optimum on the x = 0 edge") {
  auto sol = solve(thm3_problem(params(6, 3, 2, 13, 1)));
  REQUIRE(sol.has_value());
  CHECK(sol->x == Rat(0));
  CHECK(sol->y == Rat(13));
  CHECK(sol->value == Rat(13));
}

TEST_CASE("second-regime problems match the closed forms") {
  auto c2 = solve(thm2_problem(params(2, 4, 2, 3, 1)));
  REQUIRE(c2.has_value());
  CHECK(c2->value == Rat(28, 5));

  auto c1 = solve(thm2_problem(params(2, 4, 2, 1, 2)));
  REQUIRE(c1.has_value());
  CHECK(c1->value == Rat(14));

  CHECK_THROWS_AS(thm2_problem(params(2, 4, 2, 5, 1)), RegimeMismatch);
}

TEST_CASE("first-regime problem optimum is kI*ell") {
  auto sol = solve(thm1_problem(params(2, 2, 3, 5, 1)));
  REQUIRE(sol.has_value());
  CHECK(sol->value == Rat(4));
  CHECK_THROWS_AS(thm1_problem(params(2, 3, 2, 1, 1)), RegimeMismatch);
}

TEST_CASE("redundant constraints do not move the optimum") {
  LpProblem base = thm3_problem(params(2, 3, 1, 4, 1));
  auto cons = base.constraints;
  cons.push_back(cons.front());  // duplicate
  cons.push_back({Rat(1), Rat(1), Rat(0)});  // vacuous
  auto doubled = solve(LpProblem(cons, base.x_max, base.y_max));
  auto plain = solve(base);
  REQUIRE(doubled.has_value());
  REQUIRE(plain.has_value());
  CHECK(doubled->x == plain->x);
  CHECK(doubled->y == plain->y);
  CHECK(doubled->value == plain->value);
}

TEST_CASE("optimum scales linearly in ell") {
  for (std::size_t s : {2ul, 3ul, 5ul}) {
    auto base = solve(oracle_problem(params(2, 3, 1, 4, 1)));
    auto scaled = solve(oracle_problem(params(2, 3, 1, 4, s)));
    REQUIRE(base.has_value());
    REQUIRE(scaled.has_value());
    CHECK(scaled->value == base->value * Rat(static_cast<long>(s)));
    CHECK(scaled->x == base->x * Rat(static_cast<long>(s)));
  }
}

TEST_CASE("solution satisfies every constraint exactly") {
  for (auto prm : {params(2, 4, 2, 3, 1), params(3, 5, 2, 4, 2), params(2, 2, 1, 7, 4),
                   params(4, 3, 2, 9, 1), params(2, 3, 3, 4, 2)}) {
    LpProblem problem = oracle_problem(prm);
    auto sol = solve(problem);
    REQUIRE(sol.has_value());
    for (const LpConstraint& c : problem.constraints) {
      CHECK(c.a * sol->x + c.b * sol->y >= c.c);
    }
    CHECK(sol->x >= Rat(0));
    CHECK(sol->y >= Rat(0));
    CHECK(sol->x <= problem.x_max);
    CHECK(sol->y <= problem.y_max);
    CHECK(sol->value == sol->x + sol->y);
  }
}

}  // TEST_SUITE
