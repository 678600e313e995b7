#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>
#include <stdexcept>

#include "oracles.hpp"
#include "pcmax/formulas.hpp"
#include "pcmax/lp_models.hpp"
#include "pcmax/simplex.hpp"

using namespace pcmax;
using namespace pcmax::lp;

namespace {

Rational solve_value(const LpModel& model) {
  const SolveResult r = simplex_solve(model);
  REQUIRE(r.status == SolveStatus::optimal);
  return r.objective;
}

}  // namespace

TEST_CASE("model building by name") {
  LpModel lp("toy", Sense::maximize);
  lp.add_variable("x");
  lp.add_variable("y", VarSign::free);
  CHECK(lp.column("y") == 1);
  CHECK(lp.has_variable("x"));
  CHECK_FALSE(lp.has_variable("z"));
  CHECK_THROWS_AS(lp.column("z"), std::out_of_range);
  CHECK_THROWS(lp.add_variable("x"));
  CHECK_THROWS(lp.add_constraint("bad", {{"z", 1}}, Relation::le, 1));
  lp.set_objective({{"x", 2}, {"y", 1}, {"x", 1}});
  CHECK(lp.objective()[0] == Rational(3));
  CHECK(lp.objective_value({Rational(1), Rational(5)}) == Rational(8));
}

TEST_CASE("simplex on a textbook maximization") {
  LpModel lp("textbook", Sense::maximize);
  lp.add_variable("x");
  lp.add_variable("y");
  lp.set_objective({{"x", 3}, {"y", 2}});
  lp.add_constraint("a", {{"x", 1}, {"y", 1}}, Relation::le, 4);
  lp.add_constraint("b", {{"x", 1}, {"y", 3}}, Relation::le, 6);
  lp.add_constraint("c", {{"x", 1}}, Relation::le, 3);
  const SolveResult r = simplex_solve(lp);
  REQUIRE(r.status == SolveStatus::optimal);
  CHECK(r.objective == Rational(11));
  CHECK(r.values[0] == Rational(3));
  CHECK(r.values[1] == Rational(1));
}

TEST_CASE("simplex detects infeasible and unbounded programs") {
  LpModel infeasible("infeasible");
  infeasible.add_variable("x");
  infeasible.set_objective({{"x", 1}});
  infeasible.add_constraint("lo", {{"x", 1}}, Relation::ge, 2);
  infeasible.add_constraint("hi", {{"x", 1}}, Relation::le, 1);
  CHECK(simplex_solve(infeasible).status == SolveStatus::infeasible);

  LpModel unbounded("unbounded", Sense::maximize);
  unbounded.add_variable("x");
  unbounded.add_variable("y");
  unbounded.set_objective({{"x", 1}});
  unbounded.add_constraint("r", {{"x", 1}, {"y", -1}}, Relation::ge, 0);
  CHECK(simplex_solve(unbounded).status == SolveStatus::unbounded);
}

TEST_CASE("free and non-positive variables") {
  LpModel lp("signs");
  lp.add_variable("x", VarSign::free);
  lp.add_variable("y", VarSign::nonpos);
  lp.set_objective({{"x", 1}, {"y", -1}});
  lp.add_constraint("x_lo", {{"x", 1}}, Relation::ge, -5);
  lp.add_constraint("y_lo", {{"y", 1}}, Relation::ge, -3);
  const SolveResult r = simplex_solve(lp);
  REQUIRE(r.status == SolveStatus::optimal);
  CHECK(r.objective == Rational(-5));
  CHECK(r.values[0] == Rational(-5));
  CHECK(r.values[1] == Rational(0));
}

TEST_CASE("redundant equality rows") {
  LpModel lp("redundant");
  lp.add_variable("x");
  lp.add_variable("y");
  lp.set_objective({{"x", 1}});
  lp.add_constraint("e1", {{"x", 1}, {"y", 1}}, Relation::eq, 2);
  lp.add_constraint("e2", {{"x", 2}, {"y", 2}}, Relation::eq, 4);
  CHECK(solve_value(lp) == Rational(0));
}

// Beale's example cycles under the textbook largest-coefficient rule.
TEST_CASE("degenerate program that cycles without an anti-cycling rule") {
  LpModel lp("beale");
  for (const char* v : {"x4", "x5", "x6", "x7"}) lp.add_variable(v);
  lp.set_objective({{"x4", Rational(-3, 4)}, {"x5", 20}, {"x6", Rational(-1, 2)}, {"x7", 6}});
  lp.add_constraint("r1", {{"x4", Rational(1, 4)}, {"x5", -8}, {"x6", -1}, {"x7", 9}}, Relation::le, 0);
  lp.add_constraint("r2", {{"x4", Rational(1, 2)}, {"x5", -12}, {"x6", Rational(-1, 2)}, {"x7", 3}}, Relation::le, 0);
  lp.add_constraint("r3", {{"x6", 1}}, Relation::le, 1);
  CHECK(solve_value(lp) == Rational(-5, 4));
}

TEST_CASE("simplex agrees with vertex enumeration on random planar programs") {
  std::mt19937_64 rng(12);
  std::uniform_int_distribution<int> coef(-6, 6);
  std::uniform_int_distribution<int> rhs(-4, 12);
  int feasible = 0;
  for (int trial = 0; trial < 400; ++trial) {
    std::vector<oracle::Row2> rows{{1, 0, 10}, {0, 1, 10}, {-1, 0, 0}, {0, -1, 0}};
    LpModel lp("planar", trial % 2 ? Sense::maximize : Sense::minimize);
    lp.add_variable("x");
    lp.add_variable("y");
    lp.add_constraint("box_x", {{"x", 1}}, Relation::le, 10);
    lp.add_constraint("box_y", {{"y", 1}}, Relation::le, 10);
    const int extra = 1 + trial % 4;
    for (int i = 0; i < extra; ++i) {
      const int a = coef(rng), b = coef(rng), c = rhs(rng);
      rows.push_back({a, b, c});
      lp.add_constraint("r" + std::to_string(i), {{"x", a}, {"y", b}}, Relation::le, c);
    }
    const int cx = coef(rng), cy = coef(rng);
    lp.set_objective({{"x", cx}, {"y", cy}});

    const auto expected = oracle::vertex_optimum(rows, cx, cy, trial % 2 == 1);
    const SolveResult r = simplex_solve(lp);
    if (!expected) {
      CHECK(r.status == SolveStatus::infeasible);
      continue;
    }
    ++feasible;
    REQUIRE(r.status == SolveStatus::optimal);
    CHECK(r.objective == *expected);

    // The mechanically derived dual reaches the same value.
    const SolveResult d = simplex_solve(derive_dual(lp));
    REQUIRE(d.status == SolveStatus::optimal);
    CHECK(d.objective == *expected);
  }
  CHECK(feasible > 100);
}

TEST_CASE("derived dual shape") {
  const LpModel primal = noncritical_k_model(5, 3);
  const LpModel dual = derive_dual(primal);
  CHECK(dual.sense() == Sense::maximize);
  CHECK(dual.num_variables() == primal.num_constraints());
  CHECK(dual.num_constraints() == primal.num_variables());
  CHECK(dual.has_variable("y[heuristic_one]"));
}

TEST_CASE("non-critical model structure") {
  const LpModel lp = noncritical_k_model(5, 3);
  CHECK(lp.num_variables() == 7);
  CHECK(lp.num_constraints() == 7);
  bool found = false;
  for (const auto& row : lp.constraints()) {
    if (row.name != "heuristic_one") continue;
    found = true;
    CHECK(row.relation == Relation::eq);
    CHECK(row.rhs == Rational(1));
    for (std::size_t c = 0; c < lp.num_variables(); ++c) {
      const auto& name = lp.variables()[c].name;
      CHECK(row.coeffs[c] == Rational(name == "t_c" || name == "p_n" ? 1 : 0));
    }
  }
  CHECK(found);
}

TEST_CASE("slack model objective") {
  for (int m = 3; m <= 8; ++m) {
    const LpModel lp = slack76_model(m);
    CHECK(lp.sense() == Sense::maximize);
    for (std::size_t c = 0; c < lp.num_variables(); ++c) {
      const auto& name = lp.variables()[c].name;
      const bool in_objective = name == "p[" + std::to_string(2 * m + 1) + "]" ||
                                name == "p[" + std::to_string(m) + "]" ||
                                name == "p[" + std::to_string(2 * m) + "]";
      CHECK(lp.objective()[c] == Rational(in_objective ? 1 : 0));
    }
  }
}

TEST_CASE("appendix model for two machines has six jobs") {
  const LpModel lp = appendix_a_model(2);
  for (int j = 1; j <= 6; ++j) CHECK(lp.has_variable("p[" + std::to_string(j) + "]"));
  CHECK_FALSE(lp.has_variable("p[7]"));
}

TEST_CASE("model optima") {
  CHECK(solve_value(appendix_a_model(2)) == Rational(8, 9));
  CHECK(solve_value(appendix_a_model(3)) == Rational(6, 7));
  CHECK(solve_value(appendix_a_model(4)) == Rational(16, 19));
  for (int m = 3; m <= 8; ++m) CHECK(solve_value(slack76_model(m)) == Rational(7, 6));
  CHECK(solve_value(case1_not_m1_model(3)) == Rational(15, 13));
  for (int m = 4; m <= 10; ++m) {
    CAPTURE(m);
    CHECK(solve_value(case1_not_m1_model(m)) == Rational(8 * m - 7, 3 * (2 * m - 1)));
    CHECK(solve_value(case1_not_m1_dual_model(m)) == Rational(8 * m - 7, 3 * (2 * m - 1)));
    CHECK(solve_value(case2_model(m)) <= case_bound_2m1(m));
  }
  CHECK(solve_value(noncritical_k_model(5, 3)) == Rational(4, 5));
  CHECK(solve_value(noncritical_k_dual_model(5, 3)) == Rational(4, 5));
}

TEST_CASE("appendix sub-case optima") {
  using enum AppendixBCase;
  for (int n : {10, 11}) {
    for (auto sub : {first_three_on_two, first_three_on_three}) {
      CHECK(solve_value(appendix_b_model(4, n, sub)).reciprocal() == Rational(11, 9));
    }
  }
  CHECK(solve_value(appendix_b_model(3, 8, tprime_p1_p6)).reciprocal() == Rational(15, 13));
  CHECK(solve_value(appendix_b_model(3, 8, tprime_p2_p5)).reciprocal() == Rational(7, 6));
  CHECK(solve_value(appendix_b_model(3, 8, tprime_p3_p4)).reciprocal() == Rational(7, 6));
}

TEST_CASE("verbatim and derived duals agree") {
  for (int m = 3; m <= 8; ++m) {
    CAPTURE(m);
    CHECK(solve_value(derive_dual(case1_not_m1_model(m))) == solve_value(case1_not_m1_dual_model(m)));
    CHECK(solve_value(derive_dual(case2_model(m))) == solve_value(case2_dual_model(m)));
  }
  for (int k = 1; k <= 4; ++k) {
    for (int m = k + 2; m <= k + 6; ++m) {
      CHECK(solve_value(derive_dual(noncritical_k_model(m, k))) == solve_value(noncritical_k_dual_model(m, k)));
    }
  }
}

TEST_CASE("builders reject parameters outside their range") {
  CHECK_THROWS_AS(slack76_model(2), std::invalid_argument);
  CHECK_THROWS_AS(appendix_a_model(1), std::invalid_argument);
  CHECK_THROWS_AS(case1_not_m1_model(2), std::invalid_argument);
  CHECK_THROWS_AS(noncritical_k_model(1, 1), std::invalid_argument);
  CHECK_THROWS_AS(noncritical_k_model(5, 0), std::invalid_argument);
  CHECK_THROWS_AS(appendix_b_model(3, 8, AppendixBCase::first_three_on_two), std::invalid_argument);
  CHECK_THROWS_AS(build_model(ModelKind::appendix_b, {4, 0, 9, AppendixBCase::backbone}), std::invalid_argument);
}
