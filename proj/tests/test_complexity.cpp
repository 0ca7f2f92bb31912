/* SPDX-License-Identifier: Apache-2.0 */

#include <doctest.h>

#include "bpsolve/complexity.hpp"
#include "bpsolve/error.hpp"
#include "bpsolve/solver.hpp"
#include "support/generators.hpp"

using namespace bpsolve;

namespace {

Rational q(long p, long d = 1) { return Rational(Integer(p), Integer(d)); }

// Split probability at generation i by repeated squaring of (1 - lambda).
Rational split_probability(const Rational& lambda, std::int64_t K, std::int64_t i) {
  Rational keep = Rational(1) - lambda;
  for (std::int64_t s = 0; s < K - i; ++s) keep = keep * keep;
  return Rational(1) - keep;
}

// Expected subtree size from generation i: E(K) = 1, E(i) = 1 + 2 lambda_i E(i+1).
Rational expected_by_recursion(const Rational& lambda, std::int64_t K) {
  Rational e(1);
  for (std::int64_t i = K - 1; i >= 0; --i) e = Rational(1) + Rational(2) * split_probability(lambda, K, i) * e;
  return e;
}

UserProblem diagonal(std::int64_t side) {
  UserProblem up;
  up.names = {"x", "y"};
  up.bounds = {{0, side}, {0, side}};
  up.constraints.push_back(
      {MonomialPoly::variable(2, 1), Relation::Eq, MonomialPoly::variable(2, 0)});
  return up;
}

UserProblem parabola() {
  UserProblem up;
  up.names = {"x", "y"};
  up.bounds = {{0, 8}, {0, 8}};
  up.constraints.push_back({MonomialPoly::variable(2, 1) - MonomialPoly::variable(2, 0).pow(2),
                            Relation::Eq, MonomialPoly(2)});
  return up;
}

}  // namespace

TEST_CASE("expected box counts") {
  CHECK(expected_boxes({q(1, 2), 2}) == q(91, 16));
  for (std::int64_t K = 0; K <= 8; ++K) {
    CHECK(expected_boxes({q(1), K}) == Rational(pow2(static_cast<unsigned long>(K + 1)) - 1));
    CHECK(expected_boxes({q(0), K}) == q(1));
  }
  const Rational e = expected_boxes({q(1, 8), 6});
  CHECK(e > q(67, 2));
  CHECK(e < q(69, 2));
}

TEST_CASE("closed form matches the branching recursion") {
  testing::Gen g(99);
  for (int trial = 0; trial < 40; ++trial) {
    const Rational lambda = g.unit();
    const std::int64_t K = g.integer(0, 9);
    CHECK(expected_boxes({lambda, K}) == expected_by_recursion(lambda, K));
  }
}

TEST_CASE("generation profile") {
  const auto p = generation_profile({q(1, 2), 2});
  REQUIRE(p.lambdas.size() == 3);
  REQUIRE(p.expected.size() == 3);
  CHECK(p.lambdas[0] == q(15, 16));
  CHECK(p.lambdas[1] == q(3, 4));
  CHECK(p.lambdas[2] == q(1, 2));
  CHECK(p.expected[0] == q(1));
  CHECK(p.expected[1] == q(15, 8));
  CHECK(p.expected[2] == q(45, 16));

  testing::Gen g(3);
  for (int trial = 0; trial < 30; ++trial) {
    const Rational lambda = g.unit();
    const std::int64_t K = g.integer(0, 8);
    const auto prof = generation_profile({lambda, K});
    Rational sum;
    for (std::int64_t i = 0; i <= K; ++i) {
      CHECK(prof.lambdas[static_cast<std::size_t>(i)] == split_probability(lambda, K, i));
      sum += prof.expected[static_cast<std::size_t>(i)];
    }
    CHECK(sum == expected_boxes({lambda, K}));
    for (std::size_t i = 1; i < prof.lambdas.size(); ++i) CHECK(prof.lambdas[i] <= prof.lambdas[i - 1]);
  }
}

TEST_CASE("expected boxes grow with lambda and stay within the bounds") {
  testing::Gen g(12);
  for (int trial = 0; trial < 40; ++trial) {
    Rational a = g.unit(), b = g.unit();
    if (b < a) std::swap(a, b);
    const std::int64_t K = g.integer(0, 8);
    CHECK(expected_boxes({a, K}) <= expected_boxes({b, K}));
    const auto [lo, hi] = expected_bounds({a, K});
    const Rational e = expected_boxes({a, K});
    CHECK(lo <= e);
    CHECK(e <= hi);
  }
  const auto [lo, hi] = expected_bounds({q(1, 2), 2});
  CHECK(lo == q(3));
  CHECK(hi == q(7));
  const auto [lo2, hi2] = expected_bounds({q(3, 4), 2});
  CHECK(lo2 == q(19, 4));
  CHECK(hi2 == q(7));
}

TEST_CASE("input validation") {
  CHECK_THROWS_AS(expected_boxes({q(-1, 2), 2}), Error);
  CHECK_THROWS_AS(expected_boxes({q(3, 2), 2}), Error);
  CHECK_THROWS_AS(expected_boxes({q(1, 2), -1}), Error);
  CHECK_THROWS_AS(expected_boxes({q(1, 2), kMaxComplexityK + 1}), Error);
  CHECK_NOTHROW(expected_boxes({q(1, 2), kMaxComplexityK}));
}

TEST_CASE("branching statistics") {
  BranchingStats s;
  s.trials = 4;
  s.total = 1 + 3 + 3 + 7;
  s.total_squares = 1 + 9 + 9 + 49;
  CHECK(s.mean() == q(7, 2));
  CHECK(s.variance() == q(19, 3));
  CHECK(s.standard_error_squared() == q(19, 12));
  CHECK(s.within_standard_errors(q(7, 2), 0));
  CHECK(s.within_standard_errors(q(0), 3));
  CHECK_FALSE(s.within_standard_errors(q(0), 2));
}

TEST_CASE("simulation") {
  const auto full = simulate_branching({q(1), 3}, 50, 1);
  CHECK(full.mean() == q(15));
  CHECK(full.variance() == q(0));
  const auto none = simulate_branching({q(0), 5}, 50, 1);
  CHECK(none.mean() == q(1));

  const ComplexityInput ci{q(1, 2), 2};
  const auto s = simulate_branching(ci, 20000, 42);
  CHECK(s.trials == 20000);
  CHECK(s.within_standard_errors(expected_boxes(ci), 3));

  const auto again = simulate_branching(ci, 20000, 42);
  CHECK(again.total == s.total);
  CHECK(again.total_squares == s.total_squares);
  const auto other = simulate_branching(ci, 20000, 43);
  CHECK(other.total != s.total);
}

TEST_CASE("lambda upper bound") {
  SUBCASE("diagonal on [0,2]^2") {
    const auto cp = canonicalize(diagonal(2), BoxMode::Raw);
    const auto est = lambda_upper_bound(cp, q(0), MultiDegree{1, 1});
    CHECK(est.total == 4);
    CHECK(est.kept == 4);
    CHECK(est.value == q(1));
  }
  SUBCASE("parabola on [0,8]^2") {
    const auto cp = canonicalize(parabola(), BoxMode::Raw);
    const auto est = lambda_upper_bound(cp, q(0), MultiDegree{2, 1});
    CHECK(est.total == 64);
    CHECK(est.kept == 12);
    CHECK(est.value == q(12, 64));
  }
}

TEST_CASE("lambda upper bound is monotone and covers the optimum") {
  testing::Gen g(77);
  for (int trial = 0; trial < 30; ++trial) {
    const std::size_t n = static_cast<std::size_t>(g.integer(1, 2));
    const auto cp = canonicalize(testing::random_problem(g, n, 2, 8, 2));
    const MultiDegree d = default_degree(cp);
    const auto out = solve(cp, d);
    const auto at_theta = lambda_upper_bound(cp, out.internal_theta, d);
    const auto loose = lambda_upper_bound(cp, ExtendedRational::neg_infinity(), d);
    CHECK(at_theta.total == pow2(static_cast<unsigned long>(cp.total_exponent())));
    CHECK(at_theta.kept <= loose.kept);
    CHECK(at_theta.value == Rational(at_theta.kept, at_theta.total));
    if (out.status == SolveStatus::Optimal) CHECK(at_theta.kept >= 1);

    std::vector<std::int64_t> up(n);
    for (std::size_t i = 0; i < n; ++i) up[i] = d[i] + 1;
    const auto elevated = lambda_upper_bound(cp, out.internal_theta, MultiDegree(MultiIndex(up)));
    CHECK(elevated.kept <= at_theta.kept);
  }
}
