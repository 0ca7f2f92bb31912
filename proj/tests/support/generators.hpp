/* SPDX-License-Identifier: Apache-2.0 */

// Seeded generators shared by the property tests.

#pragma once

#include <cstdint>
#include <random>
#include <vector>

#include "bpsolve/bernstein.hpp"
#include "bpsolve/problem.hpp"

namespace bpsolve::testing {

class Gen {
 public:
  explicit Gen(std::uint64_t seed) : rng_(seed) {}

  std::int64_t integer(std::int64_t lo, std::int64_t hi) {
    return std::uniform_int_distribution<std::int64_t>(lo, hi)(rng_);
  }

  bool coin(unsigned percent = 50) { return integer(0, 99) < percent; }

  Rational rational(std::int64_t max_num = 9, std::int64_t max_den = 9) {
    return Rational(Integer(static_cast<long>(integer(-max_num, max_num))),
                    Integer(static_cast<long>(integer(1, max_den))));
  }

  /// Random rational in [0,1] with denominator up to max_den.
  Rational unit(std::int64_t max_den = 32) {
    const std::int64_t den = integer(1, max_den);
    return Rational(Integer(static_cast<long>(integer(0, den))), Integer(static_cast<long>(den)));
  }

  RationalVector unit_point(std::size_t n) {
    RationalVector x;
    for (std::size_t i = 0; i < n; ++i) x.push_back(unit());
    return x;
  }

  MultiDegree degree(std::size_t n, std::int64_t max_d) {
    std::vector<std::int64_t> d(n);
    for (auto& e : d) e = integer(0, max_d);
    return MultiDegree(MultiIndex(d));
  }

  /// Polynomial whose multidegree is at most `d`; rational coefficients
  /// when `rational_coeffs`, integers in [-coeff, coeff] otherwise.
  MonomialPoly poly(const MultiDegree& d, std::size_t terms, std::int64_t coeff = 9,
                    bool rational_coeffs = true) {
    MonomialPoly p(d.nvars());
    for (std::size_t t = 0; t < terms; ++t) {
      std::vector<std::int64_t> e(d.nvars());
      for (std::size_t i = 0; i < d.nvars(); ++i) e[i] = integer(0, d[i]);
      const Rational c = rational_coeffs ? rational(coeff, 7)
                                         : Rational(Integer(static_cast<long>(integer(-coeff, coeff))));
      p.add_term(MultiIndex(e), c);
    }
    return p;
  }

  std::mt19937_64& engine() { return rng_; }

 private:
  std::mt19937_64 rng_;
};

/// Random problem in the shape of the oracle-equivalence suite.
inline UserProblem random_problem(Gen& g, std::size_t n, std::int64_t max_degree,
                                  std::int64_t max_side, std::size_t max_constraints) {
  UserProblem up;
  for (std::size_t i = 0; i < n; ++i) {
    up.names.push_back("x" + std::to_string(i + 1));
    const std::int64_t lo = g.integer(-5, 5);
    const std::int64_t side = g.integer(1, max_side);
    up.bounds.push_back({Integer(static_cast<long>(lo)), Integer(static_cast<long>(lo + side - 1))});
  }
  const MultiDegree d = g.degree(n, max_degree);
  const int dir = static_cast<int>(g.integer(0, 2));
  up.direction = dir == 0 ? Direction::Maximize : (dir == 1 ? Direction::Minimize : Direction::None);
  up.objective = up.direction == Direction::None
                     ? MonomialPoly(n)
                     : g.poly(d, static_cast<std::size_t>(g.integer(1, 4)), 9, false);
  const std::size_t m = static_cast<std::size_t>(g.integer(0, static_cast<std::int64_t>(max_constraints)));
  for (std::size_t c = 0; c < m; ++c) {
    const Relation rels[] = {Relation::Le, Relation::Ge, Relation::Lt, Relation::Gt, Relation::Eq};
    // Equalities rarely have lattice solutions; keep them uncommon.
    Relation rel = rels[g.integer(0, 3)];
    if (g.coin(10)) rel = Relation::Eq;
    up.constraints.push_back({g.poly(d, static_cast<std::size_t>(g.integer(1, 4)), 9, false), rel,
                              MonomialPoly::constant(n, Rational(g.integer(-9, 9)))});
  }
  return up;
}

}  // namespace bpsolve::testing
