/* SPDX-License-Identifier: Apache-2.0 */

#pragma once

#include <cstdint>
#include <utility>

#include "bpsolve/problem.hpp"
#include "bpsolve/rational.hpp"

namespace bpsolve {

/// Largest K accepted by the analytics; (1 - lambda)^(2^K) is formed exactly.
inline constexpr std::int64_t kMaxComplexityK = 20;

/// Complexity number lambda in [0,1] and total box exponent K = sum k_i.
struct ComplexityInput {
  Rational lambda;
  std::int64_t K = 0;

  /// Throws Error(InvalidArgument) when out of range.
  void validate() const;
};

/// Split probabilities lambda_i = 1 - (1 - lambda)^(2^(K-i)) and expected
/// generation sizes E(Z_0) = 1, E(Z_{i+1}) = 2 lambda_i E(Z_i), for i = 0..K.
struct GenerationProfile {
  RationalVector lambdas;
  RationalVector expected;
};

GenerationProfile generation_profile(const ComplexityInput& ci);

/// sum_{i=0}^{K} 2^i prod_{j<i} (1 - (1 - lambda)^(2^(K-j))), exactly.
Rational expected_boxes(const ComplexityInput& ci);

/// ((2 lambda)^(K+1) - 1) / (2 lambda - 1), or K + 1 when lambda = 1/2, and
/// 2^(K+1) - 1.
std::pair<Rational, Rational> expected_bounds(const ComplexityInput& ci);

/// Exact running sums over simulated trees.
struct BranchingStats {
  std::uint64_t trials = 0;
  Integer total;
  Integer total_squares;

  Rational mean() const;
  /// Unbiased sample variance; zero for a single trial.
  Rational variance() const;
  /// Squared standard error of the mean, variance / trials.
  Rational standard_error_squared() const;
  /// |mean - value| <= sigmas * standard error, decided exactly.
  bool within_standard_errors(const Rational& value, unsigned sigmas) const;
};

/// Galton-Watson simulation of the box tree: a generation-i box has two
/// children with probability lambda_i and none otherwise. Bernoulli draws
/// compare a uniform integer against the exact probability, so results are
/// a pure function of (ci, trials, seed).
BranchingStats simulate_branching(const ComplexityInput& ci, std::uint64_t trials,
                                  std::uint64_t seed);

struct LambdaEstimate {
  Integer kept;
  Integer total;
  Rational value;
};

/// Fraction of unit boxes of the problem's root box that survive the
/// Bernstein bound test at degree `d` against the fixed incumbent `theta`
/// (internal scale). An upper bound on the complexity number.
LambdaEstimate lambda_upper_bound(const CanonicalProblem& cp, const ExtendedRational& theta,
                                  const MultiDegree& d);

}  // namespace bpsolve
