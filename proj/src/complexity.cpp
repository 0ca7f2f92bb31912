/* SPDX-License-Identifier: Apache-2.0 */

#include "bpsolve/complexity.hpp"

#include <vector>

#include "bpsolve/error.hpp"
#include "bpsolve/solver.hpp"
#include "bpsolve/subdivision.hpp"

namespace bpsolve {

void ComplexityInput::validate() const {
  if (lambda < Rational(0) || lambda > Rational(1)) {
    throw Error(ErrorKind::InvalidArgument, "lambda " + lambda.str() + " outside [0,1]");
  }
  if (K < 0 || K > kMaxComplexityK) {
    throw Error(ErrorKind::InvalidArgument,
                "K must lie in [0, " + std::to_string(kMaxComplexityK) + "]");
  }
}

namespace {

// 1 - (1 - lambda)^(2^e)
Rational split_probability(const Rational& lambda, std::int64_t e) {
  Rational miss = Rational(1) - lambda;
  for (std::int64_t i = 0; i < e; ++i) miss *= miss;
  return Rational(1) - miss;
}

}  // namespace

GenerationProfile generation_profile(const ComplexityInput& ci) {
  ci.validate();
  GenerationProfile g;
  for (std::int64_t i = 0; i <= ci.K; ++i) g.lambdas.push_back(split_probability(ci.lambda, ci.K - i));
  g.expected.push_back(Rational(1));
  for (std::int64_t i = 0; i < ci.K; ++i) {
    g.expected.push_back(Rational(2) * g.lambdas[i] * g.expected.back());
  }
  return g;
}

Rational expected_boxes(const ComplexityInput& ci) {
  ci.validate();
  Rational sum;
  for (std::int64_t i = 0; i <= ci.K; ++i) {
    Rational term(pow2(static_cast<unsigned long>(i)));
    for (std::int64_t j = 0; j < i; ++j) term *= split_probability(ci.lambda, ci.K - j);
    sum += term;
  }
  return sum;
}

std::pair<Rational, Rational> expected_bounds(const ComplexityInput& ci) {
  ci.validate();
  const Rational hi = Rational(pow2(static_cast<unsigned long>(ci.K + 1))) - Rational(1);
  const Rational two_lambda = Rational(2) * ci.lambda;
  Rational lo;
  if (two_lambda == Rational(1)) {
    lo = Rational(ci.K + 1);
  } else {
    lo = (two_lambda.pow(static_cast<unsigned>(ci.K + 1)) - Rational(1)) / (two_lambda - Rational(1));
  }
  return {lo, hi};
}

Rational BranchingStats::mean() const {
  if (trials == 0) throw Error(ErrorKind::InvalidArgument, "no trials");
  return Rational(total, Integer(static_cast<unsigned long>(trials)));
}

Rational BranchingStats::variance() const {
  if (trials < 2) return Rational(0);
  const Rational n(trials);
  const Rational m = mean();
  return (Rational(total_squares) - n * m * m) / (n - Rational(1));
}

Rational BranchingStats::standard_error_squared() const {
  return variance() / Rational(trials);
}

bool BranchingStats::within_standard_errors(const Rational& value, unsigned sigmas) const {
  const Rational diff = mean() - value;
  return diff * diff <= Rational(sigmas * sigmas) * standard_error_squared();
}

BranchingStats simulate_branching(const ComplexityInput& ci, std::uint64_t trials,
                                  std::uint64_t seed) {
  ci.validate();
  if (trials == 0) throw Error(ErrorKind::InvalidArgument, "trials must be at least 1");
  const GenerationProfile profile = generation_profile(ci);

  gmp_randclass rng(gmp_randinit_mt);
  rng.seed(static_cast<unsigned long>(seed));

  BranchingStats stats;
  stats.trials = trials;
  Integer draw;
  for (std::uint64_t t = 0; t < trials; ++t) {
    std::uint64_t alive = 1;
    std::uint64_t boxes = 1;
    for (std::int64_t i = 0; i < ci.K && alive > 0; ++i) {
      const Rational& p = profile.lambdas[static_cast<std::size_t>(i)];
      const Integer num = p.numerator();
      const Integer den = p.denominator();
      std::uint64_t splits = 0;
      for (std::uint64_t b = 0; b < alive; ++b) {
        draw = rng.get_z_range(den);
        if (draw < num) ++splits;
      }
      alive = 2 * splits;
      boxes += alive;
    }
    const Integer z(static_cast<unsigned long>(boxes));
    stats.total += z;
    stats.total_squares += z * z;
  }
  return stats;
}

LambdaEstimate lambda_upper_bound(const CanonicalProblem& cp, const ExtendedRational& theta,
                                  const MultiDegree& d) {
  const SystemMatrix v = initial_system(cp, d);
  const SubdivisionBasis basis = build_basis(d);

  struct Node {
    MultiIndex sub_scale;
    std::vector<RationalVector> columns;
  };
  std::vector<Node> stack;
  stack.push_back({cp.scale, {}});
  for (const auto& c : v.columns) stack.back().columns.push_back(c.coeffs());

  // Subdivided coefficients are convex combinations of the parent's, so a
  // rejected box has only rejected unit boxes below it.
  Integer kept = 0;
  while (!stack.empty()) {
    Node node = std::move(stack.back());
    stack.pop_back();
    if (!passes_bounds(node.columns, theta)) continue;
    const std::size_t j = node.sub_scale.argmax();
    if (node.sub_scale[j] == 0) {
      kept += 1;
      continue;
    }
    MultiIndex child_scale = node.sub_scale;
    child_scale.set(j, child_scale[j] - 1);
    Node left{child_scale, {}};
    Node right{child_scale, {}};
    for (const auto& w : node.columns) {
      left.columns.push_back(apply_half(basis, w, j, Side::Left));
      right.columns.push_back(apply_half(basis, w, j, Side::Right));
    }
    stack.push_back(std::move(right));
    stack.push_back(std::move(left));
  }
  LambdaEstimate est;
  est.kept = kept;
  est.total = pow2(static_cast<unsigned long>(cp.total_exponent()));
  est.value = Rational(est.kept, est.total);
  return est;
}

}  // namespace bpsolve
