/* SPDX-License-Identifier: Apache-2.0 */

#pragma once

#include <cstdint>

#include "bpsolve/problem.hpp"
#include "bpsolve/solver.hpp"

namespace bpsolve {

inline constexpr std::uint64_t kDefaultOracleCap = 10'000'000;

struct OracleResult {
  ExtendedRational theta;
  SolutionSet solutions;
  std::uint64_t points_scanned = 0;
};

/// Enumerates every lattice point of [anchor, user_upper] in row-major
/// order and keeps the feasible maximizers of q[0]. Refuses with
/// Error(CapExceeded) when the box holds more than `cap` points.
OracleResult brute_force(const CanonicalProblem& cp, std::uint64_t cap = kDefaultOracleCap);

}  // namespace bpsolve
