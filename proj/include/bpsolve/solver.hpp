/* SPDX-License-Identifier: Apache-2.0 */

#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <set>
#include <span>
#include <string>

#include "bpsolve/problem.hpp"
#include "bpsolve/subdivision.hpp"

namespace bpsolve {

enum class Traversal { LeftFirst, RightFirst };

enum class BoxDecision { Reject, Split, LeafAccept, LeafReject };

const char* to_string(BoxDecision decision);

/// One record per box visited by the search.
struct TraceRecord {
  MultiIndex offset;
  MultiIndex sub_scale;
  BoxDecision decision;
};

using TraceSink = std::function<void(const TraceRecord&)>;

struct SolverCounters {
  std::uint64_t boxes_created = 0;
  /// Boxes whose Bernstein bounds admitted a solution.
  std::uint64_t step1_passes = 0;
  /// Unit boxes that reached the lattice-point test.
  std::uint64_t leaf_tests = 0;
  std::uint64_t rejections = 0;

  friend bool operator==(const SolverCounters&, const SolverCounters&) = default;
};

struct SolverOptions {
  Traversal traversal = Traversal::LeftFirst;
  /// Called for every box; invoked under a lock when threads > 1.
  TraceSink trace;
  /// Values above one explore subtrees concurrently. The optimum and the
  /// solution set stay exact; counters and trace order become
  /// schedule-dependent.
  unsigned threads = 1;
};

enum class SolveStatus { Optimal, Infeasible };

const char* to_string(SolveStatus status);

using SolutionSet = std::set<IntVector>;

struct SolveOutcome {
  SolveStatus status = SolveStatus::Infeasible;
  /// Incumbent in the internal (canonical, maximized, integral) scale.
  ExtendedRational internal_theta;
  /// Optimum in the user's scale; empty when infeasible.
  std::optional<Rational> theta;
  SolutionSet solutions;
  SolverCounters counters;
};

/// Step-1 test: max(w_1) >= theta and max(w_i) >= 0 for every other column.
bool passes_bounds(std::span<const RationalVector> columns, const ExtendedRational& theta);

/// Finds every lattice point of the user box maximizing the objective.
/// The result is re-verified against the polynomials before returning.
SolveOutcome solve(const CanonicalProblem& cp, const MultiDegree& d,
                   const SolverOptions& options = {});
/// Uses default_degree(cp).
SolveOutcome solve(const CanonicalProblem& cp, const SolverOptions& options = {});

/// The bare subdivision search over prod [a_i, a_i + 2^{k_i}] starting from
/// an already pulled-back system: no padding, no upper-bound filter, so the
/// candidates are exactly the 2^K leaf lower corners.
SolveOutcome solve_raw(const IntVector& anchor, const MultiIndex& scale, const SystemMatrix& v,
                       const SolverOptions& options = {});

}  // namespace bpsolve
