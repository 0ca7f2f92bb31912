/* SPDX-License-Identifier: Apache-2.0 */

#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include <json.hpp>

#include "bpsolve/complexity.hpp"
#include "bpsolve/oracle.hpp"
#include "bpsolve/solver.hpp"

namespace bpsolve {

/// Environment variable holding the largest per-axis degree the CLI accepts.
inline constexpr const char* kDegreeCapEnv = "BPSOLVE_DEGREE_CAP";

/// Exit codes of run().
inline constexpr int kExitOk = 0;
inline constexpr int kExitMismatch = 1;
inline constexpr int kExitUsage = 2;

/// Runs the command line `args` (args[0] is the program name). Results go
/// to `out`, diagnostics to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

nlohmann::json to_json(const SolveOutcome& outcome, bool with_counters);
nlohmann::json to_json(const SolverCounters& counters);
nlohmann::json to_json(const SubdivisionBasis& basis);
nlohmann::json to_json(const TraceRecord& record);

/// Lexicographically sorted solution list with coordinates as decimal strings.
nlohmann::json solutions_to_json(const SolutionSet& solutions);

}  // namespace bpsolve
