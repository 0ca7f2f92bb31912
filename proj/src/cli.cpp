/* SPDX-License-Identifier: Apache-2.0 */

#include "bpsolve/cli.hpp"

#include <CLI11.hpp>

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>

#include "bpsolve/basis_cache.hpp"
#include "bpsolve/error.hpp"
#include "bpsolve/parser.hpp"

namespace bpsolve {

using nlohmann::json;

json to_json(const SolverCounters& c) {
  return {{"boxesCreated", c.boxes_created},
          {"step1Passes", c.step1_passes},
          {"leafTests", c.leaf_tests},
          {"rejections", c.rejections}};
}

json solutions_to_json(const SolutionSet& solutions) {
  json arr = json::array();
  for (const auto& z : solutions) {
    json point = json::array();
    for (const auto& v : z) point.push_back(v.get_str());
    arr.push_back(std::move(point));
  }
  return arr;
}

json to_json(const SolveOutcome& outcome, bool with_counters) {
  json j;
  j["status"] = to_string(outcome.status);
  j["theta"] = outcome.theta ? json(outcome.theta->str()) : json(nullptr);
  j["solutions"] = solutions_to_json(outcome.solutions);
  if (with_counters) j["counters"] = to_json(outcome.counters);
  return j;
}

namespace {

json matrix_json(const RationalMatrix& m) {
  json rows = json::array();
  for (std::size_t r = 0; r < m.rows(); ++r) {
    json row = json::array();
    for (std::size_t c = 0; c < m.cols(); ++c) row.push_back(m(r, c).str());
    rows.push_back(std::move(row));
  }
  return rows;
}

json index_json(const MultiIndex& k) {
  json arr = json::array();
  for (auto e : k) arr.push_back(e);
  return arr;
}

}  // namespace

json to_json(const SubdivisionBasis& basis) {
  json axes = json::array();
  for (std::size_t i = 0; i < basis.degree().nvars(); ++i) {
    axes.push_back({{"axis", i + 1}, {"left", matrix_json(basis.left(i))},
                    {"right", matrix_json(basis.right(i))}});
  }
  return {{"degree", index_json(basis.degree().degree())}, {"axes", std::move(axes)}};
}

json to_json(const TraceRecord& r) {
  return {{"l", index_json(r.offset)}, {"kp", index_json(r.sub_scale)},
          {"decision", to_string(r.decision)}};
}

namespace {

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorKind::Io, "cannot read " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

std::optional<std::int64_t> degree_cap() {
  const char* env = std::getenv(kDegreeCapEnv);
  if (!env || !*env) return std::nullopt;
  char* end = nullptr;
  const long long v = std::strtoll(env, &end, 10);
  if (*end != '\0' || v < 0) {
    throw Error(ErrorKind::InvalidArgument, std::string(kDegreeCapEnv) + " must be a non-negative integer");
  }
  return v;
}

MultiDegree parse_degree(const std::string& text, std::size_t nvars) {
  std::vector<std::int64_t> entries;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    std::size_t used = 0;
    long long v = -1;
    try {
      v = std::stoll(item, &used);
    } catch (const std::exception&) {
      used = 0;
    }
    if (used != item.size() || v < 0) {
      throw Error(ErrorKind::InvalidArgument, "bad degree entry '" + item + "'");
    }
    entries.push_back(v);
  }
  if (nvars && entries.size() == 1 && nvars > 1) entries.assign(nvars, entries.front());
  if (entries.empty() || (nvars && entries.size() != nvars)) {
    throw Error(ErrorKind::InvalidArgument,
                "--degree needs " + std::to_string(nvars) + " comma-separated entries");
  }
  return MultiDegree(MultiIndex(std::move(entries)));
}

void check_degree_cap(const MultiDegree& d) {
  if (auto cap = degree_cap()) {
    for (auto e : d.degree()) {
      if (e > *cap) {
        throw Error(ErrorKind::CapExceeded, "degree " + d.degree().str() + " exceeds " +
                                                kDegreeCapEnv + "=" + std::to_string(*cap));
      }
    }
  }
}

struct LoadedProblem {
  CanonicalProblem cp;
  MultiDegree degree;
};

LoadedProblem load_problem(const std::string& path, const std::string& degree_text, BoxMode mode) {
  ProblemAst ast;
  try {
    ast = parse_problem(read_file(path));
  } catch (const ParseError& e) {
    throw Error(ErrorKind::Parse, path + ":" + std::to_string(e.line()) + ":" + std::to_string(e.column()) +
                                      ": " + e.message());
  }
  LoadedProblem lp{canonicalize(to_user_problem(ast), mode), {}};
  lp.degree = degree_text.empty() ? default_degree(lp.cp) : parse_degree(degree_text, lp.cp.nvars());
  check_degree_cap(lp.degree);
  return lp;
}

Rational parse_lambda(const std::string& text) { return Rational::parse(text); }

json outcome_summary(ExtendedRational theta, const std::optional<Rational>& user_theta,
                     const SolutionSet& solutions) {
  return {{"status", theta.is_finite() ? "optimal" : "infeasible"},
          {"theta", user_theta ? json(user_theta->str()) : json(nullptr)},
          {"solutions", solutions_to_json(solutions)}};
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact Bernstein-subdivision solver for integer polynomial programs", "bpsolve"};
  app.require_subcommand(1);

  std::string file;
  std::string degree_text;
  bool stats = false;
  bool raw_box = false;
  bool right_first = false;
  unsigned threads = 1;
  std::string trace_path;

  auto* solve_cmd = app.add_subcommand("solve", "Solve a problem file");
  solve_cmd->add_option("FILE", file, "Problem file")->required();
  solve_cmd->add_option("--degree", degree_text, "Bernstein degree per axis, e.g. 2,1");
  solve_cmd->add_flag("--stats", stats, "Include search counters");
  solve_cmd->add_option("--trace", trace_path, "Write one JSON record per box");
  solve_cmd->add_flag("--raw-box", raw_box, "Search the bounds exactly as [a, a+2^k]; no padding");
  solve_cmd->add_flag("--right-first", right_first, "Visit right children first");
  solve_cmd->add_option("--threads", threads, "Worker threads")->check(CLI::Range(1U, 256U));

  std::uint64_t cap = kDefaultOracleCap;
  auto* check_cmd = app.add_subcommand("check", "Compare the solver with brute-force enumeration");
  check_cmd->add_option("FILE", file, "Problem file")->required();
  check_cmd->add_option("--degree", degree_text, "Bernstein degree per axis");
  check_cmd->add_option("--cap", cap, "Largest box the enumeration accepts");

  std::string lambda_text;
  std::int64_t k_total = -1;
  std::uint64_t trials = 0;
  std::uint64_t seed = 1;
  std::string problem_path;
  auto* expect_cmd = app.add_subcommand("expect", "Expected number of boxes for a complexity number");
  auto* lambda_opt = expect_cmd->add_option("--lambda", lambda_text, "Complexity number P/Q");
  auto* k_opt = expect_cmd->add_option("--K", k_total, "Sum of box exponents");
  auto* problem_opt = expect_cmd->add_option("--problem", problem_path,
                                             "Estimate lambda from a problem file instead");
  lambda_opt->needs(k_opt);
  k_opt->needs(lambda_opt);
  problem_opt->excludes(lambda_opt)->excludes(k_opt);
  expect_cmd->add_option("--degree", degree_text, "Bernstein degree for --problem");
  expect_cmd->add_option("--simulate", trials, "Monte Carlo trials");
  expect_cmd->add_option("--seed", seed, "Simulation seed");
  expect_cmd->add_option("--trace", trace_path, "Solver trace to compare against");

  std::string out_path;
  std::string in_path;
  auto* matrices_cmd = app.add_subcommand("matrices", "Print or store the halving matrices");
  auto* mdeg = matrices_cmd->add_option("--degree", degree_text, "Degree per axis, e.g. 2,1");
  auto* mout = matrices_cmd->add_option("--out", out_path, "Write the binary cache to PATH");
  auto* min = matrices_cmd->add_option("--in", in_path, "Print a binary cache file");
  min->excludes(mdeg)->excludes(mout);

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  if (!reversed.empty()) reversed.pop_back();
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (solve_cmd->parsed()) {
      const LoadedProblem lp = load_problem(file, degree_text, raw_box ? BoxMode::Raw : BoxMode::Padded);
      SolverOptions options;
      options.threads = threads;
      options.traversal = right_first ? Traversal::RightFirst : Traversal::LeftFirst;
      std::ofstream trace;
      if (!trace_path.empty()) {
        trace.open(trace_path);
        if (!trace) throw Error(ErrorKind::Io, "cannot write " + trace_path);
        options.trace = [&trace](const TraceRecord& r) { trace << to_json(r).dump() << '\n'; };
      }
      const SolveOutcome outcome = solve(lp.cp, lp.degree, options);
      json j = to_json(outcome, stats);
      if (stats) {
        json deg = json::array();
        for (auto e : lp.degree.degree()) deg.push_back(e);
        j["degree"] = std::move(deg);
        j["K"] = lp.cp.total_exponent();
      }
      out << j.dump(2) << '\n';
      return kExitOk;
    }

    if (check_cmd->parsed()) {
      const LoadedProblem lp = load_problem(file, degree_text, BoxMode::Padded);
      const SolveOutcome s = solve(lp.cp, lp.degree);
      const OracleResult o = brute_force(lp.cp, cap);
      const std::optional<Rational> oracle_theta =
          o.theta.is_finite() ? std::optional<Rational>(lp.cp.transform.to_user(o.theta.value()))
                              : std::nullopt;
      if (s.internal_theta == o.theta && s.solutions == o.solutions) {
        out << "MATCH\n";
        return kExitOk;
      }
      json diff;
      diff["solver"] = outcome_summary(s.internal_theta, s.theta, s.solutions);
      diff["oracle"] = outcome_summary(o.theta, oracle_theta, o.solutions);
      SolutionSet only_solver;
      SolutionSet only_oracle;
      for (const auto& z : s.solutions) {
        if (!o.solutions.count(z)) only_solver.insert(z);
      }
      for (const auto& z : o.solutions) {
        if (!s.solutions.count(z)) only_oracle.insert(z);
      }
      diff["onlySolver"] = solutions_to_json(only_solver);
      diff["onlyOracle"] = solutions_to_json(only_oracle);
      out << "MISMATCH\n" << diff.dump(2) << '\n';
      return kExitMismatch;
    }

    if (expect_cmd->parsed()) {
      ComplexityInput ci;
      json j;
      if (!problem_path.empty()) {
        const LoadedProblem lp = load_problem(problem_path, degree_text, BoxMode::Padded);
        const SolveOutcome s = solve(lp.cp, lp.degree);
        const LambdaEstimate est = lambda_upper_bound(lp.cp, s.internal_theta, lp.degree);
        ci = {est.value, lp.cp.total_exponent()};
        j["lambdaUpperBound"] = est.value.str();
        j["observedBoxes"] = s.counters.boxes_created;
      } else if (!lambda_text.empty()) {
        ci = {parse_lambda(lambda_text), k_total};
      } else {
        throw Error(ErrorKind::InvalidArgument, "expect needs --lambda and --K, or --problem");
      }
      ci.validate();
      const auto [lo, hi] = expected_bounds(ci);
      const GenerationProfile profile = generation_profile(ci);
      j["lambda"] = ci.lambda.str();
      j["K"] = ci.K;
      j["expected"] = expected_boxes(ci).str();
      j["bounds"] = {lo.str(), hi.str()};
      json lambdas = json::array();
      json sizes = json::array();
      for (const auto& v : profile.lambdas) lambdas.push_back(v.str());
      for (const auto& v : profile.expected) sizes.push_back(v.str());
      j["profile"] = {{"lambdas", lambdas}, {"expectedGeneration", sizes}};
      if (trials > 0) {
        const BranchingStats st = simulate_branching(ci, trials, seed);
        j["simulation"] = {{"trials", trials},
                           {"seed", seed},
                           {"mean", st.mean().str()},
                           {"variance", st.variance().str()}};
      }
      if (!trace_path.empty()) {
        std::ifstream in(trace_path);
        if (!in) throw Error(ErrorKind::Io, "cannot read " + trace_path);
        std::uint64_t boxes = 0;
        for (std::string line; std::getline(in, line);) {
          if (!line.empty()) ++boxes;
        }
        j["observedBoxes"] = boxes;
      }
      out << j.dump(2) << '\n';
      return kExitOk;
    }

    if (matrices_cmd->parsed()) {
      SubdivisionBasis basis;
      if (!in_path.empty()) {
        basis = load_basis(in_path);
      } else {
        if (degree_text.empty()) throw Error(ErrorKind::InvalidArgument, "matrices needs --degree or --in");
        const MultiDegree d = parse_degree(degree_text, 0);
        check_degree_cap(d);
        basis = build_basis(d);
      }
      if (!out_path.empty()) {
        save_basis(out_path, basis);
      } else {
        out << to_json(basis).dump(2) << '\n';
      }
      return kExitOk;
    }
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  }
  return kExitUsage;
}

}  // namespace bpsolve
