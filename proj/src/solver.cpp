/* SPDX-License-Identifier: Apache-2.0 */

#include "bpsolve/solver.hpp"

#include <algorithm>
#include <atomic>
#include <memory>
#include <mutex>
#include <thread>
#include <utility>
#include <vector>

#include "bpsolve/error.hpp"

namespace bpsolve {

const char* to_string(BoxDecision decision) {
  switch (decision) {
    case BoxDecision::Reject: return "reject";
    case BoxDecision::Split: return "split";
    case BoxDecision::LeafAccept: return "leaf-accept";
    case BoxDecision::LeafReject: return "leaf-reject";
  }
  return "?";
}

const char* to_string(SolveStatus status) {
  return status == SolveStatus::Optimal ? "optimal" : "infeasible";
}

bool passes_bounds(std::span<const RationalVector> columns, const ExtendedRational& theta) {
  if (columns.empty()) return true;
  const Rational zero;
  for (std::size_t i = 0; i < columns.size(); ++i) {
    const Rational& hi = *std::max_element(columns[i].begin(), columns[i].end());
    if (i == 0) {
      if (theta.is_finite() && hi < theta.value()) return false;
    } else if (hi < zero) {
      return false;
    }
  }
  return true;
}

namespace {

// Shared incumbent. Only ever increases.
class IncumbentCell {
 public:
  bool admits_box(std::span<const RationalVector> columns) const {
    std::lock_guard lock(mu_);
    return passes_bounds(columns, theta_);
  }

  // Leaf value offer; true when value >= current theta (theta raised if >).
  bool offer(const Rational& value) {
    std::lock_guard lock(mu_);
    if (theta_.is_finite() && value < theta_.value()) return false;
    if (!theta_.is_finite() || value > theta_.value()) theta_ = value;
    return true;
  }

  ExtendedRational get() const {
    std::lock_guard lock(mu_);
    return theta_;
  }

 private:
  mutable std::mutex mu_;
  ExtendedRational theta_;
};

struct Node {
  LatticeBox box;
  std::vector<RationalVector> columns;
};

struct Candidate {
  IntVector point;
  Rational value;
};

class Search {
 public:
  Search(const SubdivisionBasis& basis, const IntVector* upper, const SolverOptions& options,
         IncumbentCell& incumbent, std::mutex* trace_mu)
      : basis_(basis), upper_(upper), options_(options), incumbent_(incumbent),
        trace_mu_(trace_mu) {}

  // Decides one box. Returns its children in visiting order, or nothing.
  std::vector<Node> expand(Node node) {
    if (!incumbent_.admits_box(node.columns)) {
      ++counters_.rejections;
      record(node.box, BoxDecision::Reject);
      return {};
    }
    ++counters_.step1_passes;
    const MultiIndex& sub = node.box.sub_scale();
    const std::size_t j = sub.argmax();
    if (sub[j] > 0) {
      record(node.box, BoxDecision::Split);
      counters_.boxes_created += 2;
      auto [left_box, right_box] = node.box.children(j);
      Node left{std::move(left_box), {}};
      Node right{std::move(right_box), {}};
      for (const auto& w : node.columns) {
        left.columns.push_back(apply_half(basis_, w, j, Side::Left));
        right.columns.push_back(apply_half(basis_, w, j, Side::Right));
      }
      std::vector<Node> out;
      out.reserve(2);
      if (options_.traversal == Traversal::LeftFirst) {
        out.push_back(std::move(left));
        out.push_back(std::move(right));
      } else {
        out.push_back(std::move(right));
        out.push_back(std::move(left));
      }
      return out;
    }
    ++counters_.leaf_tests;
    record(node.box, leaf(node) ? BoxDecision::LeafAccept : BoxDecision::LeafReject);
    return {};
  }

  void run(Node root) {
    std::vector<Node> stack;
    stack.push_back(std::move(root));
    while (!stack.empty()) {
      Node node = std::move(stack.back());
      stack.pop_back();
      auto children = expand(std::move(node));
      for (auto it = children.rbegin(); it != children.rend(); ++it) stack.push_back(std::move(*it));
    }
  }

  const SolverCounters& counters() const { return counters_; }
  std::vector<Candidate>& candidates() { return candidates_; }

 private:
  // At a unit box the first coefficient of each column is q_i at the lower corner.
  bool leaf(const Node& node) {
    for (std::size_t i = 1; i < node.columns.size(); ++i) {
      if (node.columns[i].front().sign() < 0) return false;
    }
    IntVector corner = node.box.lower_corner();
    if (upper_) {
      for (std::size_t i = 0; i < corner.size(); ++i) {
        if (corner[i] > (*upper_)[i]) return false;
      }
    }
    const Rational value = node.columns.empty() ? Rational(0) : node.columns.front().front();
    if (!incumbent_.offer(value)) return false;
    if (!candidates_.empty() && value > candidates_.back().value) candidates_.clear();
    candidates_.push_back({std::move(corner), value});
    return true;
  }

  void record(const LatticeBox& box, BoxDecision decision) {
    if (!options_.trace) return;
    TraceRecord rec{box.offset(), box.sub_scale(), decision};
    if (trace_mu_) {
      std::lock_guard lock(*trace_mu_);
      options_.trace(rec);
    } else {
      options_.trace(rec);
    }
  }

  const SubdivisionBasis& basis_;
  const IntVector* upper_;
  const SolverOptions& options_;
  IncumbentCell& incumbent_;
  std::mutex* trace_mu_;
  SolverCounters counters_;
  std::vector<Candidate> candidates_;
};

void accumulate(SolverCounters& into, const SolverCounters& from) {
  into.boxes_created += from.boxes_created;
  into.step1_passes += from.step1_passes;
  into.leaf_tests += from.leaf_tests;
  into.rejections += from.rejections;
}

SolveOutcome search(const IntVector& anchor, const MultiIndex& scale, const SystemMatrix& v,
                    const IntVector* upper, const SolverOptions& options) {
  if (anchor.size() != scale.size() || v.degree.nvars() != scale.size()) {
    throw Error(ErrorKind::InvalidArgument, "system, anchor and scale disagree on dimension");
  }
  const SubdivisionBasis basis = build_basis(v.degree);
  Node root{LatticeBox::root(anchor, scale), {}};
  for (const auto& column : v.columns) {
    if (!(column.degree() == v.degree)) {
      throw Error(ErrorKind::DegreeMismatch, "system columns must share one degree");
    }
    root.columns.push_back(column.coeffs());
  }

  IncumbentCell incumbent;
  SolverCounters counters;
  counters.boxes_created = 1;
  std::vector<Candidate> candidates;

  if (options.threads <= 1) {
    Search s(basis, upper, options, incumbent, nullptr);
    s.run(std::move(root));
    accumulate(counters, s.counters());
    candidates = std::move(s.candidates());
  } else {
    std::mutex trace_mu;
    // Breadth-first until there is enough independent work to share.
    Search seed(basis, upper, options, incumbent, &trace_mu);
    std::vector<Node> frontier;
    frontier.push_back(std::move(root));
    const std::size_t target = 8 * static_cast<std::size_t>(options.threads);
    while (!frontier.empty() && frontier.size() < target) {
      std::vector<Node> next;
      bool any_split = false;
      for (auto& node : frontier) {
        auto children = seed.expand(std::move(node));
        any_split = any_split || !children.empty();
        for (auto& c : children) next.push_back(std::move(c));
      }
      frontier = std::move(next);
      if (!any_split) break;
    }
    accumulate(counters, seed.counters());
    candidates = std::move(seed.candidates());

    std::atomic<std::size_t> next_task{0};
    std::vector<std::unique_ptr<Search>> workers;
    for (unsigned t = 0; t < options.threads; ++t) {
      workers.push_back(std::make_unique<Search>(basis, upper, options, incumbent, &trace_mu));
    }
    std::vector<std::thread> pool;
    for (auto& worker : workers) {
      pool.emplace_back([&, w = worker.get()] {
        for (std::size_t i = next_task++; i < frontier.size(); i = next_task++) {
          w->run(std::move(frontier[i]));
        }
      });
    }
    for (auto& t : pool) t.join();
    for (auto& worker : workers) {
      accumulate(counters, worker->counters());
      auto& local = worker->candidates();
      candidates.insert(candidates.end(), std::make_move_iterator(local.begin()),
                        std::make_move_iterator(local.end()));
    }
  }

  SolveOutcome out;
  out.counters = counters;
  out.internal_theta = incumbent.get();
  if (out.internal_theta.is_finite()) {
    for (auto& c : candidates) {
      if (c.value == out.internal_theta.value()) out.solutions.insert(std::move(c.point));
    }
    out.status = SolveStatus::Optimal;
    out.theta = out.internal_theta.value();
  }
  if ((out.status == SolveStatus::Optimal) == out.solutions.empty()) {
    throw Error(ErrorKind::Internal, "incumbent and solution set disagree");
  }
  return out;
}

void verify(const CanonicalProblem& cp, const SolveOutcome& out) {
  for (const IntVector& z : out.solutions) {
    for (std::size_t i = 0; i < z.size(); ++i) {
      if (z[i] < cp.anchor[i] || z[i] > cp.user_upper[i]) {
        throw Error(ErrorKind::Internal, "solution outside the user box");
      }
    }
    if (cp.q.front().evaluate(z) != out.internal_theta.value()) {
      throw Error(ErrorKind::Internal, "solution does not attain the optimum");
    }
    for (std::size_t i = 1; i < cp.q.size(); ++i) {
      if (cp.q[i].evaluate(z).sign() < 0) {
        throw Error(ErrorKind::Internal, "solution violates " + cp.origins[i]);
      }
    }
  }
}

}  // namespace

SolveOutcome solve(const CanonicalProblem& cp, const MultiDegree& d, const SolverOptions& options) {
  const SystemMatrix v = initial_system(cp, d);
  const IntVector* upper = cp.mode == BoxMode::Padded ? &cp.user_upper : nullptr;
  SolveOutcome out = search(cp.anchor, cp.scale, v, upper, options);
  verify(cp, out);
  if (out.theta) out.theta = cp.transform.to_user(*out.theta);
  return out;
}

SolveOutcome solve(const CanonicalProblem& cp, const SolverOptions& options) {
  return solve(cp, default_degree(cp), options);
}

SolveOutcome solve_raw(const IntVector& anchor, const MultiIndex& scale, const SystemMatrix& v,
                       const SolverOptions& options) {
  return search(anchor, scale, v, nullptr, options);
}

}  // namespace bpsolve
