/* SPDX-License-Identifier: Apache-2.0 */

#include "bpsolve/problem.hpp"

#include "bpsolve/error.hpp"

namespace bpsolve {

const char* to_string(Relation rel) {
  switch (rel) {
    case Relation::Le: return "<=";
    case Relation::Ge: return ">=";
    case Relation::Lt: return "<";
    case Relation::Gt: return ">";
    case Relation::Eq: return "==";
  }
  return "?";
}

Rational ObjectiveTransform::to_user(const Rational& internal) const {
  Rational v = internal / Rational(scale);
  if (sign < 0) v = -v;
  return v + shift;
}

LatticeBox CanonicalProblem::root_box() const { return LatticeBox::root(anchor, scale); }

namespace {

MonomialPoly clear_denominators(const MonomialPoly& p) {
  return p * Rational(p.denominator_lcm());
}

std::int64_t exponent_for(const VariableBound& b, BoxMode mode, const std::string& name) {
  if (mode == BoxMode::Padded) {
    return static_cast<std::int64_t>(ceil_log2(b.hi - b.lo + 1));
  }
  const Integer width = b.hi - b.lo;
  if (width <= 0 || mpz_popcount(width.get_mpz_t()) != 1) {
    throw Error(ErrorKind::InvalidArgument,
                "raw box requires bound of " + name + " to have the form [a, a+2^k], got [" +
                    b.lo.get_str() + ", " + b.hi.get_str() + "]");
  }
  return static_cast<std::int64_t>(mpz_sizeinbase(width.get_mpz_t(), 2) - 1);
}

}  // namespace

CanonicalProblem canonicalize(const UserProblem& up, BoxMode mode, std::int64_t max_exponent) {
  const std::size_t n = up.nvars();
  if (n == 0) throw Error(ErrorKind::InvalidArgument, "problem declares no variables");
  if (up.bounds.size() != n) {
    const std::string& name = up.names[std::min(up.bounds.size(), n - 1)];
    throw Error(ErrorKind::Unbounded, "variable " + name + " has no bound");
  }

  CanonicalProblem cp;
  cp.names = up.names;
  cp.mode = mode;

  MonomialPoly objective(n);
  if (up.direction != Direction::None) {
    if (up.objective.nvars() != n) {
      throw Error(ErrorKind::InvalidArgument, "objective variable count mismatch");
    }
    const Integer lcm = up.objective.denominator_lcm();
    objective = up.objective * Rational(lcm);
    cp.transform.scale = lcm;
    if (up.direction == Direction::Minimize) {
      objective = -objective;
      cp.transform.sign = -1;
    }
  }
  cp.q.push_back(std::move(objective));
  cp.origins.push_back("objective");

  for (std::size_t i = 0; i < up.constraints.size(); ++i) {
    const UserConstraint& c = up.constraints[i];
    if (c.lhs.nvars() != n || c.rhs.nvars() != n) {
      throw Error(ErrorKind::InvalidArgument, "constraint variable count mismatch");
    }
    const std::string label = "constraint " + std::to_string(i + 1) + " (" + c.lhs.str(up.names) +
                              " " + to_string(c.relation) + " " + c.rhs.str(up.names) + ")";
    const MonomialPoly one = MonomialPoly::constant(n, Rational(1));
    switch (c.relation) {
      case Relation::Ge:
        cp.q.push_back(clear_denominators(c.lhs - c.rhs));
        cp.origins.push_back(label);
        break;
      case Relation::Le:
        cp.q.push_back(clear_denominators(c.rhs - c.lhs));
        cp.origins.push_back(label);
        break;
      case Relation::Gt:
        cp.q.push_back(clear_denominators(c.lhs - c.rhs) - one);
        cp.origins.push_back(label);
        break;
      case Relation::Lt:
        cp.q.push_back(clear_denominators(c.rhs - c.lhs) - one);
        cp.origins.push_back(label);
        break;
      case Relation::Eq: {
        MonomialPoly p = clear_denominators(c.lhs - c.rhs);
        cp.q.push_back(-p);
        cp.q.push_back(std::move(p));
        cp.origins.push_back(label + " [upper half]");
        cp.origins.push_back(label + " [lower half]");
        break;
      }
    }
  }

  std::vector<std::int64_t> scale(n);
  for (std::size_t i = 0; i < n; ++i) {
    const VariableBound& b = up.bounds[i];
    if (b.lo > b.hi) {
      throw Error(ErrorKind::InvalidArgument, "empty bound for " + up.names[i]);
    }
    scale[i] = exponent_for(b, mode, up.names[i]);
    if (scale[i] > max_exponent) {
      throw Error(ErrorKind::CapExceeded, "bound of " + up.names[i] + " needs 2^" +
                                              std::to_string(scale[i]) + " > 2^" +
                                              std::to_string(max_exponent));
    }
    cp.anchor.push_back(b.lo);
    cp.user_upper.push_back(b.hi);
  }
  cp.scale = MultiIndex(std::move(scale));
  return cp;
}

MultiDegree default_degree(const CanonicalProblem& cp) {
  MultiIndex d(cp.nvars());
  for (const auto& q : cp.q) d = componentwise_max(d, q.multidegree());
  return MultiDegree(d);
}

SystemMatrix system_over_box(const std::vector<MonomialPoly>& q, const IntVector& anchor,
                             const MultiIndex& scale, const MultiDegree& d) {
  std::vector<std::string> origins;
  for (std::size_t i = 0; i < q.size(); ++i) origins.push_back("q" + std::to_string(i + 1));
  CanonicalProblem cp;
  cp.q = q;
  cp.origins = std::move(origins);
  cp.anchor = anchor;
  cp.scale = scale;
  cp.user_upper = anchor;
  cp.mode = BoxMode::Raw;
  return initial_system(cp, d);
}

SystemMatrix initial_system(const CanonicalProblem& cp, const MultiDegree& d) {
  const std::size_t n = cp.nvars();
  if (d.nvars() != n || cp.scale.size() != n) {
    throw Error(ErrorKind::InvalidArgument, "degree has wrong number of variables");
  }
  RationalVector offset(cp.anchor.begin(), cp.anchor.end());
  RationalVector stretch;
  for (std::size_t i = 0; i < n; ++i) {
    stretch.emplace_back(pow2(static_cast<unsigned long>(cp.scale[i])));
  }
  SystemMatrix v{d, {}};
  for (std::size_t i = 0; i < cp.q.size(); ++i) {
    if (!componentwise_le(cp.q[i].multidegree(), d.degree())) {
      const std::string who = i < cp.origins.size() ? cp.origins[i] : "q" + std::to_string(i + 1);
      throw Error(ErrorKind::DegreeOverflow, who + " has multidegree " +
                                                 cp.q[i].multidegree().str() + " above " +
                                                 d.degree().str());
    }
    v.columns.push_back(to_bernstein(cp.q[i].pull_back(offset, stretch), d));
  }
  return v;
}

}  // namespace bpsolve
