/* SPDX-License-Identifier: Apache-2.0 */

#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "bpsolve/bernstein.hpp"
#include "bpsolve/lattice_box.hpp"
#include "bpsolve/monomial.hpp"

namespace bpsolve {

enum class Direction { Maximize, Minimize, None };
enum class Relation { Le, Ge, Lt, Gt, Eq };

const char* to_string(Relation rel);

struct UserConstraint {
  MonomialPoly lhs;
  Relation relation;
  MonomialPoly rhs;
};

struct VariableBound {
  Integer lo;
  Integer hi;
};

/// Optimization problem as written by a user: rational coefficients, any
/// relation, closed integer bounds per variable.
struct UserProblem {
  std::vector<std::string> names;
  Direction direction = Direction::None;
  MonomialPoly objective;
  std::vector<UserConstraint> constraints;
  std::vector<VariableBound> bounds;

  std::size_t nvars() const { return names.size(); }
};

/// Maps the internal objective value back to the user's scale:
/// user = sign * internal / scale + shift.
struct ObjectiveTransform {
  int sign = 1;
  Integer scale = 1;
  Rational shift;

  Rational to_user(const Rational& internal) const;
};

enum class BoxMode {
  /// Bounds padded to power-of-two sides; leaves above the user's upper
  /// bound are filtered out by the solver.
  Padded,
  /// Bounds must already be [a, a + 2^k]; no padding, no filtering.
  Raw,
};

/// Normal form: maximize q[0] subject to q[i] >= 0 (i >= 1) over the lattice
/// points of prod [a_i, a_i + 2^{k_i}], all coefficients integral.
struct CanonicalProblem {
  std::vector<std::string> names;
  std::vector<MonomialPoly> q;
  /// Human-readable provenance of each q[i], used in diagnostics.
  std::vector<std::string> origins;
  IntVector anchor;
  MultiIndex scale;
  IntVector user_upper;
  ObjectiveTransform transform;
  BoxMode mode = BoxMode::Padded;

  std::size_t nvars() const { return anchor.size(); }
  std::int64_t total_exponent() const { return scale.total(); }
  LatticeBox root_box() const;
};

CanonicalProblem canonicalize(const UserProblem& up, BoxMode mode = BoxMode::Padded,
                              std::int64_t max_exponent = kDefaultMaxBoxExponent);

/// Componentwise maximum multidegree over all q[i].
MultiDegree default_degree(const CanonicalProblem& cp);

/// Bernstein forms of every q[i] pulled back to the unit box, one column each.
struct SystemMatrix {
  MultiDegree degree;
  std::vector<BernsteinForm> columns;

  std::size_t rows() const { return degree.basis_size(); }
  std::size_t cols() const { return columns.size(); }
};

/// Error(DegreeOverflow) names the offending polynomial when some q[i] does
/// not fit in `d`.
SystemMatrix initial_system(const CanonicalProblem& cp, const MultiDegree& d);

/// Same pull-back for explicit polynomials over prod [a_i, a_i + 2^{k_i}].
SystemMatrix system_over_box(const std::vector<MonomialPoly>& q, const IntVector& anchor,
                             const MultiIndex& scale, const MultiDegree& d);

}  // namespace bpsolve
