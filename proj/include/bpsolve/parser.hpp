/* SPDX-License-Identifier: Apache-2.0 */

#pragma once

#include <cstddef>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "bpsolve/problem.hpp"

namespace bpsolve {

struct SourcePos {
  std::size_t line = 0;
  std::size_t column = 0;
};

struct Expr;
using ExprPtr = std::shared_ptr<const Expr>;

/// Expression tree node. Number literals are non-negative; negation is an
/// explicit node. Division only appears with a numeric divisor.
struct Expr {
  enum class Kind { Number, Variable, Neg, Add, Sub, Mul, Div, Pow };

  Kind kind = Kind::Number;
  Rational number;
  std::size_t variable = 0;
  unsigned exponent = 0;
  ExprPtr lhs;
  ExprPtr rhs;
  SourcePos pos;
};

/// Structural equality, ignoring source positions.
bool same_tree(const Expr& a, const Expr& b);

struct BoundClause {
  std::size_t variable = 0;
  Integer lo;
  Integer hi;
  SourcePos pos;
};

struct ObjectiveClause {
  Direction direction = Direction::Maximize;
  ExprPtr expr;
  SourcePos pos;
};

struct ConstraintClause {
  ExprPtr lhs;
  Relation relation = Relation::Ge;
  ExprPtr rhs;
  SourcePos pos;
};

struct ProblemAst {
  std::vector<std::string> variables;
  /// Ordered as written.
  std::vector<BoundClause> bounds;
  std::optional<ObjectiveClause> objective;
  std::vector<ConstraintClause> constraints;
};

/// Structural equality, ignoring source positions.
bool same_ast(const ProblemAst& a, const ProblemAst& b);

/// Parses the problem-file format:
///
///   vars: x y
///   bound: x in [0, 8]
///   bound: y in [0, 8]
///   maximize: x + y          (or minimize:, optional)
///   subject to:
///     y - x^2 == 0
///
/// '#' starts a comment. Relations are ==, <=, >=, <, >. Throws ParseError
/// with the 1-based line and column of the first problem found.
ProblemAst parse_problem(std::string_view text);

/// Parses one expression over `variables`; used by tests and tools.
ExprPtr parse_expression(std::string_view text, const std::vector<std::string>& variables);

/// Canonical text form; parse_problem(print_problem(a)) is the same AST.
std::string print_problem(const ProblemAst& ast);
std::string print_expr(const Expr& e, const std::vector<std::string>& variables);

MonomialPoly to_polynomial(const Expr& e, std::size_t nvars);

UserProblem to_user_problem(const ProblemAst& ast);

}  // namespace bpsolve
