/* SPDX-License-Identifier: Apache-2.0 */

#include "bpsolve/parser.hpp"

#include <cctype>
#include <map>

#include "bpsolve/error.hpp"

namespace bpsolve {
namespace {

constexpr unsigned kMaxExponent = 1000;

enum class Tok { Ident, Number, Symbol, End };

struct Token {
  Tok kind;
  std::string text;
  std::size_t column;
};

std::vector<Token> lex_line(std::string_view line, std::size_t line_no) {
  std::vector<Token> out;
  std::size_t i = 0;
  while (i < line.size()) {
    const char c = line[i];
    if (c == '#') break;
    if (std::isspace(static_cast<unsigned char>(c))) {
      ++i;
      continue;
    }
    const std::size_t col = i + 1;
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      std::size_t j = i;
      while (j < line.size() &&
             (std::isalnum(static_cast<unsigned char>(line[j])) || line[j] == '_')) {
        ++j;
      }
      out.push_back({Tok::Ident, std::string(line.substr(i, j - i)), col});
      i = j;
    } else if (std::isdigit(static_cast<unsigned char>(c))) {
      std::size_t j = i;
      while (j < line.size() && std::isdigit(static_cast<unsigned char>(line[j]))) ++j;
      if (j < line.size() && line[j] == '.') {
        ++j;
        if (j >= line.size() || !std::isdigit(static_cast<unsigned char>(line[j]))) {
          throw ParseError(line_no, j + 1, "expected digits after decimal point");
        }
        while (j < line.size() && std::isdigit(static_cast<unsigned char>(line[j]))) ++j;
      }
      out.push_back({Tok::Number, std::string(line.substr(i, j - i)), col});
      i = j;
    } else {
      const std::string_view two = line.substr(i, 2);
      if (two == "==" || two == "<=" || two == ">=") {
        out.push_back({Tok::Symbol, std::string(two), col});
        i += 2;
      } else if (std::string_view("+-*/^()[],:<>").find(c) != std::string_view::npos) {
        out.push_back({Tok::Symbol, std::string(1, c), col});
        ++i;
      } else if (c == '=') {
        throw ParseError(line_no, col, "single '=' is not a relation; use '=='");
      } else {
        throw ParseError(line_no, col, std::string("unexpected character '") + c + "'");
      }
    }
  }
  out.push_back({Tok::End, "", line.size() + 1});
  return out;
}

std::shared_ptr<Expr> make_node(Expr::Kind kind, SourcePos pos, ExprPtr lhs = nullptr, ExprPtr rhs = nullptr) {
  auto e = std::make_shared<Expr>();
  e->kind = kind;
  e->pos = pos;
  e->lhs = std::move(lhs);
  e->rhs = std::move(rhs);
  return e;
}

class LineParser {
 public:
  LineParser(std::vector<Token> tokens, std::size_t line_no,
             const std::vector<std::string>& variables)
      : toks_(std::move(tokens)), line_(line_no), vars_(variables) {}

  const Token& peek() const { return toks_[pos_]; }
  bool at_end() const { return peek().kind == Tok::End; }

  bool accept_symbol(std::string_view s) {
    if (peek().kind == Tok::Symbol && peek().text == s) {
      ++pos_;
      return true;
    }
    return false;
  }

  void expect_symbol(std::string_view s) {
    if (!accept_symbol(s)) fail("expected '" + std::string(s) + "'");
  }

  std::string expect_ident() {
    if (peek().kind != Tok::Ident) fail("expected identifier");
    return toks_[pos_++].text;
  }

  void expect_keyword(std::string_view kw) {
    if (peek().kind != Tok::Ident || peek().text != kw) fail("expected '" + std::string(kw) + "'");
    ++pos_;
  }

  Integer expect_integer() {
    const bool negative = accept_symbol("-");
    if (!negative) accept_symbol("+");
    if (peek().kind != Tok::Number || peek().text.find('.') != std::string::npos) {
      fail("expected integer");
    }
    Integer v(toks_[pos_++].text, 10);
    return negative ? Integer(-v) : v;
  }

  void expect_end() {
    if (!at_end()) fail("unexpected '" + peek().text + "'");
  }

  [[noreturn]] void fail(const std::string& message) const {
    throw ParseError(line_, peek().column, message);
  }

  SourcePos here() const { return {line_, peek().column}; }

  // expr := ['+'|'-'] term (('+'|'-') term)*
  ExprPtr expression() {
    const SourcePos start = here();
    ExprPtr e;
    if (accept_symbol("-")) {
      e = make_node(Expr::Kind::Neg, start, term());
    } else {
      accept_symbol("+");
      e = term();
    }
    while (true) {
      const SourcePos at = here();
      if (accept_symbol("+")) {
        e = make_node(Expr::Kind::Add, at, e, term());
      } else if (accept_symbol("-")) {
        e = make_node(Expr::Kind::Sub, at, e, term());
      } else {
        return e;
      }
    }
  }

  // term := power (('*' | '/') power)*
  ExprPtr term() {
    ExprPtr e = power();
    while (true) {
      const SourcePos at = here();
      if (accept_symbol("*")) {
        e = make_node(Expr::Kind::Mul, at, e, power());
      } else if (accept_symbol("/")) {
        const SourcePos divisor_pos = here();
        ExprPtr d = power();
        if (d->kind != Expr::Kind::Number) {
          throw ParseError(divisor_pos.line, divisor_pos.column, "divisor must be a number");
        }
        if (d->number.is_zero()) {
          throw ParseError(divisor_pos.line, divisor_pos.column, "division by zero");
        }
        if (e->kind == Expr::Kind::Number) {
          // p/q literal
          auto folded = make_node(Expr::Kind::Number, e->pos);
          folded->number = e->number / d->number;
          e = folded;
        } else {
          e = make_node(Expr::Kind::Div, at, e, d);
        }
      } else {
        return e;
      }
    }
  }

  // power := atom ['^' integer]
  ExprPtr power() {
    ExprPtr base = atom();
    const SourcePos at = here();
    if (!accept_symbol("^")) return base;
    if (peek().kind != Tok::Number || peek().text.find('.') != std::string::npos) {
      fail("exponent must be a non-negative integer");
    }
    const Integer v(toks_[pos_].text, 10);
    if (v > kMaxExponent) fail("exponent above " + std::to_string(kMaxExponent));
    ++pos_;
    auto e = make_node(Expr::Kind::Pow, at, base);
    e->exponent = static_cast<unsigned>(v.get_ui());
    if (peek().kind == Tok::Symbol && peek().text == "^") {
      fail("chained exponents need parentheses");
    }
    return e;
  }

  // atom := ident | number | '(' expr ')'
  ExprPtr atom() {
    const SourcePos at = here();
    const Token& t = peek();
    if (t.kind == Tok::Number) {
      auto e = make_node(Expr::Kind::Number, at);
      e->number = Rational::parse(t.text);
      ++pos_;
      return e;
    }
    if (t.kind == Tok::Ident) {
      for (std::size_t i = 0; i < vars_.size(); ++i) {
        if (vars_[i] == t.text) {
          auto e = make_node(Expr::Kind::Variable, at);
          e->variable = i;
          ++pos_;
          return e;
        }
      }
      fail("undeclared variable '" + t.text + "'");
    }
    if (accept_symbol("(")) {
      ExprPtr e = expression();
      expect_symbol(")");
      return e;
    }
    if (t.kind == Tok::End) fail("unexpected end of line");
    fail("unexpected '" + t.text + "'");
  }

  std::optional<Relation> relation() {
    static const std::map<std::string, Relation> rels = {
        {"==", Relation::Eq}, {"<=", Relation::Le}, {">=", Relation::Ge},
        {"<", Relation::Lt},  {">", Relation::Gt}};
    if (peek().kind != Tok::Symbol) return std::nullopt;
    auto it = rels.find(peek().text);
    if (it == rels.end()) return std::nullopt;
    ++pos_;
    return it->second;
  }

 private:
  std::vector<Token> toks_;
  std::size_t pos_ = 0;
  std::size_t line_;
  const std::vector<std::string>& vars_;
};

enum class Header { None, Vars, Bound, Maximize, Minimize, SubjectTo };

bool is_symbol(const Token& t, std::string_view s) { return t.kind == Tok::Symbol && t.text == s; }
bool is_ident(const Token& t, std::string_view s) { return t.kind == Tok::Ident && t.text == s; }

// Recognizes a clause keyword and returns the number of tokens it spans.
std::pair<Header, std::size_t> classify(const std::vector<Token>& toks) {
  if (toks.size() >= 3 && is_symbol(toks[1], ":")) {
    if (is_ident(toks[0], "vars")) return {Header::Vars, 2};
    if (is_ident(toks[0], "bound")) return {Header::Bound, 2};
    if (is_ident(toks[0], "maximize")) return {Header::Maximize, 2};
    if (is_ident(toks[0], "minimize")) return {Header::Minimize, 2};
  }
  if (toks.size() >= 4 && is_ident(toks[0], "subject") && is_ident(toks[1], "to") &&
      is_symbol(toks[2], ":")) {
    return {Header::SubjectTo, 3};
  }
  return {Header::None, 0};
}

ConstraintClause parse_constraint(LineParser& p, SourcePos pos) {
  ConstraintClause c;
  c.pos = pos;
  c.lhs = p.expression();
  auto rel = p.relation();
  if (!rel) p.fail("expected relation (==, <=, >=, <, >)");
  c.relation = *rel;
  c.rhs = p.expression();
  p.expect_end();
  return c;
}

}  // namespace

bool same_tree(const Expr& a, const Expr& b) {
  if (a.kind != b.kind) return false;
  switch (a.kind) {
    case Expr::Kind::Number: return a.number == b.number;
    case Expr::Kind::Variable: return a.variable == b.variable;
    case Expr::Kind::Neg: return same_tree(*a.lhs, *b.lhs);
    case Expr::Kind::Pow: return a.exponent == b.exponent && same_tree(*a.lhs, *b.lhs);
    default: return same_tree(*a.lhs, *b.lhs) && same_tree(*a.rhs, *b.rhs);
  }
}

bool same_ast(const ProblemAst& a, const ProblemAst& b) {
  if (a.variables != b.variables || a.bounds.size() != b.bounds.size() ||
      a.constraints.size() != b.constraints.size() ||
      a.objective.has_value() != b.objective.has_value()) {
    return false;
  }
  for (std::size_t i = 0; i < a.bounds.size(); ++i) {
    if (a.bounds[i].variable != b.bounds[i].variable || a.bounds[i].lo != b.bounds[i].lo ||
        a.bounds[i].hi != b.bounds[i].hi) {
      return false;
    }
  }
  if (a.objective && (a.objective->direction != b.objective->direction ||
                      !same_tree(*a.objective->expr, *b.objective->expr))) {
    return false;
  }
  for (std::size_t i = 0; i < a.constraints.size(); ++i) {
    const auto& x = a.constraints[i];
    const auto& y = b.constraints[i];
    if (x.relation != y.relation || !same_tree(*x.lhs, *y.lhs) || !same_tree(*x.rhs, *y.rhs)) {
      return false;
    }
  }
  return true;
}

ProblemAst parse_problem(std::string_view text) {
  enum class Stage { Start, Bounds, Objective, Constraints };
  ProblemAst ast;
  Stage stage = Stage::Start;
  std::vector<bool> bounded;
  std::size_t line_no = 0;
  SourcePos last_pos{1, 1};

  std::size_t begin = 0;
  while (begin <= text.size()) {
    std::size_t end = text.find('\n', begin);
    if (end == std::string_view::npos) end = text.size();
    std::string_view line = text.substr(begin, end - begin);
    if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
    begin = end + 1;
    ++line_no;

    std::vector<Token> toks = lex_line(line, line_no);
    if (toks.size() == 1) {
      if (end == text.size()) break;
      continue;
    }
    last_pos = {line_no, toks.front().column};
    auto [header, skip] = classify(toks);
    const SourcePos clause_pos{line_no, toks.front().column};
    LineParser p(std::move(toks), line_no, ast.variables);
    for (std::size_t i = 0; i < skip; ++i) {
      if (!p.accept_symbol(":")) p.expect_ident();
    }

    switch (header) {
      case Header::Vars: {
        if (stage != Stage::Start) p.fail("'vars:' must be the first clause and appear once");
        while (!p.at_end()) {
          const SourcePos at = p.here();
          std::string name = p.expect_ident();
          for (const auto& v : ast.variables) {
            if (v == name) throw ParseError(at.line, at.column, "variable '" + name + "' declared twice");
          }
          if (name == "in" || name == "vars" || name == "bound" || name == "maximize" ||
              name == "minimize" || name == "subject" || name == "to") {
            throw ParseError(at.line, at.column, "'" + name + "' is a reserved word");
          }
          ast.variables.push_back(std::move(name));
        }
        if (ast.variables.empty()) p.fail("'vars:' needs at least one variable");
        bounded.assign(ast.variables.size(), false);
        stage = Stage::Bounds;
        break;
      }
      case Header::Bound: {
        if (stage != Stage::Bounds) {
          p.fail(stage == Stage::Start ? "expected 'vars:' first" : "bounds must precede the objective and constraints");
        }
        BoundClause b;
        b.pos = clause_pos;
        const SourcePos name_pos = p.here();
        const std::string name = p.expect_ident();
        std::size_t idx = ast.variables.size();
        for (std::size_t i = 0; i < ast.variables.size(); ++i) {
          if (ast.variables[i] == name) idx = i;
        }
        if (idx == ast.variables.size()) {
          throw ParseError(name_pos.line, name_pos.column, "bound for undeclared variable '" + name + "'");
        }
        if (bounded[idx]) {
          throw ParseError(name_pos.line, name_pos.column, "variable '" + name + "' bounded twice");
        }
        p.expect_keyword("in");
        p.expect_symbol("[");
        b.lo = p.expect_integer();
        p.expect_symbol(",");
        const SourcePos hi_pos = p.here();
        b.hi = p.expect_integer();
        p.expect_symbol("]");
        p.expect_end();
        if (b.lo > b.hi) throw ParseError(hi_pos.line, hi_pos.column, "empty interval for '" + name + "'");
        b.variable = idx;
        bounded[idx] = true;
        ast.bounds.push_back(std::move(b));
        break;
      }
      case Header::Maximize:
      case Header::Minimize: {
        if (stage == Stage::Start) p.fail("expected 'vars:' first");
        if (stage == Stage::Objective) p.fail("only one objective is allowed");
        if (stage == Stage::Constraints) p.fail("the objective must precede 'subject to:'");
        stage = Stage::Objective;
        ObjectiveClause o;
        o.pos = clause_pos;
        o.direction = header == Header::Maximize ? Direction::Maximize : Direction::Minimize;
        o.expr = p.expression();
        if (p.relation()) p.fail("objectives take no relation");
        p.expect_end();
        ast.objective = std::move(o);
        break;
      }
      case Header::SubjectTo: {
        if (stage == Stage::Start) p.fail("expected 'vars:' first");
        if (stage == Stage::Constraints) p.fail("'subject to:' appears twice");
        for (std::size_t i = 0; i < bounded.size(); ++i) {
          if (!bounded[i]) {
            throw ParseError(clause_pos.line, clause_pos.column,
                             "variable '" + ast.variables[i] + "' has no bound");
          }
        }
        stage = Stage::Constraints;
        if (!p.at_end()) ast.constraints.push_back(parse_constraint(p, p.here()));
        break;
      }
      case Header::None: {
        if (stage != Stage::Constraints) {
          p.fail(stage == Stage::Start ? "expected 'vars:'" : "expected a clause keyword or 'subject to:'");
        }
        ast.constraints.push_back(parse_constraint(p, clause_pos));
        break;
      }
    }
    if (end == text.size()) break;
  }

  if (stage != Stage::Constraints) {
    throw ParseError(line_no, 1, stage == Stage::Start ? "missing 'vars:'" : "missing 'subject to:'");
  }
  if (ast.constraints.empty()) throw ParseError(line_no, 1, "at least one constraint is required");
  return ast;
}

ExprPtr parse_expression(std::string_view text, const std::vector<std::string>& variables) {
  LineParser p(lex_line(text, 1), 1, variables);
  ExprPtr e = p.expression();
  p.expect_end();
  return e;
}

std::string print_expr(const Expr& e, const std::vector<std::string>& variables) {
  switch (e.kind) {
    case Expr::Kind::Number:
      return e.number.is_integer() && e.number.sign() >= 0 ? e.number.str() : "(" + e.number.str() + ")";
    case Expr::Kind::Variable: return variables.at(e.variable);
    case Expr::Kind::Neg: return "(-" + print_expr(*e.lhs, variables) + ")";
    case Expr::Kind::Pow: {
      std::string base = print_expr(*e.lhs, variables);
      if (e.lhs->kind == Expr::Kind::Pow) base = "(" + base + ")";
      return base + "^" + std::to_string(e.exponent);
    }
    case Expr::Kind::Add: return "(" + print_expr(*e.lhs, variables) + " + " + print_expr(*e.rhs, variables) + ")";
    case Expr::Kind::Sub: return "(" + print_expr(*e.lhs, variables) + " - " + print_expr(*e.rhs, variables) + ")";
    case Expr::Kind::Mul: return "(" + print_expr(*e.lhs, variables) + " * " + print_expr(*e.rhs, variables) + ")";
    case Expr::Kind::Div: return "(" + print_expr(*e.lhs, variables) + " / " + print_expr(*e.rhs, variables) + ")";
  }
  return "";
}

std::string print_problem(const ProblemAst& ast) {
  std::string out = "vars:";
  for (const auto& v : ast.variables) out += " " + v;
  out += "\n";
  for (const auto& b : ast.bounds) {
    out += "bound: " + ast.variables[b.variable] + " in [" + b.lo.get_str() + ", " + b.hi.get_str() + "]\n";
  }
  if (ast.objective) {
    out += ast.objective->direction == Direction::Maximize ? "maximize: " : "minimize: ";
    out += print_expr(*ast.objective->expr, ast.variables) + "\n";
  }
  out += "subject to:\n";
  for (const auto& c : ast.constraints) {
    out += "  " + print_expr(*c.lhs, ast.variables) + " " + to_string(c.relation) + " " +
           print_expr(*c.rhs, ast.variables) + "\n";
  }
  return out;
}

MonomialPoly to_polynomial(const Expr& e, std::size_t nvars) {
  switch (e.kind) {
    case Expr::Kind::Number: return MonomialPoly::constant(nvars, e.number);
    case Expr::Kind::Variable: return MonomialPoly::variable(nvars, e.variable);
    case Expr::Kind::Neg: return -to_polynomial(*e.lhs, nvars);
    case Expr::Kind::Pow: return to_polynomial(*e.lhs, nvars).pow(e.exponent);
    case Expr::Kind::Add: return to_polynomial(*e.lhs, nvars) + to_polynomial(*e.rhs, nvars);
    case Expr::Kind::Sub: return to_polynomial(*e.lhs, nvars) - to_polynomial(*e.rhs, nvars);
    case Expr::Kind::Mul: return to_polynomial(*e.lhs, nvars) * to_polynomial(*e.rhs, nvars);
    case Expr::Kind::Div: return to_polynomial(*e.lhs, nvars) * e.rhs->number.inverse();
  }
  throw Error(ErrorKind::Internal, "unknown expression node");
}

UserProblem to_user_problem(const ProblemAst& ast) {
  const std::size_t n = ast.variables.size();
  UserProblem up;
  up.names = ast.variables;
  up.objective = MonomialPoly(n);
  if (ast.objective) {
    up.direction = ast.objective->direction;
    up.objective = to_polynomial(*ast.objective->expr, n);
  }
  for (const auto& c : ast.constraints) {
    up.constraints.push_back({to_polynomial(*c.lhs, n), c.relation, to_polynomial(*c.rhs, n)});
  }
  up.bounds.resize(ast.bounds.size());
  std::vector<bool> seen(n, false);
  for (const auto& b : ast.bounds) {
    if (b.variable >= n || seen[b.variable]) {
      throw Error(ErrorKind::InvalidArgument, "bounds must cover each variable once");
    }
    seen[b.variable] = true;
    up.bounds[b.variable] = {b.lo, b.hi};
  }
  if (up.bounds.size() != n) {
    throw Error(ErrorKind::Unbounded, "every variable needs exactly one bound");
  }
  return up;
}

}  // namespace bpsolve
