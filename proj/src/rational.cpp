/* SPDX-License-Identifier: Apache-2.0 */

#include "bpsolve/rational.hpp"

#include <ostream>

#include "bpsolve/error.hpp"

namespace bpsolve {

const char* to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::InvalidArgument: return "invalid argument";
    case ErrorKind::IndivisibleAxis: return "indivisible axis";
    case ErrorKind::DegreeOverflow: return "degree overflow";
    case ErrorKind::DegreeDecrease: return "degree decrease";
    case ErrorKind::DegreeMismatch: return "degree mismatch";
    case ErrorKind::Domain: return "domain error";
    case ErrorKind::DegenerateBox: return "degenerate box";
    case ErrorKind::OutOfRange: return "out of range";
    case ErrorKind::Unbounded: return "unbounded variable";
    case ErrorKind::CapExceeded: return "cap exceeded";
    case ErrorKind::Parse: return "parse error";
    case ErrorKind::Io: return "i/o error";
    case ErrorKind::Internal: return "internal error";
  }
  return "unknown";
}

namespace {

bool all_digits(std::string_view s) {
  if (s.empty()) return false;
  for (char c : s) {
    if (c < '0' || c > '9') return false;
  }
  return true;
}

Integer parse_integer(std::string_view s, std::string_view whole) {
  if (!all_digits(s)) {
    throw Error(ErrorKind::InvalidArgument,
                "malformed rational '" + std::string(whole) + "'");
  }
  return Integer(std::string(s), 10);
}

}  // namespace

Rational::Rational(const Integer& num, const Integer& den) {
  if (den == 0) throw Error(ErrorKind::InvalidArgument, "zero denominator");
  value_.get_num() = num;
  value_.get_den() = den;
  value_.canonicalize();
}

Rational Rational::parse(std::string_view text) {
  std::string_view body = text;
  bool negative = false;
  if (!body.empty() && (body.front() == '-' || body.front() == '+')) {
    negative = body.front() == '-';
    body.remove_prefix(1);
  }
  Rational out;
  if (auto slash = body.find('/'); slash != std::string_view::npos) {
    out = Rational(parse_integer(body.substr(0, slash), text),
                   parse_integer(body.substr(slash + 1), text));
  } else if (auto dot = body.find('.'); dot != std::string_view::npos) {
    std::string_view whole = body.substr(0, dot);
    std::string_view frac = body.substr(dot + 1);
    Integer w = whole.empty() ? Integer(0) : parse_integer(whole, text);
    if (frac.empty() && whole.empty()) parse_integer(frac, text);
    Integer f = frac.empty() ? Integer(0) : parse_integer(frac, text);
    Integer scale;
    mpz_ui_pow_ui(scale.get_mpz_t(), 10, frac.size());
    out = Rational(w * scale + f, scale);
  } else {
    out = Rational(parse_integer(body, text));
  }
  return negative ? -out : out;
}

Rational Rational::abs() const {
  Rational r;
  r.value_ = ::abs(value_);
  return r;
}

Rational Rational::pow(unsigned exponent) const {
  Rational r;
  mpz_pow_ui(r.value_.get_num_mpz_t(), value_.get_num_mpz_t(), exponent);
  mpz_pow_ui(r.value_.get_den_mpz_t(), value_.get_den_mpz_t(), exponent);
  return r;
}

Rational Rational::inverse() const {
  if (is_zero()) throw Error(ErrorKind::Domain, "inverse of zero");
  Rational r;
  mpq_inv(r.value_.get_mpq_t(), value_.get_mpq_t());
  return r;
}

Integer Rational::floor() const {
  Integer q;
  mpz_fdiv_q(q.get_mpz_t(), value_.get_num_mpz_t(), value_.get_den_mpz_t());
  return q;
}

void Rational::add_product(const Rational& a, const Rational& b) {
  thread_local mpq_class tmp;
  mpq_mul(tmp.get_mpq_t(), a.value_.get_mpq_t(), b.value_.get_mpq_t());
  mpq_add(value_.get_mpq_t(), value_.get_mpq_t(), tmp.get_mpq_t());
}

Rational& Rational::operator/=(const Rational& o) {
  if (o.is_zero()) throw Error(ErrorKind::Domain, "division by zero");
  value_ /= o.value_;
  return *this;
}

Rational Rational::operator-() const {
  Rational r;
  r.value_ = -value_;
  return r;
}

std::ostream& operator<<(std::ostream& os, const Rational& r) {
  return os << r.str();
}

std::string ExtendedRational::str() const {
  return value_ ? value_->str() : std::string("-inf");
}

Integer pow2(unsigned long e) {
  Integer r;
  mpz_setbit(r.get_mpz_t(), e);
  return r;
}

unsigned long ceil_log2(const Integer& value) {
  if (value <= 0) throw Error(ErrorKind::InvalidArgument, "ceil_log2 of non-positive value");
  if (value == 1) return 0;
  Integer v = value - 1;
  return mpz_sizeinbase(v.get_mpz_t(), 2);
}

}  // namespace bpsolve
