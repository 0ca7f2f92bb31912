/* SPDX-License-Identifier: Apache-2.0 */

#pragma once

#include <gmpxx.h>

#include <compare>
#include <concepts>
#include <iosfwd>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace bpsolve {

using Integer = mpz_class;
using IntVector = std::vector<Integer>;

/// Exact rational number in canonical form (reduced, positive denominator).
///
/// There is deliberately no conversion from or to floating point types.
class Rational {
 public:
  Rational() = default;

  template <std::signed_integral T>
  Rational(T v) : value_(static_cast<long>(v)) {}  // NOLINT(implicit)

  template <std::unsigned_integral T>
  Rational(T v) : value_(static_cast<unsigned long>(v)) {}  // NOLINT(implicit)

  Rational(const Integer& v) : value_(v) {}  // NOLINT(implicit)

  /// Throws Error(InvalidArgument) when `den` is zero.
  Rational(const Integer& num, const Integer& den);

  Rational(float) = delete;
  Rational(double) = delete;
  Rational(long double) = delete;

  /// Accepts "p", "-p", "p/q" and finite decimals such as "-1.25".
  static Rational parse(std::string_view text);

  Integer numerator() const { return value_.get_num(); }
  Integer denominator() const { return value_.get_den(); }

  bool is_integer() const { return value_.get_den() == 1; }
  bool is_zero() const { return sgn(value_) == 0; }
  int sign() const { return sgn(value_); }

  /// Exact "p/q" form, or "p" when the denominator is one.
  std::string str() const { return value_.get_str(); }

  Rational abs() const;
  Rational pow(unsigned exponent) const;
  Rational inverse() const;

  /// Largest integer not above the value.
  Integer floor() const;

  /// this += a * b without temporaries escaping the call.
  void add_product(const Rational& a, const Rational& b);

  Rational& operator+=(const Rational& o) { value_ += o.value_; return *this; }
  Rational& operator-=(const Rational& o) { value_ -= o.value_; return *this; }
  Rational& operator*=(const Rational& o) { value_ *= o.value_; return *this; }
  Rational& operator/=(const Rational& o);

  friend Rational operator+(Rational a, const Rational& b) { return a += b; }
  friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
  friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
  friend Rational operator/(Rational a, const Rational& b) { return a /= b; }
  Rational operator-() const;

  friend bool operator==(const Rational& a, const Rational& b) {
    return cmp(a.value_, b.value_) == 0;
  }
  friend std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
    const int c = cmp(a.value_, b.value_);
    return c < 0 ? std::strong_ordering::less
                 : (c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
  }

  const mpq_class& raw() const { return value_; }

 private:
  mpq_class value_;
};

std::ostream& operator<<(std::ostream& os, const Rational& r);

using RationalVector = std::vector<Rational>;

/// A rational extended with a −∞ element that lies below every rational.
class ExtendedRational {
 public:
  ExtendedRational() = default;  // −∞
  ExtendedRational(Rational v) : value_(std::move(v)) {}  // NOLINT(implicit)

  static ExtendedRational neg_infinity() { return {}; }

  bool is_finite() const { return value_.has_value(); }
  /// Precondition: is_finite().
  const Rational& value() const { return *value_; }

  /// "-inf" or the exact rational string.
  std::string str() const;

  friend bool operator==(const ExtendedRational&, const ExtendedRational&) = default;
  friend std::strong_ordering operator<=>(const ExtendedRational& a,
                                          const ExtendedRational& b) {
    if (!a.value_ || !b.value_) return a.value_.has_value() <=> b.value_.has_value();
    return *a.value_ <=> *b.value_;
  }

 private:
  std::optional<Rational> value_;
};

/// 2^e as an exact integer.
Integer pow2(unsigned long e);

/// Smallest k with 2^k >= value (value must be positive).
unsigned long ceil_log2(const Integer& value);

}  // namespace bpsolve
