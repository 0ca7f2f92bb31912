/* SPDX-License-Identifier: Apache-2.0 */

#pragma once

#include <cstddef>
#include <map>
#include <span>
#include <string>
#include <vector>

#include "bpsolve/multi_index.hpp"
#include "bpsolve/rational.hpp"

namespace bpsolve {

/// Sparse polynomial sum c_i x^i in n variables with rational coefficients.
/// Zero coefficients are never stored.
class MonomialPoly {
 public:
  using Terms = std::map<MultiIndex, Rational>;

  MonomialPoly() = default;
  explicit MonomialPoly(std::size_t nvars) : nvars_(nvars) {}

  static MonomialPoly constant(std::size_t nvars, const Rational& c);
  /// x_axis (0-based).
  static MonomialPoly variable(std::size_t nvars, std::size_t axis);

  std::size_t nvars() const { return nvars_; }
  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }

  Rational coefficient(const MultiIndex& exponent) const;
  void add_term(const MultiIndex& exponent, const Rational& c);

  /// Componentwise maximum exponent; all zeros for constants.
  MultiIndex multidegree() const;

  Rational evaluate(std::span<const Rational> x) const;
  Rational evaluate(const IntVector& z) const;

  MonomialPoly pow(unsigned exponent) const;

  /// The polynomial x -> p(offset + scale * x), componentwise.
  MonomialPoly pull_back(std::span<const Rational> offset, std::span<const Rational> scale) const;

  bool has_integer_coefficients() const;
  /// Positive least common multiple of the coefficient denominators.
  Integer denominator_lcm() const;

  /// Human-readable form using `names` (x1, x2, ... when empty).
  std::string str(const std::vector<std::string>& names = {}) const;

  MonomialPoly& operator+=(const MonomialPoly& o);
  MonomialPoly& operator-=(const MonomialPoly& o);
  MonomialPoly& operator*=(const Rational& c);
  MonomialPoly operator-() const;

  friend MonomialPoly operator+(MonomialPoly a, const MonomialPoly& b) { return a += b; }
  friend MonomialPoly operator-(MonomialPoly a, const MonomialPoly& b) { return a -= b; }
  friend MonomialPoly operator*(MonomialPoly a, const Rational& c) { return a *= c; }
  friend MonomialPoly operator*(const MonomialPoly& a, const MonomialPoly& b);
  friend bool operator==(const MonomialPoly&, const MonomialPoly&) = default;

 private:
  void check_compatible(const MonomialPoly& o) const;

  std::size_t nvars_ = 0;
  Terms terms_;
};

}  // namespace bpsolve
