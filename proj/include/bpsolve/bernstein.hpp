/* SPDX-License-Identifier: Apache-2.0 */

#pragma once

#include <cstddef>
#include <span>
#include <utility>
#include <vector>

#include "bpsolve/matrix.hpp"
#include "bpsolve/monomial.hpp"
#include "bpsolve/multi_index.hpp"
#include "bpsolve/rational.hpp"

namespace bpsolve {

/// Exact binomial coefficients C(n, k) for 0 <= k <= n <= max_n.
class BinomialTable {
 public:
  explicit BinomialTable(std::size_t max_n);

  std::size_t max_n() const { return rows_.size() - 1; }
  const Integer& operator()(std::size_t n, std::size_t k) const;

 private:
  std::vector<std::vector<Integer>> rows_;
};

/// Polynomial over [0,1]^n written in the tensor Bernstein basis of a fixed
/// multi-degree: p(x) = sum_k beta_k B_{d,k}(x) with
/// B_{d,k}(x) = prod_i C(d_i,k_i) x_i^{k_i} (1 - x_i)^{d_i - k_i}.
///
/// Coefficients are stored flattened in lexicographic order of k.
class BernsteinForm {
 public:
  BernsteinForm() = default;
  BernsteinForm(MultiDegree degree, RationalVector coeffs);

  static BernsteinForm constant(const MultiDegree& degree, const Rational& c);

  const MultiDegree& degree() const { return degree_; }
  const RationalVector& coeffs() const { return coeffs_; }
  std::size_t size() const { return coeffs_.size(); }
  const Rational& operator[](std::size_t pos) const { return coeffs_[pos]; }
  const Rational& at(const MultiIndex& k) const { return coeffs_[degree_.flat_index(k)]; }

  /// The coefficient at the all-zero index, equal to p(0,...,0).
  const Rational& first() const { return coeffs_.front(); }

  friend BernsteinForm operator+(const BernsteinForm& a, const BernsteinForm& b);
  friend bool operator==(const BernsteinForm&, const BernsteinForm&) = default;

 private:
  MultiDegree degree_;
  RationalVector coeffs_;
};

/// Bernstein coefficients of `p` in degree `d`. Throws Error(DegreeOverflow)
/// when multidegree(p) is not componentwise below `d`.
BernsteinForm to_bernstein(const MonomialPoly& p, const MultiDegree& d);

/// Exact value of the form at a point of the unit box; Error(Domain) outside it.
Rational evaluate(const BernsteinForm& f, std::span<const Rational> x);

/// Same polynomial written in the higher degree `target`, obtained by
/// repeated one-step elevation along each axis. Error(DegreeDecrease) when
/// `target` is below the current degree on some axis.
BernsteinForm elevate(const BernsteinForm& f, const MultiDegree& target);

/// Univariate one-step elevation matrix, (d+2) x (d+1).
RationalMatrix elevation_step_matrix(std::size_t d);

/// [min, max] of the coefficients; encloses the polynomial on [0,1]^n.
std::pair<Rational, Rational> range_bounds(const BernsteinForm& f);

/// max over the coefficients.
const Rational& max_coefficient(const BernsteinForm& f);

}  // namespace bpsolve
