/* SPDX-License-Identifier: Apache-2.0 */

#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "bpsolve/bernstein.hpp"
#include "bpsolve/matrix.hpp"
#include "bpsolve/multi_index.hpp"

namespace bpsolve {

enum class Side { Left, Right };

/// Univariate halving matrices for every axis of a multi-degree.
///
/// left(i) maps the Bernstein coefficients of a univariate polynomial of
/// degree d_i on [0,1] to those of x -> p(x/2); right(i) to those of
/// x -> p((1+x)/2). Applied along axis i of a coefficient tensor they act as
/// the s x s matrices M_i^L and M_i^R without ever materializing them.
class SubdivisionBasis {
 public:
  SubdivisionBasis() = default;
  SubdivisionBasis(MultiDegree degree, std::vector<RationalMatrix> left,
                   std::vector<RationalMatrix> right);

  const MultiDegree& degree() const { return degree_; }
  const RationalMatrix& left(std::size_t axis) const { return left_.at(axis); }
  const RationalMatrix& right(std::size_t axis) const { return right_.at(axis); }
  const RationalMatrix& half(std::size_t axis, Side side) const {
    return side == Side::Left ? left(axis) : right(axis);
  }

  friend bool operator==(const SubdivisionBasis&, const SubdivisionBasis&) = default;

 private:
  MultiDegree degree_;
  std::vector<RationalMatrix> left_;
  std::vector<RationalMatrix> right_;
};

/// Matrix of the pull-back q -> q(lower + (upper - lower) x) in the
/// d-Bernstein basis; column k holds the coefficients of the pulled-back B_{d,k}.
struct BoxMatrix {
  MultiDegree degree;
  RationalMatrix entries;
};

/// One halving step of a box factorization.
struct Letter {
  std::size_t axis;
  Side side;

  friend bool operator==(const Letter&, const Letter&) = default;
};

SubdivisionBasis build_basis(const MultiDegree& d);

/// Restriction of `f` to the chosen half of the unit box along `axis`,
/// reparameterized back to [0,1]^n.
BernsteinForm apply_half(const SubdivisionBasis& basis, const BernsteinForm& f, std::size_t axis,
                         Side side);

/// In-place variant on a raw coefficient tensor of the basis degree.
RationalVector apply_half(const SubdivisionBasis& basis, std::span<const Rational> coeffs,
                          std::size_t axis, Side side);

/// Dense s x s form of M_axis^side; intended for verification.
RationalMatrix dense_half_matrix(const SubdivisionBasis& basis, std::size_t axis, Side side);

/// Works for any non-degenerate rational box, dyadic or not.
BoxMatrix box_matrix(const MultiDegree& d, std::span<const Rational> lower,
                     std::span<const Rational> upper);

/// Halving word reaching prod [l_i/2^{k_i}, (l_i+1)/2^{k_i}] from the unit
/// box. Letters come in the order the solver takes them: the axis with the
/// most remaining halvings first (smallest index on ties), and along each
/// axis the most significant bit of l_i first.
std::vector<Letter> factor_box(const MultiIndex& l, const MultiIndex& k);

BernsteinForm apply_word(const SubdivisionBasis& basis, const BernsteinForm& f,
                         std::span<const Letter> word);

}  // namespace bpsolve
