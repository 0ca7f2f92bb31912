/* SPDX-License-Identifier: Apache-2.0 */

#include "bpsolve/subdivision.hpp"

#include "bpsolve/error.hpp"

namespace bpsolve {

SubdivisionBasis::SubdivisionBasis(MultiDegree degree, std::vector<RationalMatrix> left,
                                   std::vector<RationalMatrix> right)
    : degree_(std::move(degree)), left_(std::move(left)), right_(std::move(right)) {
  if (left_.size() != degree_.nvars() || right_.size() != degree_.nvars()) {
    throw Error(ErrorKind::InvalidArgument, "one left and one right matrix per axis required");
  }
  for (std::size_t i = 0; i < degree_.nvars(); ++i) {
    const std::size_t m = degree_.dims()[i];
    if (left_[i].rows() != m || left_[i].cols() != m || right_[i].rows() != m ||
        right_[i].cols() != m) {
      throw Error(ErrorKind::InvalidArgument, "halving matrix has wrong size on axis " +
                                                  std::to_string(i + 1));
    }
    if (!left_[i].is_lower_triangular() || !right_[i].is_upper_triangular()) {
      throw Error(ErrorKind::InvalidArgument, "halving matrices must be triangular");
    }
  }
}

SubdivisionBasis build_basis(const MultiDegree& d) {
  std::size_t max_d = 0;
  for (auto e : d.degree()) max_d = std::max(max_d, static_cast<std::size_t>(e));
  const BinomialTable binom(max_d);

  std::vector<RationalMatrix> left;
  std::vector<RationalMatrix> right;
  for (std::size_t axis = 0; axis < d.nvars(); ++axis) {
    const auto deg = static_cast<std::size_t>(d[axis]);
    RationalMatrix l(deg + 1, deg + 1);
    RationalMatrix r(deg + 1, deg + 1);
    for (std::size_t k = 0; k <= deg; ++k) {
      // de Casteljau at 1/2: left row k = C(k,j)/2^k, right row k = C(d-k,j-k)/2^(d-k).
      for (std::size_t j = 0; j <= k; ++j) l(k, j) = Rational(binom(k, j), pow2(k));
      for (std::size_t j = k; j <= deg; ++j) {
        r(k, j) = Rational(binom(deg - k, j - k), pow2(deg - k));
      }
    }
    left.push_back(std::move(l));
    right.push_back(std::move(r));
  }
  return SubdivisionBasis(d, std::move(left), std::move(right));
}

RationalVector apply_half(const SubdivisionBasis& basis, std::span<const Rational> coeffs,
                          std::size_t axis, Side side) {
  return apply_along_axis(coeffs, basis.degree().dims(), axis, basis.half(axis, side));
}

BernsteinForm apply_half(const SubdivisionBasis& basis, const BernsteinForm& f, std::size_t axis,
                         Side side) {
  if (!(f.degree() == basis.degree())) {
    throw Error(ErrorKind::DegreeMismatch, "form degree " + f.degree().degree().str() +
                                               " differs from basis degree " +
                                               basis.degree().degree().str());
  }
  return BernsteinForm(f.degree(), apply_half(basis, f.coeffs(), axis, side));
}

RationalMatrix dense_half_matrix(const SubdivisionBasis& basis, std::size_t axis, Side side) {
  const MultiDegree& d = basis.degree();
  if (axis >= d.nvars()) throw Error(ErrorKind::OutOfRange, "axis out of range");
  RationalMatrix out = RationalMatrix::identity(1);
  for (std::size_t i = 0; i < d.nvars(); ++i) {
    out = kronecker(out, i == axis ? basis.half(i, side) : RationalMatrix::identity(d.dims()[i]));
  }
  return out;
}

BoxMatrix box_matrix(const MultiDegree& d, std::span<const Rational> lower,
                     std::span<const Rational> upper) {
  if (lower.size() != d.nvars() || upper.size() != d.nvars()) {
    throw Error(ErrorKind::InvalidArgument, "box dimension does not match degree");
  }
  RationalMatrix dense = RationalMatrix::identity(1);
  for (std::size_t axis = 0; axis < d.nvars(); ++axis) {
    if (!(lower[axis] < upper[axis])) {
      throw Error(ErrorKind::DegenerateBox, "box side " + std::to_string(axis + 1) + " is empty");
    }
    const auto deg = static_cast<std::int64_t>(d[axis]);
    const MultiDegree uni{deg};
    const Rational offset[] = {lower[axis]};
    const Rational scale[] = {upper[axis] - lower[axis]};
    const MonomialPoly x = MonomialPoly::variable(1, 0);
    const MonomialPoly one_minus_x = MonomialPoly::constant(1, Rational(1)) - x;
    RationalMatrix m(static_cast<std::size_t>(deg) + 1, static_cast<std::size_t>(deg) + 1);
    Integer binom = 1;
    for (std::int64_t k = 0; k <= deg; ++k) {
      MonomialPoly basis_poly = x.pow(static_cast<unsigned>(k)) *
                                one_minus_x.pow(static_cast<unsigned>(deg - k)) * Rational(binom);
      const BernsteinForm column = to_bernstein(basis_poly.pull_back(offset, scale), uni);
      for (std::size_t row = 0; row < column.size(); ++row) m(row, k) = column[row];
      binom = binom * (deg - k) / (k + 1);
    }
    dense = kronecker(dense, m);
  }
  return BoxMatrix{d, std::move(dense)};
}

std::vector<Letter> factor_box(const MultiIndex& l, const MultiIndex& k) {
  if (l.size() != k.size()) throw Error(ErrorKind::InvalidArgument, "offset/scale length mismatch");
  for (std::size_t i = 0; i < k.size(); ++i) {
    if (k[i] > 62 || l[i] >= (std::int64_t{1} << k[i])) {
      throw Error(ErrorKind::OutOfRange, "offset " + std::to_string(l[i]) + " outside [0, 2^" +
                                             std::to_string(k[i]) + ")");
    }
  }
  std::vector<Letter> word;
  MultiIndex remaining = k;
  while (!remaining.is_zero()) {
    const std::size_t j = remaining.argmax();
    const std::int64_t bit = remaining[j] - 1;
    word.push_back({j, ((l[j] >> bit) & 1) ? Side::Right : Side::Left});
    remaining.set(j, bit);
  }
  return word;
}

BernsteinForm apply_word(const SubdivisionBasis& basis, const BernsteinForm& f,
                         std::span<const Letter> word) {
  BernsteinForm out = f;
  for (const Letter& letter : word) out = apply_half(basis, out, letter.axis, letter.side);
  return out;
}

}  // namespace bpsolve
