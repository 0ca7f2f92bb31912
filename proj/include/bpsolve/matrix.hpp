/* SPDX-License-Identifier: Apache-2.0 */

#pragma once

#include <cstddef>
#include <span>
#include <string>
#include <vector>

#include "bpsolve/rational.hpp"

namespace bpsolve {

/// Dense row-major rational matrix.
class RationalMatrix {
 public:
  RationalMatrix() = default;
  RationalMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}
  RationalMatrix(std::initializer_list<std::initializer_list<Rational>> rows);

  static RationalMatrix identity(std::size_t n);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  Rational& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const Rational& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

  RationalVector apply(std::span<const Rational> v) const;

  bool is_lower_triangular() const;
  bool is_upper_triangular() const;
  bool is_zero() const;

  std::string str() const;

  friend RationalMatrix operator*(const RationalMatrix& a, const RationalMatrix& b);
  friend RationalMatrix operator-(const RationalMatrix& a, const RationalMatrix& b);
  friend bool operator==(const RationalMatrix&, const RationalMatrix&) = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Rational> data_;
};

/// Kronecker product a (x) b.
RationalMatrix kronecker(const RationalMatrix& a, const RationalMatrix& b);

/// Applies `m` (rows x dims[axis]) along one axis of a row-major tensor.
/// The result has the same extents except dims[axis] becomes m.rows().
RationalVector apply_along_axis(std::span<const Rational> tensor,
                                std::span<const std::size_t> dims, std::size_t axis,
                                const RationalMatrix& m);

}  // namespace bpsolve
