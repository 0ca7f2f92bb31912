/* SPDX-License-Identifier: Apache-2.0 */

#include "bpsolve/matrix.hpp"

#include <algorithm>

#include "bpsolve/error.hpp"

namespace bpsolve {

RationalMatrix::RationalMatrix(std::initializer_list<std::initializer_list<Rational>> rows) {
  rows_ = rows.size();
  cols_ = rows_ ? rows.begin()->size() : 0;
  data_.reserve(rows_ * cols_);
  for (const auto& row : rows) {
    if (row.size() != cols_) throw Error(ErrorKind::InvalidArgument, "ragged matrix literal");
    data_.insert(data_.end(), row.begin(), row.end());
  }
}

RationalMatrix RationalMatrix::identity(std::size_t n) {
  RationalMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

RationalVector RationalMatrix::apply(std::span<const Rational> v) const {
  if (v.size() != cols_) throw Error(ErrorKind::InvalidArgument, "matrix/vector size mismatch");
  RationalVector out(rows_);
  for (std::size_t r = 0; r < rows_; ++r) {
    for (std::size_t c = 0; c < cols_; ++c) {
      const Rational& e = (*this)(r, c);
      if (!e.is_zero()) out[r].add_product(e, v[c]);
    }
  }
  return out;
}

bool RationalMatrix::is_lower_triangular() const {
  for (std::size_t r = 0; r < rows_; ++r) {
    for (std::size_t c = r + 1; c < cols_; ++c) {
      if (!(*this)(r, c).is_zero()) return false;
    }
  }
  return true;
}

bool RationalMatrix::is_upper_triangular() const {
  for (std::size_t r = 0; r < rows_; ++r) {
    for (std::size_t c = 0; c < std::min(r, cols_); ++c) {
      if (!(*this)(r, c).is_zero()) return false;
    }
  }
  return true;
}

bool RationalMatrix::is_zero() const {
  return std::all_of(data_.begin(), data_.end(), [](const Rational& x) { return x.is_zero(); });
}

std::string RationalMatrix::str() const {
  std::string out = "[";
  for (std::size_t r = 0; r < rows_; ++r) {
    out += r ? ", [" : "[";
    for (std::size_t c = 0; c < cols_; ++c) {
      if (c) out += ", ";
      out += (*this)(r, c).str();
    }
    out += "]";
  }
  return out + "]";
}

RationalMatrix operator*(const RationalMatrix& a, const RationalMatrix& b) {
  if (a.cols_ != b.rows_) throw Error(ErrorKind::InvalidArgument, "matrix product size mismatch");
  RationalMatrix out(a.rows_, b.cols_);
  for (std::size_t i = 0; i < a.rows_; ++i) {
    for (std::size_t k = 0; k < a.cols_; ++k) {
      const Rational& e = a(i, k);
      if (e.is_zero()) continue;
      for (std::size_t j = 0; j < b.cols_; ++j) {
        if (!b(k, j).is_zero()) out(i, j).add_product(e, b(k, j));
      }
    }
  }
  return out;
}

RationalMatrix operator-(const RationalMatrix& a, const RationalMatrix& b) {
  if (a.rows_ != b.rows_ || a.cols_ != b.cols_) {
    throw Error(ErrorKind::InvalidArgument, "matrix difference size mismatch");
  }
  RationalMatrix out = a;
  for (std::size_t i = 0; i < out.data_.size(); ++i) out.data_[i] -= b.data_[i];
  return out;
}

RationalMatrix kronecker(const RationalMatrix& a, const RationalMatrix& b) {
  RationalMatrix out(a.rows() * b.rows(), a.cols() * b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t j = 0; j < a.cols(); ++j) {
      if (a(i, j).is_zero()) continue;
      for (std::size_t p = 0; p < b.rows(); ++p) {
        for (std::size_t q = 0; q < b.cols(); ++q) {
          out(i * b.rows() + p, j * b.cols() + q) = a(i, j) * b(p, q);
        }
      }
    }
  }
  return out;
}

RationalVector apply_along_axis(std::span<const Rational> tensor,
                                std::span<const std::size_t> dims, std::size_t axis,
                                const RationalMatrix& m) {
  if (axis >= dims.size()) throw Error(ErrorKind::OutOfRange, "axis out of range");
  if (m.cols() != dims[axis]) throw Error(ErrorKind::InvalidArgument, "axis extent mismatch");
  std::size_t outer = 1;
  for (std::size_t i = 0; i < axis; ++i) outer *= dims[i];
  std::size_t inner = 1;
  for (std::size_t i = axis + 1; i < dims.size(); ++i) inner *= dims[i];
  if (outer * dims[axis] * inner != tensor.size()) {
    throw Error(ErrorKind::InvalidArgument, "tensor size does not match extents");
  }
  const std::size_t in_len = dims[axis];
  const std::size_t out_len = m.rows();
  RationalVector out(outer * out_len * inner);
  for (std::size_t o = 0; o < outer; ++o) {
    for (std::size_t r = 0; r < out_len; ++r) {
      Rational* dst = out.data() + (o * out_len + r) * inner;
      for (std::size_t c = 0; c < in_len; ++c) {
        const Rational& e = m(r, c);
        if (e.is_zero()) continue;
        const Rational* src = tensor.data() + (o * in_len + c) * inner;
        for (std::size_t t = 0; t < inner; ++t) dst[t].add_product(e, src[t]);
      }
    }
  }
  return out;
}

}  // namespace bpsolve
