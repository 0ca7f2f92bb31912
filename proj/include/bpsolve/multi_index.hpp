/* SPDX-License-Identifier: Apache-2.0 */

#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <string>
#include <vector>

namespace bpsolve {

/// Tuple of non-negative integers. Ordered lexicographically; the
/// componentwise partial order is available through componentwise_le().
class MultiIndex {
 public:
  MultiIndex() = default;
  explicit MultiIndex(std::size_t n) : entries_(n, 0) {}
  MultiIndex(std::initializer_list<std::int64_t> entries);
  explicit MultiIndex(std::vector<std::int64_t> entries);

  std::size_t size() const { return entries_.size(); }
  std::int64_t operator[](std::size_t i) const { return entries_[i]; }
  /// Throws if `value` is negative.
  void set(std::size_t i, std::int64_t value);

  const std::vector<std::int64_t>& entries() const { return entries_; }
  auto begin() const { return entries_.begin(); }
  auto end() const { return entries_.end(); }

  std::int64_t total() const;
  bool is_zero() const;

  /// Position of the largest entry; the smallest index wins ties.
  std::size_t argmax() const;

  std::string str() const;

  friend bool operator==(const MultiIndex&, const MultiIndex&) = default;
  friend auto operator<=>(const MultiIndex&, const MultiIndex&) = default;

 private:
  std::vector<std::int64_t> entries_;
};

bool componentwise_le(const MultiIndex& a, const MultiIndex& b);
MultiIndex componentwise_max(const MultiIndex& a, const MultiIndex& b);

/// Per-axis degree bound d with basis size s = prod(d_i + 1).
///
/// Tensors over a MultiDegree are flattened in lexicographic order of the
/// multi-index, so the last axis varies fastest and position 0 is the
/// all-zero index.
class MultiDegree {
 public:
  MultiDegree() = default;
  explicit MultiDegree(MultiIndex degree);
  MultiDegree(std::initializer_list<std::int64_t> degree)
      : MultiDegree(MultiIndex(degree)) {}

  const MultiIndex& degree() const { return degree_; }
  std::int64_t operator[](std::size_t axis) const { return degree_[axis]; }
  std::size_t nvars() const { return degree_.size(); }
  std::size_t basis_size() const { return basis_size_; }

  /// Extent of each axis, d_i + 1.
  const std::vector<std::size_t>& dims() const { return dims_; }
  const std::vector<std::size_t>& strides() const { return strides_; }

  std::size_t flat_index(const MultiIndex& k) const;
  MultiIndex unflatten(std::size_t position) const;

  friend bool operator==(const MultiDegree& a, const MultiDegree& b) {
    return a.degree_ == b.degree_;
  }

 private:
  MultiIndex degree_;
  std::size_t basis_size_ = 1;
  std::vector<std::size_t> dims_;
  std::vector<std::size_t> strides_;
};

/// Upper limit on s accepted by MultiDegree.
inline constexpr std::size_t kMaxBasisSize = std::size_t{1} << 24;

}  // namespace bpsolve
