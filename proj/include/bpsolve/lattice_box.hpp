/* SPDX-License-Identifier: Apache-2.0 */

#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <utility>

#include "bpsolve/multi_index.hpp"
#include "bpsolve/rational.hpp"

namespace bpsolve {

/// Default ceiling on the per-axis box exponent k_i.
inline constexpr std::int64_t kDefaultMaxBoxExponent = 62;

/// Closed axis-aligned region [lower, upper].
struct Region {
  RationalVector lower;
  RationalVector upper;

  friend bool operator==(const Region&, const Region&) = default;
};

/// Dyadic sub-box D_{l,k'} of the root box prod [a_i, a_i + 2^{k_i}].
///
/// Realizes as prod [a_i + l_i 2^{k'_i}, a_i + (l_i + 1) 2^{k'_i}]. Invalid
/// parameter combinations collapse to the distinguished empty box.
class LatticeBox {
 public:
  /// The empty box.
  LatticeBox() = default;

  static LatticeBox root(IntVector anchor, MultiIndex scale,
                         std::int64_t max_exponent = kDefaultMaxBoxExponent);

  /// Returns the empty box unless k' <= k and 0 <= l_i < 2^{k_i - k'_i}.
  /// Throws if a scale entry exceeds `max_exponent` or lengths disagree.
  static LatticeBox make(IntVector anchor, MultiIndex scale, MultiIndex offset,
                         MultiIndex sub_scale,
                         std::int64_t max_exponent = kDefaultMaxBoxExponent);

  bool is_empty() const { return empty_; }
  std::size_t nvars() const { return anchor_.size(); }

  const IntVector& anchor() const { return anchor_; }
  const MultiIndex& scale() const { return scale_; }
  const MultiIndex& offset() const { return offset_; }
  const MultiIndex& sub_scale() const { return sub_scale_; }

  /// nullopt for the empty box.
  std::optional<Region> realize() const;

  /// Integer lower corner a + l * 2^{k'}.
  IntVector lower_corner() const;

  /// log2 of the volume, sum k'_i.
  std::int64_t log2_volume() const { return sub_scale_.total(); }

  bool is_unit() const { return !empty_ && sub_scale_.is_zero(); }

  /// Halves the box along `axis` (0-based). Throws Error(IndivisibleAxis)
  /// when k'_axis is zero or the box is empty.
  std::pair<LatticeBox, LatticeBox> children(std::size_t axis) const;

  friend bool operator==(const LatticeBox&, const LatticeBox&) = default;

 private:
  bool empty_ = true;
  IntVector anchor_;
  MultiIndex scale_;
  MultiIndex offset_;
  MultiIndex sub_scale_;
};

}  // namespace bpsolve
