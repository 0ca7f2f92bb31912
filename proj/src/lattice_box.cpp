/* SPDX-License-Identifier: Apache-2.0 */

#include "bpsolve/lattice_box.hpp"

#include "bpsolve/error.hpp"

namespace bpsolve {

LatticeBox LatticeBox::root(IntVector anchor, MultiIndex scale, std::int64_t max_exponent) {
  MultiIndex zero(scale.size());
  MultiIndex sub = scale;
  return make(std::move(anchor), std::move(scale), std::move(zero), std::move(sub),
              max_exponent);
}

LatticeBox LatticeBox::make(IntVector anchor, MultiIndex scale, MultiIndex offset,
                            MultiIndex sub_scale, std::int64_t max_exponent) {
  const std::size_t n = anchor.size();
  if (scale.size() != n || offset.size() != n || sub_scale.size() != n) {
    throw Error(ErrorKind::InvalidArgument, "lattice box component lengths differ");
  }
  for (std::size_t i = 0; i < n; ++i) {
    if (scale[i] > max_exponent) {
      throw Error(ErrorKind::CapExceeded, "box exponent " + std::to_string(scale[i]) +
                                              " exceeds limit " + std::to_string(max_exponent));
    }
  }
  LatticeBox box;
  if (!componentwise_le(sub_scale, scale)) return box;
  for (std::size_t i = 0; i < n; ++i) {
    const auto width = scale[i] - sub_scale[i];
    if (width < 63 && offset[i] >= (std::int64_t{1} << width)) return box;
  }
  box.empty_ = false;
  box.anchor_ = std::move(anchor);
  box.scale_ = std::move(scale);
  box.offset_ = std::move(offset);
  box.sub_scale_ = std::move(sub_scale);
  return box;
}

IntVector LatticeBox::lower_corner() const {
  if (empty_) throw Error(ErrorKind::Domain, "lower corner of the empty box");
  IntVector out(nvars());
  for (std::size_t i = 0; i < nvars(); ++i) {
    out[i] = anchor_[i] + Integer(static_cast<long>(offset_[i])) *
                              pow2(static_cast<unsigned long>(sub_scale_[i]));
  }
  return out;
}

std::optional<Region> LatticeBox::realize() const {
  if (empty_) return std::nullopt;
  Region region;
  const IntVector low = lower_corner();
  for (std::size_t i = 0; i < nvars(); ++i) {
    region.lower.emplace_back(low[i]);
    region.upper.emplace_back(Integer(low[i] + pow2(static_cast<unsigned long>(sub_scale_[i]))));
  }
  return region;
}

std::pair<LatticeBox, LatticeBox> LatticeBox::children(std::size_t axis) const {
  if (empty_) throw Error(ErrorKind::IndivisibleAxis, "cannot split the empty box");
  if (axis >= nvars()) throw Error(ErrorKind::OutOfRange, "axis out of range");
  if (sub_scale_[axis] == 0) {
    throw Error(ErrorKind::IndivisibleAxis,
                "axis " + std::to_string(axis + 1) + " has unit width");
  }
  LatticeBox left = *this;
  left.offset_.set(axis, 2 * offset_[axis]);
  left.sub_scale_.set(axis, sub_scale_[axis] - 1);
  LatticeBox right = left;
  right.offset_.set(axis, 2 * offset_[axis] + 1);
  return {std::move(left), std::move(right)};
}

}  // namespace bpsolve
