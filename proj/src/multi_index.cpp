/* SPDX-License-Identifier: Apache-2.0 */

#include "bpsolve/multi_index.hpp"

#include <algorithm>
#include <numeric>

#include "bpsolve/error.hpp"

namespace bpsolve {

MultiIndex::MultiIndex(std::initializer_list<std::int64_t> entries)
    : MultiIndex(std::vector<std::int64_t>(entries)) {}

MultiIndex::MultiIndex(std::vector<std::int64_t> entries) : entries_(std::move(entries)) {
  for (auto e : entries_) {
    if (e < 0) throw Error(ErrorKind::InvalidArgument, "negative multi-index entry");
  }
}

void MultiIndex::set(std::size_t i, std::int64_t value) {
  if (value < 0) throw Error(ErrorKind::InvalidArgument, "negative multi-index entry");
  entries_.at(i) = value;
}

std::int64_t MultiIndex::total() const {
  return std::accumulate(entries_.begin(), entries_.end(), std::int64_t{0});
}

bool MultiIndex::is_zero() const {
  return std::all_of(entries_.begin(), entries_.end(), [](auto e) { return e == 0; });
}

std::size_t MultiIndex::argmax() const {
  if (entries_.empty()) throw Error(ErrorKind::InvalidArgument, "argmax of empty multi-index");
  return static_cast<std::size_t>(std::max_element(entries_.begin(), entries_.end()) -
                                  entries_.begin());
}

std::string MultiIndex::str() const {
  std::string out = "(";
  for (std::size_t i = 0; i < entries_.size(); ++i) {
    if (i) out += ",";
    out += std::to_string(entries_[i]);
  }
  return out + ")";
}

bool componentwise_le(const MultiIndex& a, const MultiIndex& b) {
  if (a.size() != b.size()) return false;
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] > b[i]) return false;
  }
  return true;
}

MultiIndex componentwise_max(const MultiIndex& a, const MultiIndex& b) {
  if (a.size() != b.size()) throw Error(ErrorKind::InvalidArgument, "length mismatch");
  std::vector<std::int64_t> out(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) out[i] = std::max(a[i], b[i]);
  return MultiIndex(std::move(out));
}

MultiDegree::MultiDegree(MultiIndex degree) : degree_(std::move(degree)) {
  const std::size_t n = degree_.size();
  dims_.resize(n);
  strides_.resize(n);
  basis_size_ = 1;
  for (std::size_t i = 0; i < n; ++i) {
    dims_[i] = static_cast<std::size_t>(degree_[i]) + 1;
    if (basis_size_ > kMaxBasisSize / dims_[i]) {
      throw Error(ErrorKind::CapExceeded, "basis size of degree " + degree_.str() + " too large");
    }
    basis_size_ *= dims_[i];
  }
  std::size_t stride = 1;
  for (std::size_t i = n; i-- > 0;) {
    strides_[i] = stride;
    stride *= dims_[i];
  }
  if (stride != basis_size_) throw Error(ErrorKind::Internal, "basis size mismatch");
}

std::size_t MultiDegree::flat_index(const MultiIndex& k) const {
  if (k.size() != nvars()) throw Error(ErrorKind::InvalidArgument, "multi-index length mismatch");
  std::size_t pos = 0;
  for (std::size_t i = 0; i < k.size(); ++i) {
    if (k[i] > degree_[i]) throw Error(ErrorKind::OutOfRange, "multi-index exceeds degree");
    pos += static_cast<std::size_t>(k[i]) * strides_[i];
  }
  return pos;
}

MultiIndex MultiDegree::unflatten(std::size_t position) const {
  if (position >= basis_size_) throw Error(ErrorKind::OutOfRange, "flat position out of range");
  std::vector<std::int64_t> k(nvars());
  for (std::size_t i = 0; i < nvars(); ++i) {
    k[i] = static_cast<std::int64_t>(position / strides_[i]);
    position %= strides_[i];
  }
  return MultiIndex(std::move(k));
}

}  // namespace bpsolve
