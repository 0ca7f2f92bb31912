/* SPDX-License-Identifier: Apache-2.0 */

#pragma once

#include <cstdint>
#include <filesystem>
#include <iosfwd>

#include "bpsolve/subdivision.hpp"

namespace bpsolve {

// Binary layout, all fixed-width fields little-endian:
//
//   "BPSB"                 magic
//   u32 version            currently 1
//   u32 n                  number of axes
//   u32 d_i  (n times)     per-axis degree
//   per axis: left matrix then right matrix, (d_i+1)^2 entries row-major,
//   each entry a numerator followed by a denominator, each encoded as
//     u8 sign (0 non-negative, 1 negative), u32 byte count, magnitude bytes
//     least significant first.
inline constexpr std::uint32_t kBasisCacheVersion = 1;

void write_basis(std::ostream& out, const SubdivisionBasis& basis);
/// Throws Error(Io) on truncated or malformed input.
SubdivisionBasis read_basis(std::istream& in);

void save_basis(const std::filesystem::path& path, const SubdivisionBasis& basis);
SubdivisionBasis load_basis(const std::filesystem::path& path);

}  // namespace bpsolve
