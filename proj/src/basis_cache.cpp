/* SPDX-License-Identifier: Apache-2.0 */

#include "bpsolve/basis_cache.hpp"

#include <array>
#include <fstream>
#include <istream>
#include <ostream>
#include <string>
#include <vector>

#include "bpsolve/error.hpp"

namespace bpsolve {
namespace {

constexpr std::array<char, 4> kMagic = {'B', 'P', 'S', 'B'};
constexpr std::uint32_t kMaxAxes = 64;
constexpr std::uint32_t kMaxAxisDegree = 4096;
constexpr std::uint32_t kMaxIntegerBytes = 1U << 20;

void put_u32(std::ostream& out, std::uint32_t v) {
  const char bytes[4] = {static_cast<char>(v & 0xff), static_cast<char>((v >> 8) & 0xff),
                         static_cast<char>((v >> 16) & 0xff), static_cast<char>((v >> 24) & 0xff)};
  out.write(bytes, 4);
}

std::uint32_t get_u32(std::istream& in) {
  unsigned char bytes[4];
  if (!in.read(reinterpret_cast<char*>(bytes), 4)) throw Error(ErrorKind::Io, "truncated basis cache");
  return static_cast<std::uint32_t>(bytes[0]) | (static_cast<std::uint32_t>(bytes[1]) << 8) |
         (static_cast<std::uint32_t>(bytes[2]) << 16) | (static_cast<std::uint32_t>(bytes[3]) << 24);
}

void put_integer(std::ostream& out, const Integer& v) {
  const char sign = sgn(v) < 0 ? 1 : 0;
  out.put(sign);
  std::size_t count = 0;
  std::vector<unsigned char> bytes((mpz_sizeinbase(v.get_mpz_t(), 2) + 7) / 8 + 1);
  mpz_export(bytes.data(), &count, -1, 1, -1, 0, v.get_mpz_t());
  put_u32(out, static_cast<std::uint32_t>(count));
  out.write(reinterpret_cast<const char*>(bytes.data()), static_cast<std::streamsize>(count));
}

Integer get_integer(std::istream& in) {
  const int sign = in.get();
  if (sign != 0 && sign != 1) throw Error(ErrorKind::Io, "bad integer sign byte in basis cache");
  const std::uint32_t count = get_u32(in);
  if (count > kMaxIntegerBytes) throw Error(ErrorKind::Io, "oversized integer in basis cache");
  std::vector<unsigned char> bytes(count);
  if (count && !in.read(reinterpret_cast<char*>(bytes.data()), count)) {
    throw Error(ErrorKind::Io, "truncated basis cache");
  }
  Integer v;
  if (count) mpz_import(v.get_mpz_t(), count, -1, 1, -1, 0, bytes.data());
  return sign ? Integer(-v) : v;
}

void put_matrix(std::ostream& out, const RationalMatrix& m) {
  for (std::size_t r = 0; r < m.rows(); ++r) {
    for (std::size_t c = 0; c < m.cols(); ++c) {
      put_integer(out, m(r, c).numerator());
      put_integer(out, m(r, c).denominator());
    }
  }
}

RationalMatrix get_matrix(std::istream& in, std::size_t size) {
  RationalMatrix m(size, size);
  for (std::size_t r = 0; r < size; ++r) {
    for (std::size_t c = 0; c < size; ++c) {
      Integer num = get_integer(in);
      Integer den = get_integer(in);
      if (den <= 0) throw Error(ErrorKind::Io, "non-positive denominator in basis cache");
      m(r, c) = Rational(num, den);
    }
  }
  return m;
}

}  // namespace

void write_basis(std::ostream& out, const SubdivisionBasis& basis) {
  out.write(kMagic.data(), kMagic.size());
  put_u32(out, kBasisCacheVersion);
  const MultiDegree& d = basis.degree();
  put_u32(out, static_cast<std::uint32_t>(d.nvars()));
  for (auto e : d.degree()) put_u32(out, static_cast<std::uint32_t>(e));
  for (std::size_t axis = 0; axis < d.nvars(); ++axis) {
    put_matrix(out, basis.left(axis));
    put_matrix(out, basis.right(axis));
  }
  if (!out) throw Error(ErrorKind::Io, "failed to write basis cache");
}

SubdivisionBasis read_basis(std::istream& in) {
  std::array<char, 4> magic{};
  if (!in.read(magic.data(), magic.size()) || magic != kMagic) {
    throw Error(ErrorKind::Io, "not a subdivision basis cache");
  }
  const std::uint32_t version = get_u32(in);
  if (version != kBasisCacheVersion) {
    throw Error(ErrorKind::Io, "unsupported basis cache version " + std::to_string(version));
  }
  const std::uint32_t n = get_u32(in);
  if (n == 0 || n > kMaxAxes) throw Error(ErrorKind::Io, "bad axis count in basis cache");
  std::vector<std::int64_t> degree(n);
  for (auto& e : degree) {
    e = get_u32(in);
    if (e > kMaxAxisDegree) throw Error(ErrorKind::Io, "bad degree in basis cache");
  }
  MultiDegree d{MultiIndex(degree)};
  std::vector<RationalMatrix> left;
  std::vector<RationalMatrix> right;
  for (std::size_t axis = 0; axis < n; ++axis) {
    left.push_back(get_matrix(in, d.dims()[axis]));
    right.push_back(get_matrix(in, d.dims()[axis]));
  }
  try {
    return SubdivisionBasis(std::move(d), std::move(left), std::move(right));
  } catch (const Error& e) {
    throw Error(ErrorKind::Io, std::string("invalid basis cache: ") + e.what());
  }
}

void save_basis(const std::filesystem::path& path, const SubdivisionBasis& basis) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Error(ErrorKind::Io, "cannot open " + path.string() + " for writing");
  write_basis(out, basis);
}

SubdivisionBasis load_basis(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorKind::Io, "cannot open " + path.string());
  return read_basis(in);
}

}  // namespace bpsolve
