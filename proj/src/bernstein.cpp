/* SPDX-License-Identifier: Apache-2.0 */

#include "bpsolve/bernstein.hpp"

#include <algorithm>

#include "bpsolve/error.hpp"

namespace bpsolve {

BinomialTable::BinomialTable(std::size_t max_n) : rows_(max_n + 1) {
  for (std::size_t n = 0; n <= max_n; ++n) {
    rows_[n].resize(n + 1);
    rows_[n][0] = 1;
    rows_[n][n] = 1;
    for (std::size_t k = 1; k < n; ++k) rows_[n][k] = rows_[n - 1][k - 1] + rows_[n - 1][k];
  }
}

const Integer& BinomialTable::operator()(std::size_t n, std::size_t k) const {
  if (n >= rows_.size() || k > n) throw Error(ErrorKind::OutOfRange, "binomial out of table range");
  return rows_[n][k];
}

BernsteinForm::BernsteinForm(MultiDegree degree, RationalVector coeffs)
    : degree_(std::move(degree)), coeffs_(std::move(coeffs)) {
  if (coeffs_.size() != degree_.basis_size()) {
    throw Error(ErrorKind::InvalidArgument,
                "expected " + std::to_string(degree_.basis_size()) + " Bernstein coefficients, got " +
                    std::to_string(coeffs_.size()));
  }
}

BernsteinForm BernsteinForm::constant(const MultiDegree& degree, const Rational& c) {
  return BernsteinForm(degree, RationalVector(degree.basis_size(), c));
}

BernsteinForm operator+(const BernsteinForm& a, const BernsteinForm& b) {
  if (!(a.degree_ == b.degree_)) throw Error(ErrorKind::DegreeMismatch, "adding forms of different degree");
  RationalVector out = a.coeffs_;
  for (std::size_t i = 0; i < out.size(); ++i) out[i] += b.coeffs_[i];
  return BernsteinForm(a.degree_, std::move(out));
}

namespace {

std::size_t max_degree(const MultiDegree& d) {
  std::size_t m = 0;
  for (auto e : d.degree()) m = std::max(m, static_cast<std::size_t>(e));
  return m;
}

// Monomial-to-Bernstein change of basis for one axis: T[k][i] = C(k,i)/C(d,i).
RationalMatrix conversion_matrix(std::size_t d, const BinomialTable& binom) {
  RationalMatrix t(d + 1, d + 1);
  for (std::size_t k = 0; k <= d; ++k) {
    for (std::size_t i = 0; i <= k; ++i) t(k, i) = Rational(binom(k, i), binom(d, i));
  }
  return t;
}

}  // namespace

BernsteinForm to_bernstein(const MonomialPoly& p, const MultiDegree& d) {
  if (p.nvars() != d.nvars()) {
    throw Error(ErrorKind::InvalidArgument, "polynomial and degree have different variable counts");
  }
  if (!componentwise_le(p.multidegree(), d.degree())) {
    throw Error(ErrorKind::DegreeOverflow, "polynomial multidegree " + p.multidegree().str() +
                                               " exceeds " + d.degree().str());
  }
  RationalVector tensor(d.basis_size());
  for (const auto& [e, c] : p.terms()) tensor[d.flat_index(e)] = c;

  const BinomialTable binom(max_degree(d));
  for (std::size_t axis = 0; axis < d.nvars(); ++axis) {
    if (d[axis] == 0) continue;
    tensor = apply_along_axis(tensor, d.dims(), axis,
                              conversion_matrix(static_cast<std::size_t>(d[axis]), binom));
  }
  return BernsteinForm(d, std::move(tensor));
}

Rational evaluate(const BernsteinForm& f, std::span<const Rational> x) {
  const MultiDegree& d = f.degree();
  if (x.size() != d.nvars()) throw Error(ErrorKind::InvalidArgument, "point dimension mismatch");
  for (const auto& xi : x) {
    if (xi < Rational(0) || xi > Rational(1)) {
      throw Error(ErrorKind::Domain, "evaluation point " + xi.str() + " outside [0,1]");
    }
  }
  const BinomialTable binom(max_degree(d));
  RationalVector tensor = f.coeffs();
  std::vector<std::size_t> dims = d.dims();
  for (std::size_t axis = 0; axis < d.nvars(); ++axis) {
    const auto deg = static_cast<std::size_t>(d[axis]);
    RationalMatrix row(1, deg + 1);
    const Rational one_minus = Rational(1) - x[axis];
    for (std::size_t k = 0; k <= deg; ++k) {
      row(0, k) = Rational(binom(deg, k)) * x[axis].pow(static_cast<unsigned>(k)) *
                  one_minus.pow(static_cast<unsigned>(deg - k));
    }
    tensor = apply_along_axis(tensor, dims, axis, row);
    dims[axis] = 1;
  }
  return tensor.front();
}

RationalMatrix elevation_step_matrix(std::size_t d) {
  // beta'_k = k/(d+1) beta_{k-1} + (1 - k/(d+1)) beta_k
  RationalMatrix m(d + 2, d + 1);
  for (std::size_t k = 0; k <= d + 1; ++k) {
    const Rational w(Integer(static_cast<unsigned long>(k)), Integer(static_cast<unsigned long>(d + 1)));
    if (k >= 1) m(k, k - 1) = w;
    if (k <= d) m(k, k) = Rational(1) - w;
  }
  return m;
}

BernsteinForm elevate(const BernsteinForm& f, const MultiDegree& target) {
  const MultiDegree& d = f.degree();
  if (target.nvars() != d.nvars()) {
    throw Error(ErrorKind::InvalidArgument, "elevation target has wrong variable count");
  }
  if (!componentwise_le(d.degree(), target.degree())) {
    throw Error(ErrorKind::DegreeDecrease,
                "cannot elevate " + d.degree().str() + " to " + target.degree().str());
  }
  RationalVector tensor = f.coeffs();
  std::vector<std::size_t> dims = d.dims();
  for (std::size_t axis = 0; axis < d.nvars(); ++axis) {
    while (dims[axis] < target.dims()[axis]) {
      tensor = apply_along_axis(tensor, dims, axis, elevation_step_matrix(dims[axis] - 1));
      ++dims[axis];
    }
  }
  return BernsteinForm(target, std::move(tensor));
}

std::pair<Rational, Rational> range_bounds(const BernsteinForm& f) {
  auto [lo, hi] = std::minmax_element(f.coeffs().begin(), f.coeffs().end());
  return {*lo, *hi};
}

const Rational& max_coefficient(const BernsteinForm& f) {
  return *std::max_element(f.coeffs().begin(), f.coeffs().end());
}

}  // namespace bpsolve
