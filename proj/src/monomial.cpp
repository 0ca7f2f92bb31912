/* SPDX-License-Identifier: Apache-2.0 */

#include "bpsolve/monomial.hpp"

#include "bpsolve/error.hpp"

namespace bpsolve {

MonomialPoly MonomialPoly::constant(std::size_t nvars, const Rational& c) {
  MonomialPoly p(nvars);
  p.add_term(MultiIndex(nvars), c);
  return p;
}

MonomialPoly MonomialPoly::variable(std::size_t nvars, std::size_t axis) {
  if (axis >= nvars) throw Error(ErrorKind::OutOfRange, "variable index out of range");
  MultiIndex e(nvars);
  e.set(axis, 1);
  MonomialPoly p(nvars);
  p.add_term(e, Rational(1));
  return p;
}

Rational MonomialPoly::coefficient(const MultiIndex& exponent) const {
  auto it = terms_.find(exponent);
  return it == terms_.end() ? Rational(0) : it->second;
}

void MonomialPoly::add_term(const MultiIndex& exponent, const Rational& c) {
  if (exponent.size() != nvars_) {
    throw Error(ErrorKind::InvalidArgument, "exponent length does not match variable count");
  }
  if (c.is_zero()) return;
  auto [it, inserted] = terms_.try_emplace(exponent, c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

MultiIndex MonomialPoly::multidegree() const {
  MultiIndex d(nvars_);
  for (const auto& [e, c] : terms_) d = componentwise_max(d, e);
  return d;
}

Rational MonomialPoly::evaluate(std::span<const Rational> x) const {
  if (x.size() != nvars_) throw Error(ErrorKind::InvalidArgument, "point dimension mismatch");
  Rational sum;
  for (const auto& [e, c] : terms_) {
    Rational term = c;
    for (std::size_t i = 0; i < nvars_; ++i) {
      if (e[i]) term *= x[i].pow(static_cast<unsigned>(e[i]));
    }
    sum += term;
  }
  return sum;
}

Rational MonomialPoly::evaluate(const IntVector& z) const {
  RationalVector x(z.begin(), z.end());
  return evaluate(x);
}

MonomialPoly MonomialPoly::pow(unsigned exponent) const {
  MonomialPoly result = constant(nvars_, Rational(1));
  MonomialPoly base = *this;
  while (exponent) {
    if (exponent & 1U) result = result * base;
    exponent >>= 1U;
    if (exponent) base = base * base;
  }
  return result;
}

MonomialPoly MonomialPoly::pull_back(std::span<const Rational> offset,
                                     std::span<const Rational> scale) const {
  if (offset.size() != nvars_ || scale.size() != nvars_) {
    throw Error(ErrorKind::InvalidArgument, "pull-back map dimension mismatch");
  }
  // (offset_i + scale_i x_i)^e expanded per axis and exponent, cached.
  std::vector<std::map<std::int64_t, RationalVector>> cache(nvars_);
  auto expansion = [&](std::size_t axis, std::int64_t e) -> const RationalVector& {
    auto it = cache[axis].find(e);
    if (it != cache[axis].end()) return it->second;
    RationalVector coeffs(static_cast<std::size_t>(e) + 1);
    Integer binom = 1;
    for (std::int64_t j = 0; j <= e; ++j) {
      coeffs[j] = Rational(binom) * offset[axis].pow(static_cast<unsigned>(e - j)) *
                  scale[axis].pow(static_cast<unsigned>(j));
      binom = binom * (e - j) / (j + 1);
    }
    return cache[axis].emplace(e, std::move(coeffs)).first->second;
  };

  MonomialPoly out(nvars_);
  for (const auto& [e, c] : terms_) {
    MonomialPoly term = constant(nvars_, c);
    for (std::size_t i = 0; i < nvars_; ++i) {
      if (e[i] == 0) continue;
      const RationalVector& uni = expansion(i, e[i]);
      MonomialPoly factor(nvars_);
      for (std::size_t j = 0; j < uni.size(); ++j) {
        MultiIndex mono(nvars_);
        mono.set(i, static_cast<std::int64_t>(j));
        factor.add_term(mono, uni[j]);
      }
      term = term * factor;
    }
    out += term;
  }
  return out;
}

bool MonomialPoly::has_integer_coefficients() const {
  for (const auto& [e, c] : terms_) {
    if (!c.is_integer()) return false;
  }
  return true;
}

Integer MonomialPoly::denominator_lcm() const {
  Integer l = 1;
  for (const auto& [e, c] : terms_) {
    mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), c.denominator().get_mpz_t());
  }
  return l;
}

std::string MonomialPoly::str(const std::vector<std::string>& names) const {
  if (terms_.empty()) return "0";
  std::string out;
  bool first = true;
  // Highest exponents first reads more naturally.
  for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
    const auto& [e, c] = *it;
    Rational mag = c.abs();
    if (first) {
      if (c.sign() < 0) out += "-";
    } else {
      out += c.sign() < 0 ? " - " : " + ";
    }
    first = false;
    std::string mono;
    for (std::size_t i = 0; i < nvars_; ++i) {
      if (!e[i]) continue;
      if (!mono.empty()) mono += "*";
      mono += i < names.size() ? names[i] : "x" + std::to_string(i + 1);
      if (e[i] > 1) mono += "^" + std::to_string(e[i]);
    }
    if (mono.empty()) {
      out += mag.str();
    } else if (mag == Rational(1)) {
      out += mono;
    } else {
      out += (mag.is_integer() ? mag.str() : "(" + mag.str() + ")") + "*" + mono;
    }
  }
  return out;
}

void MonomialPoly::check_compatible(const MonomialPoly& o) const {
  if (o.nvars_ != nvars_) throw Error(ErrorKind::InvalidArgument, "variable count mismatch");
}

MonomialPoly& MonomialPoly::operator+=(const MonomialPoly& o) {
  check_compatible(o);
  for (const auto& [e, c] : o.terms_) add_term(e, c);
  return *this;
}

MonomialPoly& MonomialPoly::operator-=(const MonomialPoly& o) {
  check_compatible(o);
  for (const auto& [e, c] : o.terms_) add_term(e, -c);
  return *this;
}

MonomialPoly& MonomialPoly::operator*=(const Rational& c) {
  if (c.is_zero()) {
    terms_.clear();
    return *this;
  }
  for (auto& [e, v] : terms_) v *= c;
  return *this;
}

MonomialPoly MonomialPoly::operator-() const {
  MonomialPoly out = *this;
  for (auto& [e, v] : out.terms_) v = -v;
  return out;
}

MonomialPoly operator*(const MonomialPoly& a, const MonomialPoly& b) {
  a.check_compatible(b);
  MonomialPoly out(a.nvars_);
  for (const auto& [ea, ca] : a.terms_) {
    for (const auto& [eb, cb] : b.terms_) {
      std::vector<std::int64_t> e(a.nvars_);
      for (std::size_t i = 0; i < a.nvars_; ++i) e[i] = ea[i] + eb[i];
      out.add_term(MultiIndex(std::move(e)), ca * cb);
    }
  }
  return out;
}

}  // namespace bpsolve
