/* SPDX-License-Identifier: Apache-2.0 */

#include <doctest.h>

#include "bpsolve/bernstein.hpp"
#include "bpsolve/error.hpp"
#include "support/generators.hpp"

using namespace bpsolve;

namespace {

Rational q(long p, long d = 1) { return Rational(Integer(p), Integer(d)); }

MonomialPoly univariate(std::initializer_list<Rational> coeffs) {
  MonomialPoly p(1);
  std::int64_t e = 0;
  for (const auto& c : coeffs) p.add_term(MultiIndex{e++}, c);
  return p;
}

// -x^2 + x - 7/20
MonomialPoly worked_example() { return univariate({q(-7, 20), q(1), q(-1)}); }

// Independent evaluation of sum_k beta_k B_{d,k}(x): every basis function is
// expanded as a product of factorial-based binomials and powers.
Rational bernstein_sum(const BernsteinForm& f, const RationalVector& x) {
  auto choose = [](std::int64_t n, std::int64_t k) {
    Integer r;
    mpz_bin_uiui(r.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
    return Rational(r);
  };
  Rational sum;
  const MultiDegree& d = f.degree();
  for (std::size_t pos = 0; pos < d.basis_size(); ++pos) {
    const MultiIndex k = d.unflatten(pos);
    Rational b(1);
    for (std::size_t i = 0; i < d.nvars(); ++i) {
      b *= choose(d[i], k[i]) * x[i].pow(static_cast<unsigned>(k[i])) *
           (Rational(1) - x[i]).pow(static_cast<unsigned>(d[i] - k[i]));
    }
    sum += f[pos] * b;
  }
  return sum;
}

}  // namespace

TEST_CASE("binomial table") {
  const BinomialTable t(10);
  CHECK(t(10, 3) == 120);
  CHECK(t(0, 0) == 1);
  CHECK_THROWS_AS(t(11, 1), Error);
}

TEST_CASE("to_bernstein examples") {
  SUBCASE("worked example in degree 2") {
    const auto f = to_bernstein(worked_example(), MultiDegree{2});
    CHECK(f.coeffs() == RationalVector{q(-7, 20), q(3, 20), q(-7, 20)});
  }
  SUBCASE("constants fill every coefficient") {
    const MultiDegree d{2, 3};
    const auto f = to_bernstein(MonomialPoly::constant(2, q(5, 3)), d);
    CHECK(f.coeffs() == RationalVector(d.basis_size(), q(5, 3)));
  }
  SUBCASE("xy is the top basis element") {
    MonomialPoly xy(2);
    xy.add_term(MultiIndex{1, 1}, q(1));
    const auto f = to_bernstein(xy, MultiDegree{1, 1});
    CHECK(f.coeffs() == RationalVector{q(0), q(0), q(0), q(1)});
  }
  SUBCASE("degree overflow") {
    try {
      (void)to_bernstein(worked_example(), MultiDegree{1});
      FAIL("expected overflow");
    } catch (const Error& e) {
      CHECK(e.kind() == ErrorKind::DegreeOverflow);
    }
  }
}

TEST_CASE("evaluate examples") {
  const auto f = to_bernstein(worked_example(), MultiDegree{2});
  CHECK(evaluate(f, RationalVector{q(1, 2)}) == q(-1, 10));
  CHECK(evaluate(f, RationalVector{q(0)}) == f.first());
  const auto c = BernsteinForm::constant(MultiDegree{3, 1}, q(-4, 7));
  CHECK(evaluate(c, RationalVector{q(1, 3), q(5, 6)}) == q(-4, 7));
  try {
    (void)evaluate(f, RationalVector{q(3, 2)});
    FAIL("expected domain error");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::Domain);
  }
}

TEST_CASE("elevate examples") {
  const auto f = to_bernstein(worked_example(), MultiDegree{2});
  CHECK(elevate(f, MultiDegree{3}).coeffs() == RationalVector{q(-7, 20), q(-1, 60), q(-1, 60), q(-7, 20)});
  CHECK(elevate(f, MultiDegree{2}) == f);
  const auto x = to_bernstein(univariate({q(0), q(1)}), MultiDegree{1});
  REQUIRE(x.coeffs() == RationalVector{q(0), q(1)});
  const auto x2 = elevate(x, MultiDegree{2});
  CHECK(x2.coeffs() == RationalVector{q(0), q(1, 2), q(1)});
  for (const auto& t : {q(0), q(1, 2), q(1)}) CHECK(evaluate(x2, RationalVector{t}) == t);
  try {
    (void)elevate(f, MultiDegree{1});
    FAIL("expected degree decrease error");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::DegreeDecrease);
  }
}

TEST_CASE("range_bounds examples") {
  const auto f = to_bernstein(worked_example(), MultiDegree{2});
  CHECK(range_bounds(f) == std::pair{q(-7, 20), q(3, 20)});
  CHECK(range_bounds(BernsteinForm::constant(MultiDegree{2}, q(4))) == std::pair{q(4), q(4)});
  const auto [lo, hi] = range_bounds(elevate(f, MultiDegree{3}));
  CHECK(lo == q(-7, 20));
  CHECK(hi == q(-1, 60));
  // The true maximum -1/10 sits inside and the bound already certifies p < 0.
  CHECK(lo <= q(-1, 10));
  CHECK(q(-1, 10) <= hi);
  CHECK(hi < q(0));
}

TEST_CASE("conversion, enclosure and elevation properties") {
  testing::Gen g(2024);
  for (int trial = 0; trial < 150; ++trial) {
    const std::size_t n = static_cast<std::size_t>(g.integer(1, 3));
    const MultiDegree pd = g.degree(n, 3);
    const MonomialPoly p = g.poly(pd, static_cast<std::size_t>(g.integer(0, 6)));
    std::vector<std::int64_t> up(n);
    for (std::size_t i = 0; i < n; ++i) up[i] = pd[i] + g.integer(0, 2);
    const MultiDegree d{MultiIndex(up)};
    const BernsteinForm f = to_bernstein(p, d);
    const auto [lo, hi] = range_bounds(f);

    const RationalVector origin(n, q(0));
    CHECK(f.first() == p.evaluate(origin));
    CHECK(evaluate(f, origin) == f.first());

    std::vector<std::int64_t> more(n);
    for (std::size_t i = 0; i < n; ++i) more[i] = up[i] + g.integer(0, 2);
    const BernsteinForm e = elevate(f, MultiDegree(MultiIndex(more)));
    const auto [elo, ehi] = range_bounds(e);
    CHECK(elo >= lo);
    CHECK(ehi <= hi);

    for (int s = 0; s < 10; ++s) {
      const RationalVector x = g.unit_point(n);
      const Rational v = evaluate(f, x);
      CHECK(v == p.evaluate(x));
      CHECK(v == bernstein_sum(f, x));
      CHECK(evaluate(e, x) == v);
      CHECK(lo <= v);
      CHECK(v <= hi);
    }

    const MonomialPoly other = g.poly(pd, 3);
    CHECK(to_bernstein(p + other, d) == f + to_bernstein(other, d));
  }
}

TEST_CASE("pull_back composes with evaluation") {
  testing::Gen g(5);
  for (int trial = 0; trial < 50; ++trial) {
    const std::size_t n = static_cast<std::size_t>(g.integer(1, 3));
    const MonomialPoly p = g.poly(g.degree(n, 3), 5);
    RationalVector offset, scale, x, mapped;
    for (std::size_t i = 0; i < n; ++i) {
      offset.push_back(g.rational());
      scale.push_back(g.rational());
      x.push_back(g.rational());
      mapped.push_back(offset[i] + scale[i] * x[i]);
    }
    CHECK(p.pull_back(offset, scale).evaluate(x) == p.evaluate(mapped));
  }
}

TEST_CASE("monomial helpers") {
  MonomialPoly p = univariate({q(1, 6), q(0), q(3, 4)});
  CHECK(p.denominator_lcm() == 12);
  CHECK_FALSE(p.has_integer_coefficients());
  CHECK((p * Rational(12)).has_integer_coefficients());
  CHECK(p.multidegree() == MultiIndex{2});
  CHECK((p - p).is_zero());
  CHECK(univariate({q(1), q(1)}).pow(3) == univariate({q(1), q(3), q(3), q(1)}));
  CHECK(univariate({q(-7, 20), q(1), q(-1)}).str({"x"}) == "-x^2 + x - 7/20");
}
