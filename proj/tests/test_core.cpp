/* SPDX-License-Identifier: Apache-2.0 */

#include <doctest.h>

#include <set>
#include <type_traits>

#include "bpsolve/error.hpp"
#include "bpsolve/lattice_box.hpp"
#include "support/generators.hpp"

using namespace bpsolve;

namespace {

Region region(std::initializer_list<Rational> lo, std::initializer_list<Rational> hi) {
  return Region{RationalVector(lo), RationalVector(hi)};
}

IntVector ints(std::initializer_list<long> v) {
  IntVector out;
  for (long x : v) out.emplace_back(x);
  return out;
}

}  // namespace

TEST_CASE("rational canonical form") {
  const Rational r(Integer(6), Integer(-4));
  CHECK(r.numerator() == -3);
  CHECK(r.denominator() == 2);
  CHECK(r == Rational::parse("-3/2"));
  CHECK(Rational::parse("-1.25") == Rational(Integer(-5), Integer(4)));
  CHECK(Rational::parse("0.35") == Rational(Integer(7), Integer(20)));
  CHECK(Rational::parse("12").is_integer());
  CHECK(Rational(Integer(7), Integer(20)).str() == "7/20");
  CHECK_THROWS_AS(Rational(Integer(1), Integer(0)), Error);
  CHECK_THROWS_AS(Rational::parse("1/x"), Error);
  CHECK_THROWS_AS(Rational::parse("."), Error);
  CHECK_THROWS_AS(Rational(1) / Rational(0), Error);
  CHECK(Rational(Integer(-7), Integer(2)).floor() == -4);
}

TEST_CASE("rational has no floating point door") {
  static_assert(!std::is_constructible_v<Rational, double>);
  static_assert(!std::is_constructible_v<Rational, float>);
  static_assert(!std::is_constructible_v<Rational, long double>);
  static_assert(!std::is_convertible_v<Rational, double>);
}

TEST_CASE("rational arithmetic round-trips on big operands") {
  testing::Gen g(11);
  for (int i = 0; i < 200; ++i) {
    Integer a(static_cast<long>(g.integer(-1'000'000'000, 1'000'000'000)));
    Integer b(static_cast<long>(g.integer(1, 1'000'000'000)));
    a *= pow2(static_cast<unsigned long>(g.integer(0, 200)));
    b *= pow2(static_cast<unsigned long>(g.integer(0, 200)));
    const Rational p(a, b);
    const Rational q = g.rational(1'000'000, 1'000'000) * Rational(pow2(90));
    CHECK((p + q) - q == p);
    CHECK((p * Rational(3)) / Rational(3) == p);
    if (!q.is_zero()) CHECK((p / q) * q == p);
  }
}

TEST_CASE("extended rational orders negative infinity first") {
  const ExtendedRational ninf;
  CHECK(ninf < ExtendedRational(Rational(-1'000'000)));
  CHECK(ninf == ExtendedRational::neg_infinity());
  CHECK(ExtendedRational(Rational(2)) > ExtendedRational(Rational(1)));
  CHECK(ninf.str() == "-inf");
}

TEST_CASE("ceil_log2 and pow2") {
  CHECK(ceil_log2(Integer(1)) == 0);
  CHECK(ceil_log2(Integer(2)) == 1);
  CHECK(ceil_log2(Integer(9)) == 4);
  CHECK(ceil_log2(Integer(16)) == 4);
  CHECK(ceil_log2(Integer(17)) == 5);
  CHECK(pow2(62) == Integer("4611686018427387904"));
}

TEST_CASE("multi-index orders") {
  const MultiIndex a{1, 2};
  const MultiIndex b{2, 0};
  CHECK(a < b);
  CHECK_FALSE(componentwise_le(a, b));
  CHECK(componentwise_le(MultiIndex{1, 0}, b));
  CHECK(componentwise_max(a, b) == MultiIndex{2, 2});
  CHECK(MultiIndex{3, 5, 5}.argmax() == 1);
  CHECK_THROWS_AS(MultiIndex({1, -1}), Error);
}

TEST_CASE("multi-degree flattening is lexicographic") {
  const MultiDegree d{2, 1, 3};
  CHECK(d.basis_size() == 3 * 2 * 4);
  std::size_t pos = 0;
  MultiIndex prev;
  for (std::int64_t i = 0; i <= 2; ++i) {
    for (std::int64_t j = 0; j <= 1; ++j) {
      for (std::int64_t k = 0; k <= 3; ++k) {
        const MultiIndex idx{i, j, k};
        CHECK(d.flat_index(idx) == pos);
        CHECK(d.unflatten(pos) == idx);
        ++pos;
      }
    }
  }
  CHECK_THROWS_AS(d.flat_index(MultiIndex{3, 0, 0}), Error);
}

TEST_CASE("box_realize") {
  SUBCASE("root box") {
    const auto b = LatticeBox::make(ints({0, 0}), {1, 1}, {0, 0}, {1, 1});
    CHECK(b.realize() == region({0, 0}, {2, 2}));
  }
  SUBCASE("unit leaf") {
    const auto b = LatticeBox::make(ints({0, 0}), {3, 3}, {2, 4}, {0, 0});
    CHECK(b.realize() == region({2, 4}, {3, 5}));
    CHECK(b.is_unit());
  }
  SUBCASE("negative anchor") {
    const auto b = LatticeBox::make(ints({-4}), {2}, {1}, {1});
    CHECK(b.realize() == region({-2}, {0}));
  }
  SUBCASE("invalid parameters give the empty box") {
    CHECK(LatticeBox::make(ints({0}), {2}, {0}, {3}).is_empty());
    CHECK(LatticeBox::make(ints({0}), {2}, {2}, {1}).is_empty());
    CHECK_FALSE(LatticeBox::make(ints({0}), {2}, {1}, {1}).is_empty());
    CHECK(LatticeBox().realize() == std::nullopt);
  }
  SUBCASE("exponent limit") {
    CHECK_THROWS_AS(LatticeBox::root(ints({0}), {63}), Error);
    CHECK_NOTHROW(LatticeBox::root(ints({0}), {62}));
    CHECK_THROWS_AS(LatticeBox::root(ints({0}), {10}, 8), Error);
  }
}

TEST_CASE("box_children") {
  SUBCASE("halving the root") {
    const auto root = LatticeBox::root(ints({0, 0}), {1, 1});
    const auto [l, r] = root.children(0);
    CHECK(l.realize() == region({0, 0}, {1, 2}));
    CHECK(r.realize() == region({1, 0}, {2, 2}));
  }
  SUBCASE("second axis of an inner box") {
    const auto b = LatticeBox::make(ints({0, 0}), {3, 3}, {1, 0}, {1, 3});
    REQUIRE(b.realize() == region({2, 0}, {4, 8}));
    const auto [l, r] = b.children(1);
    CHECK(l.realize() == region({2, 0}, {4, 4}));
    CHECK(r.realize() == region({2, 4}, {4, 8}));
    CHECK(l.offset() == MultiIndex{1, 0});
    CHECK(r.offset() == MultiIndex{1, 1});
  }
  SUBCASE("indivisible axis") {
    const auto b = LatticeBox::make(ints({0, 0}), {3, 3}, {2, 4}, {0, 0});
    try {
      (void)b.children(0);
      FAIL("expected an error");
    } catch (const Error& e) {
      CHECK(e.kind() == ErrorKind::IndivisibleAxis);
    }
  }
}

TEST_CASE("children partition the parent") {
  testing::Gen g(3);
  for (int trial = 0; trial < 100; ++trial) {
    const std::size_t n = static_cast<std::size_t>(g.integer(1, 3));
    IntVector a;
    std::vector<std::int64_t> k(n), kp(n), l(n);
    for (std::size_t i = 0; i < n; ++i) {
      a.emplace_back(static_cast<long>(g.integer(-10, 10)));
      k[i] = g.integer(1, 5);
      kp[i] = g.integer(1, k[i]);
      l[i] = g.integer(0, (std::int64_t{1} << (k[i] - kp[i])) - 1);
    }
    const auto b = LatticeBox::make(a, MultiIndex(k), MultiIndex(l), MultiIndex(kp));
    REQUIRE_FALSE(b.is_empty());
    const std::size_t j = static_cast<std::size_t>(g.integer(0, static_cast<std::int64_t>(n) - 1));
    const auto parent = *b.realize();
    const auto [left, right] = b.children(j);
    const auto lr = *left.realize();
    const auto rr = *right.realize();
    const Rational mid = (parent.lower[j] + parent.upper[j]) / Rational(2);
    CHECK(lr.lower == parent.lower);
    CHECK(rr.upper == parent.upper);
    CHECK(lr.upper[j] == mid);
    CHECK(rr.lower[j] == mid);
    for (std::size_t i = 0; i < n; ++i) {
      if (i == j) continue;
      CHECK(lr.lower[i] == parent.lower[i]);
      CHECK(rr.upper[i] == parent.upper[i]);
    }
  }
}

TEST_CASE("repeated halving enumerates the lattice") {
  const IntVector a = ints({-3, 5});
  const MultiIndex k{2, 3};
  std::vector<LatticeBox> work{LatticeBox::root(a, k)};
  std::set<IntVector> corners;
  std::size_t leaves = 0;
  while (!work.empty()) {
    LatticeBox b = work.back();
    work.pop_back();
    if (b.is_unit()) {
      ++leaves;
      corners.insert(b.lower_corner());
      continue;
    }
    auto [l, r] = b.children(b.sub_scale().argmax());
    work.push_back(l);
    work.push_back(r);
  }
  CHECK(leaves == 32);
  std::set<IntVector> expected;
  for (long x = 0; x < 4; ++x) {
    for (long y = 0; y < 8; ++y) expected.insert(ints({-3 + x, 5 + y}));
  }
  CHECK(corners == expected);
}
