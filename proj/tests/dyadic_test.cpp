#include <cmath>
#include "doctest.h"
#include "walsh/dyadic.hpp"
#include "walsh/errors.hpp"
#include "walsh/transform.hpp"

using namespace walsh;

TEST_CASE("group_add is xor of indices") {
  const Resolution r(4);
  for (std::uint32_t x = 0; x < 16; ++x) {
    CHECK(group_add(DyadicPoint(x, r), DyadicPoint(x, r)).index() == 0);
  }
  CHECK(group_add(basis_point(0, r), basis_point(1, r)).index() == 3);
  CHECK(group_add(DyadicPoint(5, r), DyadicPoint(3, r)).index() == (5u ^ 3u));
  CHECK_THROWS_AS(group_add(DyadicPoint(1, r), DyadicPoint(1, Resolution(5))), ArgumentError);
}

TEST_CASE("group axioms hold exhaustively for N <= 6") {
  for (int bits = 1; bits <= 6; ++bits) {
    const Resolution r(bits);
    const auto n = static_cast<std::uint32_t>(r.cells());
    const DyadicPoint zero(0, r);
    for (std::uint32_t a = 0; a < n; ++a) {
      const DyadicPoint x(a, r);
      REQUIRE(group_add(x, zero) == x);
      REQUIRE(group_add(x, x) == zero);
      for (std::uint32_t b = 0; b < n; ++b) {
        const DyadicPoint y(b, r);
        REQUIRE(group_add(x, y) == group_add(y, x));
        for (std::uint32_t c = 0; c < n; c += 3) {
          const DyadicPoint z(c, r);
          REQUIRE(group_add(group_add(x, y), z) == group_add(x, group_add(y, z)));
        }
      }
    }
  }
}

TEST_CASE("basis points") {
  const Resolution r(4);
  CHECK(basis_point(0, r).index() == 1);
  CHECK(basis_point(1, r).index() == 2);
  CHECK(basis_point(3, r).index() == 8);
  CHECK_THROWS_AS(basis_point(4, r), ArgumentError);
  CHECK_THROWS_AS(basis_point(-1, r), ArgumentError);
}

TEST_CASE("cells") {
  const Resolution r(5);
  const DyadicPoint x = group_add(basis_point(0, r), basis_point(1, r));

  const DyadicCell whole = cell_of(x, 0);
  CHECK(whole.measure() == 1.0);
  for (std::uint32_t i = 0; i < 32; ++i) CHECK(whole.contains(i));

  const DyadicCell c = cell_of(x, 2);
  CHECK(c.prefix == 0b11);
  CHECK(c.measure() == 0.25);
  int members = 0;
  for (std::uint32_t i = 0; i < 32; ++i) members += c.contains(i);
  CHECK(members == 8);

  CHECK_THROWS_AS(cell_of(x, 6), ArgumentError);
}

TEST_CASE("rank-n cells partition the group") {
  for (int bits = 1; bits <= 6; ++bits) {
    const Resolution r(bits);
    for (int rank = 0; rank <= bits; ++rank) {
      std::vector<int> hits(r.cells(), 0);
      double total = 0.0;
      for (std::uint32_t prefix = 0; prefix < (1u << rank); ++prefix) {
        const DyadicCell cell{rank, prefix};
        total += cell.measure();
        for (std::uint32_t i = 0; i < r.cells(); ++i) hits[i] += cell.contains(i);
      }
      CHECK(total == doctest::Approx(1.0));
      for (int h : hits) REQUIRE(h == 1);
    }
  }
}

TEST_CASE("integrate") {
  const Resolution r(5);
  CHECK(integrate(DyadicFunction::constant(r, 1.0)) == 1.0);
  CHECK(integrate(DyadicFunction::indicator(r, kUpperQuarterCell)) == 0.25);
  for (int n = 0; n <= 5; ++n) {
    CHECK(integrate(dirichlet_kernel(std::uint64_t{1} << n, r).to_function()) == 1.0);
  }
}

TEST_CASE("integrate is linear and monotone") {
  const Resolution r(4);
  std::vector<double> a(16), b(16);
  for (int i = 0; i < 16; ++i) {
    a[i] = 0.25 * i - 1.0;
    b[i] = a[i] + 0.5 * (i % 3);
  }
  const DyadicFunction f(r, a), g(r, b);
  CHECK(integrate(2.0 * f + g) == doctest::Approx(2.0 * integrate(f) + integrate(g)));
  CHECK(integrate(g) >= integrate(f));
}

TEST_CASE("construction errors") {
  CHECK_THROWS_AS(Resolution(0), ArgumentError);
  CHECK_THROWS_AS(Resolution(Resolution::kMaxBits + 1), ArgumentError);
  CHECK_THROWS_AS(DyadicPoint(16, Resolution(4)), ArgumentError);
  CHECK_THROWS_AS(DyadicFunction(Resolution(2), {1.0, 2.0}), ArgumentError);
  CHECK_THROWS_AS(DyadicFunction(Resolution(1), {1.0, std::nan("")}), ArgumentError);
}
