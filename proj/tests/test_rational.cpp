#include <doctest.h>

#include "helpers.hpp"
#include "kmflat/error.hpp"
#include "kmflat/rational.hpp"

using namespace kmflat;
using testing::qv;

TEST_CASE("rational literals") {
  CHECK(parse_rational("3") == Rational(3));
  CHECK(parse_rational("-6/4") == Rational(-3, 2));
  CHECK(parse_rational("0.25") == Rational(1, 4));
  CHECK(parse_rational(" -1.5 ") == Rational(-3, 2));
  CHECK_THROWS_AS(parse_rational("abc"), KmError);
  CHECK_THROWS_AS(parse_rational("1/0"), KmError);
  CHECK(to_string(Rational(-3, 2)) == "-3/2");
  CHECK(to_string(Rational(4)) == "4");
}

TEST_CASE("determinant matches cofactor expansion") {
  std::mt19937_64 rng(11);
  std::uniform_int_distribution<long> e(-5, 5);
  for (int trial = 0; trial < 50; ++trial) {
    const std::size_t n = 1 + trial % 5;
    oracle::QMatrix raw(n, std::vector<oracle::Q>(n));
    RationalMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) m(i, j) = raw[i][j] = e(rng);
    CHECK(determinant(m) == oracle::cofactor_det(raw));
    CHECK(rank(m) == oracle::rank(raw));
    if (determinant(m) != 0) {
      const auto inv = inverse(m);
      REQUIRE(inv);
      CHECK(m * *inv == RationalMatrix::identity(n));
    } else {
      CHECK_FALSE(inverse(m));
    }
  }
}

TEST_CASE("kernel and solve") {
  const auto m = RationalMatrix::from_rows({qv({2, -2, 0}), qv({-2, 2, 1})});
  const auto k = kernel_basis(m);
  REQUIRE(k.size() == 1);
  CHECK(is_zero(m * k[0]));
  const auto x = solve(m, qv({1, 0}));
  REQUIRE(x);
  CHECK(m * *x == qv({1, 0}));
  const auto singular = RationalMatrix::from_rows({qv({1, 1}), qv({2, 2})});
  CHECK_FALSE(solve(singular, qv({1, 0})));
  CHECK(same_span({qv({1, 1, 0})}, {qv({-3, -3, 0})}, 3));
  CHECK_FALSE(same_span({qv({1, 1, 0})}, {qv({1, 0, 0})}, 3));
}

TEST_CASE("primitive integer direction") {
  const RationalVector v{Rational(1, 2), Rational(-3, 4), Rational(0)};
  CHECK(primitive_integer_direction(v) == testing::iv({2, -3, 0}));
}
