#include <doctest.h>

#include "helpers.hpp"
#include "kmflat/error.hpp"
#include "kmflat/realization.hpp"

using namespace kmflat;
using testing::gcm;
using testing::qv;

TEST_CASE("realization examples") {
  const auto a1 = build_realization(gcm({{2}}));
  CHECK(a1.dim == 1);
  CHECK(a1.roots[0] == qv({2}));

  const auto aff = build_realization(gcm({{2, -2}, {-2, 2}}));
  CHECK(aff.dim == 3);
  CHECK(aff.coroots[0] == qv({1, 0, 0}));
  CHECK(aff.coroots[1] == qv({0, 1, 0}));
  CHECK(aff.roots[0] == qv({2, -2, 0}));
  CHECK(aff.roots[1] == qv({-2, 2, 1}));
  CHECK(aff.pair(0, qv({1, 0, 0})) == 2);
  CHECK(aff.pair(1, qv({0, 0, 1})) == 1);
  CHECK(aff.pair(0, qv({0, 0, 1})) == 0);
  CHECK_THROWS_AS(aff.pair(2, qv({0, 0, 1})), KmError);

  const auto a2 = build_realization(gcm({{2, -1}, {-1, 2}}));
  CHECK(a2.dim == 2);
  CHECK(a2.roots[0] == qv({2, -1}));
  CHECK(a2.roots[1] == qv({-1, 2}));
}

TEST_CASE("bilinear form examples") {
  const auto a1 = gcm({{2}});
  CHECK(build_bilinear_form(build_realization(a1), symmetrize(a1)).gram == RationalMatrix::from_rows({qv({2})}));

  const auto aff = gcm({{2, -2}, {-2, 2}});
  const auto g = build_bilinear_form(build_realization(aff), symmetrize(aff));
  CHECK(g.gram == RationalMatrix::from_rows({qv({2, -2, 0}), qv({-2, 2, 1}), qv({0, 1, 0})}));
  CHECK(g.determinant == -2);

  const auto a2 = gcm({{2, -1}, {-1, 2}});
  const auto g2 = build_bilinear_form(build_realization(a2), symmetrize(a2));
  CHECK(g2.determinant == 3);
}

TEST_CASE("pairing reproduces the matrix and dimensions follow 2n - l") {
  std::mt19937_64 rng(21);
  for (int trial = 0; trial < 120; ++trial) {
    const std::size_t n = 1 + trial % 5;
    const auto raw = testing::random_gcm(rng, n, 4);
    const auto m = gcm(raw);
    const auto rd = build_realization(m);
    const auto l = oracle::rank(oracle::to_q(raw));
    CHECK(rd.rank == l);
    CHECK(rd.dim == 2 * n - l);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) CHECK(dot(rd.roots[j], rd.coroots[i]) == Rational(raw[i][j]));
    CHECK(rank(rd.root_matrix()) == n);
    CHECK(rank(RationalMatrix::from_rows(rd.coroots)) == n);
  }
}

TEST_CASE("gram matrix of symmetrizable matrices is symmetric and non-degenerate") {
  std::mt19937_64 rng(22);
  for (int trial = 0; trial < 60; ++trial) {
    const auto raw = testing::random_symmetrizable_gcm(rng, 1 + trial % 5);
    const auto m = gcm(raw);
    const auto rd = build_realization(m);
    const auto form = build_bilinear_form(rd, symmetrize(m));
    CHECK(form.gram.is_symmetric());
    CHECK(form.determinant != 0);
    oracle::QMatrix q(rd.dim, std::vector<oracle::Q>(rd.dim));
    for (std::size_t i = 0; i < rd.dim; ++i)
      for (std::size_t j = 0; j < rd.dim; ++j) q[i][j] = form.gram(i, j);
    CHECK(form.determinant == oracle::cofactor_det(q));
  }
}
