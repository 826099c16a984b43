// Copyright 2026 the torus-squeeze authors
// SPDX-License-Identifier: Apache-2.0

#include <doctest.h>

#include <random>

#include "helpers.hpp"
#include "tsq/error.hpp"
#include "tsq/int_linalg.hpp"

using namespace tsq;

TEST_CASE("determinant on the anchor matrices") {
  CHECK(mat_det(IntMat::identity(3)) == 1);
  CHECK(mat_det(IntMat{{2, 1}, {1, 1}}) == 1);
  CHECK(mat_det(IntMat{{2, 3, 5}, {1, 2, 0}, {0, 0, 1}}) == 1);
  CHECK(mat_det(IntMat{{2, 1, 3}, {3, 2, 5}, {2, 1, 4}}) == 1);
  CHECK(mat_det(IntMat{{0, 1}, {1, 0}}) == -1);
}

TEST_CASE("Bareiss and cofactor routes agree on random matrices") {
  std::mt19937_64 rng(5);
  for (int t = 0; t < 200; ++t) {
    IntMat m = tsq::testing::random_sl(rng, 4 + t % 4, 12);
    CHECK(mat_det(m) == 1);  // products of shears stay unimodular
  }
}

TEST_CASE("unimodular inverse on the worked examples") {
  CHECK(mat_inv_unimodular(IntMat::identity(4)) == IntMat::identity(4));
  IntMat m{{2, 3, 5}, {1, 2, 0}, {0, 0, 1}};
  IntMat expect{{2, -3, -10}, {-1, 2, 5}, {0, 0, 1}};
  CHECK(mat_inv_unimodular(m) == expect);
  CHECK(m * expect == IntMat::identity(3));
  CHECK(mat_inv_unimodular(IntMat{{2, 1}, {1, 1}}) == IntMat{{1, -1}, {-1, 2}});
  CHECK_THROWS_AS(mat_inv_unimodular(IntMat{{2, 0}, {0, 1}}), Error);
}

TEST_CASE("inverse round-trips on random unimodular products") {
  std::mt19937_64 rng(11);
  for (int t = 0; t < 1000; ++t) {
    int n = 2 + t % 5;
    IntMat m = tsq::testing::random_sl(rng, n, 10);
    IntMat inv = mat_inv_unimodular(m);
    CHECK(m * inv == IntMat::identity(n));
    CHECK(mat_inv_unimodular(inv) == m);
  }
}

TEST_CASE("row-vector action and powers") {
  IntMat cat{{2, 1}, {1, 1}};
  IntVec p{3, 2};
  IntVec out = vec_mat(p, cat);
  CHECK(out[0] == 8);
  CHECK(out[1] == 5);
  CHECK(mat_pow(cat, 0) == IntMat::identity(2));
  CHECK(mat_pow(cat, 3) == cat * cat * cat);
}
