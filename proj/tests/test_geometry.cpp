// Copyright 2026 the torus-squeeze authors
// SPDX-License-Identifier: Apache-2.0

#include <doctest.h>

#include <random>

#include "helpers.hpp"
#include "tsq/diophantine.hpp"
#include "tsq/error.hpp"
#include "tsq/geometry.hpp"
#include "tsq/unimodular.hpp"

using namespace tsq;
using tsq::testing::golden;
using tsq::testing::golden_direction;
using tsq::testing::sqrt_of;

namespace {

DirectionSpec axis_direction() {
  return normalize_direction({ScalarSpec(Rat(1)), ScalarSpec(Rat(0))});
}

Rat enclosure_hi(const ScalarSpec& s) { return scalar_enclosure(s, 40).hi(); }
Rat enclosure_lo(const ScalarSpec& s) { return scalar_enclosure(s, 40).lo(); }

}  // namespace

TEST_CASE("domain type invariants") {
  CHECK_NOTHROW(SimplexSpec(2, Rat(5)));
  CHECK_THROWS_AS(SimplexSpec(2, Rat(0)), Error);
  CHECK_THROWS_AS(SimplexSpec(0, Rat(1)), Error);
  DirectionSpec g = golden_direction();
  CHECK_NOTHROW(CylinderSpec(2, Rat(1), g));
  CHECK_THROWS_AS(CylinderSpec(2, Rat(-1), g), Error);
  CHECK_THROWS_AS(CylinderSpec(3, Rat(1), g), Error);  // dimension mismatch
  CHECK_THROWS_AS(ThinCylinderSpec(2, Rat(1), g), Error);  // needs n >= 3
  DirectionSpec g3 = normalize_direction(
      {ScalarSpec(Rat(1)), ScalarSpec(golden()), ScalarSpec(Rat(1, 2))});
  CHECK_NOTHROW(ThinCylinderSpec(3, Rat(1), g3));
}

TEST_CASE("fiber extent along an axis is exact") {
  Extent e = fiber_extent(IntMat::identity(2), Rat(2), axis_direction());
  CHECK(*scalar_as_rat(e.lo) == Rat(0));
  CHECK(*scalar_as_rat(e.hi) == Rat(2));
  CHECK(*scalar_as_rat(e.width) == Rat(2));
  CHECK(e.witness_lo == 0);
  CHECK(e.witness_hi == 1);
}

TEST_CASE("fiber extent of the inverse generator along the golden direction") {
  // the stored direction is (1, phi - 1), the (phi, 1) line divided by phi;
  // raw vertex values are 5 (2 - phi) and 5 (2 phi - 3)
  IntMat a{{1, -1}, {-1, 2}};
  Extent raw = fiber_extent_raw(a, Rat(5), golden_direction());
  QSurd expect_hi = (QSurd(Rat(2)) - golden()) * QSurd(Rat(5));
  CHECK((std::get<QSurd>(raw.hi) - expect_hi).is_zero());
  CHECK(*scalar_as_rat(raw.lo) == Rat(0));

  Extent unit = fiber_extent(a, Rat(5), golden_direction());
  CHECK(enclosure_lo(unit.width) > Rat::parse("1.624"));
  CHECK(enclosure_hi(unit.width) < Rat::parse("1.626"));
}

TEST_CASE("fiber extent of the (3,2) Bezout matrix") {
  IntMat a = bezout_matrix_2d(3, 2);
  DirectionSpec v = normalize_direction({ScalarSpec(Rat(3)), ScalarSpec(Rat(2))});
  Extent raw = fiber_extent_raw(a, Rat(1), v);
  // normalize_direction scales (3,2) to (1, 2/3); raw width is 1/3 of the
  // integer-dot version, the unit width is 1/sqrt(13) either way
  Extent unit = fiber_extent(a, Rat(1), v);
  CHECK(enclosure_lo(unit.width) > Rat::parse("0.2773"));
  CHECK(enclosure_hi(unit.width) < Rat::parse("0.2774"));
  CHECK(scalar_is_exact(raw.width));
}

TEST_CASE("vertex extremality: random simplex points stay inside the extent") {
  std::mt19937_64 rng(8);
  IntMat a{{1, -1}, {-1, 2}};
  DirectionSpec v = golden_direction();
  Rat r(5);
  Extent raw = fiber_extent_raw(a, r, v);
  auto fiber = v.fiber_entries();
  for (int t = 0; t < 1000; ++t) {
    // random rational convex combination of the vertices
    Int w0 = tsq::testing::rand_int(rng, 0, 100);
    Int w1 = tsq::testing::rand_int(rng, 0, 100);
    Int w2 = tsq::testing::rand_int(rng, 0, 100);
    Int tot = w0 + w1 + w2;
    if (tot == 0) continue;
    Rat x1 = Rat(w1, tot) * r, x2 = Rat(w2, tot) * r;
    // value = <A x, v> with x = (x1, x2)
    ScalarSpec val{Rat(0)};
    ScalarSpec coords[2] = {ScalarSpec(x1), ScalarSpec(x2)};
    for (int i = 0; i < 2; ++i)
      for (int j = 0; j < 2; ++j)
        val = val + ScalarSpec(Rat(a.at(i, j))) * coords[j] * fiber[i];
    CHECK(*scalar_compare(val, raw.lo) >= 0);
    CHECK(*scalar_compare(val, raw.hi) <= 0);
  }
}

TEST_CASE("width is linear in r") {
  IntMat a{{1, -1}, {-1, 2}};
  DirectionSpec v = golden_direction();
  Extent w1 = fiber_extent_raw(a, Rat(1), v);
  for (long r : {2, 5, 17}) {
    Extent wr = fiber_extent_raw(a, Rat(r), v);
    ScalarSpec scaled = ScalarSpec(Rat(r)) * w1.width;
    CHECK(*scalar_compare(wr.width, scaled) == 0);
  }
}

TEST_CASE("ell on the worked examples") {
  CHECK(ell(IntMat::identity(2), ScalarSpec(Rat(1))) == Rat(2));
  // r = sqrt(13) handled exactly through r^2 = 13
  IntMat a = bezout_matrix_2d(3, 2);
  CHECK(ell_rsq(a, Rat(13)) == Rat(26));
  CHECK(ell(a, ScalarSpec(sqrt_of(13))) == Rat(26));

  // est-ell shape: ell(A, r) <= 2 C(n) n^2 r max|p| with C(n) = 2^(n-2)
  IntVec p{2, 3, 5};
  IntMat c = unimodular_complete(p);
  Rat lhs = ell(c, ScalarSpec(Rat(1)));
  Rat rhs = Rat(2) * Rat(2) * Rat(9) * Rat(1) * Rat(5);
  CHECK(lhs <= rhs);
}

TEST_CASE("theta upper bound") {
  DirectionSpec v32 = normalize_direction({ScalarSpec(Rat(3)), ScalarSpec(Rat(2))});
  CHECK(theta_upper_bound(v32, {3, 2}) == Rat(0));
  CHECK(theta_upper_bound(v32, {6, 4}) == Rat(0));

  // golden direction vs the (8,5) convergent tuple: bound below 1/25
  DirectionSpec g = golden_direction();
  Rat bound = theta_upper_bound(g, {8, 5});
  CHECK(bound > Rat(0));
  CHECK(bound <= Rat(1, 25));

  // interval direction: certified chord bound against the 8n/(Q r) shape
  int digits = 50;
  DirectionSpec v3 = normalize_direction({ScalarSpec(Rat(1)),
                                          ScalarSpec(sqrt_enclosure(Rat(2), digits)),
                                          ScalarSpec(sqrt_enclosure(Rat(3), digits))});
  ApproxStep s = simultaneous_approx(v3, 16);
  auto [pr, gg] = coprime_reduce(s.p);
  Rat b3 = theta_upper_bound(v3, pr);
  CHECK(b3 > Rat(0));
  Int pn2 = 0;
  for (const Int& x : pr) pn2 += x * x;
  Rat r_lo = sqrt_enclosure(Rat(pn2), 30).lo();
  CHECK(b3 < Rat(8 * 3) / (Rat(16) * r_lo));
}

TEST_CASE("delta upper bound") {
  CHECK(delta_upper_bound(Rat(26), Rat(0)) == Rat(0));
  CHECK(delta_upper_bound(Rat(26), Rat(1, 25)) == Rat(26, 25));

  // along golden convergents the diagnostic bound stays below
  // 2 (2 phi^2 + 1) = 8 + 2 sqrt(5), exactly in Q(sqrt 5)
  QSurd cap(Rat(8), Rat(2), 5);
  DirectionSpec g = golden_direction();
  QSurd kappa2 = golden() - QSurd(Rat(1));
  auto cs = convergents_2d(ScalarSpec(kappa2), 20);
  for (size_t i = 1; i < cs.size(); ++i) {
    IntVec p{cs[i].q, cs[i].p};
    IntMat a = unimodular_complete(p);
    Rat lv = ell_rsq(a, Rat(Int(p[0] * p[0] + p[1] * p[1])));
    Rat delta = delta_upper_bound(lv, theta_upper_bound(g, p));
    CHECK((QSurd(Rat(delta)) - cap).sign() < 0);
  }
}

TEST_CASE("admissible radius") {
  CHECK(admissible_r(IntMat::identity(2), axis_direction()) == Rat(2));

  IntMat a32 = bezout_matrix_2d(3, 2);
  DirectionSpec v32 = normalize_direction({ScalarSpec(Rat(3)), ScalarSpec(Rat(2))});
  Rat adm = admissible_r(a32, v32);
  CHECK(adm >= Rat::parse("7.2"));

  IntMat cat_inv{{1, -1}, {-1, 2}};
  Rat admg = admissible_r(cat_inv, golden_direction());
  CHECK(admg > Rat::parse("6.1"));
  CHECK(admg < Rat::parse("6.2"));
}

TEST_CASE("shortest orthogonal vector") {
  DirectionSpec v34 = normalize_direction({ScalarSpec(Rat(3)), ScalarSpec(Rat(4))});
  auto z = shortest_orthogonal(v34, 10);
  REQUIRE(z.has_value());
  CHECK(*z == IntVec{4, -3});

  DirectionSpec v01 = normalize_direction({ScalarSpec(Rat(0)), ScalarSpec(Rat(1))});
  auto z2 = shortest_orthogonal(v01, 1);
  REQUIRE(z2.has_value());
  CHECK(*z2 == IntVec{1, 0});

  DirectionSpec vphi = normalize_direction({ScalarSpec(Rat(1)), ScalarSpec(golden())});
  CHECK_FALSE(shortest_orthogonal(vphi, 100).has_value());
}

TEST_CASE("shortest orthogonal minimality by re-scan") {
  DirectionSpec v = normalize_direction({ScalarSpec(Rat(3)), ScalarSpec(Rat(4))});
  auto z = shortest_orthogonal(v, 10);
  REQUIRE(z.has_value());
  Int best = 25;
  for (long z0 = -10; z0 <= 10; ++z0)
    for (long z1 = -10; z1 <= 10; ++z1) {
      if (z0 == 0 && z1 == 0) continue;
      if (Int(z0) * 3 + Int(z1) * 4 != 0) continue;
      CHECK(Int(z0) * z0 + Int(z1) * z1 >= best);
    }
}

TEST_CASE("width-control chain along golden convergents") {
  DirectionSpec g = golden_direction();
  QSurd kappa2 = golden() - QSurd(Rat(1));  // kappa_2 = phi - 1
  auto cs = convergents_2d(ScalarSpec(kappa2), 12);
  for (size_t i = 1; i < cs.size(); ++i) {
    IntVec p{cs[i].q, cs[i].p};
    IntMat a = unimodular_complete(p);
    Int pn2 = p[0] * p[0] + p[1] * p[1];
    Rat r_up = sqrt_enclosure(Rat(pn2), 30).hi();
    Rat lv = ell_rsq(a, Rat(pn2));
    Rat theta = theta_upper_bound(g, p);
    Rat delta = delta_upper_bound(lv, theta);
    Extent w = fiber_extent(a, r_up, g);
    // Eq-shape check: projected width <= 2 (1 + delta)
    CHECK(enclosure_hi(w.width) <= Rat(2) * (Rat(1) + delta));
  }
}
