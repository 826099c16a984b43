// Copyright 2026 the torus-squeeze authors
// SPDX-License-Identifier: Apache-2.0

#ifndef TSQ_GEOMETRY_HPP
#define TSQ_GEOMETRY_HPP

#include <optional>

#include "tsq/direction.hpp"
#include "tsq/int_linalg.hpp"
#include "tsq/precision.hpp"
#include "tsq/scalar.hpp"

namespace tsq {

// Fiber simplex Delta^n(r) = {x >= 0, sum x_j <= r}; vertices 0, r e_j.
struct SimplexSpec {
  int n;
  Rat r;
  SimplexSpec(int n_, Rat r_);
};

// Fat cylinder Y^{2n}(halfwidth, v): fiber constrained only along v.
struct CylinderSpec {
  int n;
  Rat halfwidth;
  DirectionSpec direction;
  CylinderSpec(int n_, Rat halfwidth_, DirectionSpec direction_);
};

// Thin cylinder X^{2n}(radius, w): fiber unbounded only along w; n >= 3.
struct ThinCylinderSpec {
  int n;
  Rat radius;
  DirectionSpec direction;
  ThinCylinderSpec(int n_, Rat radius_, DirectionSpec direction_);
};

// Range of a linear functional over the simplex. Witness indices use
// 0 for the origin vertex and j for r*e_j; -1 when not certified.
struct Extent {
  ScalarSpec lo;
  ScalarSpec hi;
  ScalarSpec width;
  int witness_lo = -1;
  int witness_hi = -1;
};

// Extent of x -> <A x, v> over Delta^n(r) with v the raw fiber entries of
// the direction (no unit normalization). Exact for rational/quadratic
// directions, an enclosure for interval directions.
Extent fiber_extent_raw(const IntMat& a, const Rat& r, const DirectionSpec& v);

// Extent of x -> <A x, v/|v|>; exact whenever |v| is rational, otherwise a
// certified enclosure at the given precision.
Extent fiber_extent(const IntMat& a, const Rat& r, const DirectionSpec& v,
                    Precision prec = default_precision());

// Certified rational upper bound of 2 max_vertex |A x| over Delta^n(r);
// exact when the squared norms are perfect squares, otherwise within 1e-6
// relative. r enters as a ScalarSpec so exact surd radii like sqrt(13)
// stay exact through r^2.
Rat ell(const IntMat& a, const ScalarSpec& r);
Rat ell_rsq(const IntMat& a, const Rat& r_squared);

// Certified rational upper bound on the angle between v and the lattice
// direction p: min of the exact cross/dot tangent (n = 2 alignment) and
// twice the chord |v/|v| - p/|p||. Exact zero when v is proportional to p.
Rat theta_upper_bound(const DirectionSpec& v, const IntVec& p,
                      Precision prec = default_precision());

// ell * theta, a rational upper bound for ell sin(theta) + cos(theta) - 1
// over theta in [0, theta_ub].
Rat delta_upper_bound(const Rat& ell_value, const Rat& theta_ub);

// Certified rational lower bound on sup{r : width of <A Delta^n(r), v/|v|>
// stays below 2}, namely 2 / width(1) evaluated outward.
Rat admissible_r(const IntMat& a, const DirectionSpec& v,
                 Precision prec = default_precision());

// Minimal-Euclidean-norm nonzero integer vector z with z . w = 0 certified
// and |z|_inf <= bound; nullopt when none exists below the bound. Sign
// canonicalized so the first nonzero coordinate is positive; ties broken
// lexicographically. Indeterminate candidates that could beat the best
// certified solution raise needs-refinement.
std::optional<IntVec> shortest_orthogonal(const DirectionSpec& w, const Int& bound);

}  // namespace tsq

#endif  // TSQ_GEOMETRY_HPP
