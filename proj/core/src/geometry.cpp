// Copyright 2026 the torus-squeeze authors
// SPDX-License-Identifier: Apache-2.0

#include "tsq/geometry.hpp"

#include <algorithm>
#include <cmath>
#include <vector>

#include "tsq/error.hpp"

namespace tsq {

SimplexSpec::SimplexSpec(int n_, Rat r_) : n(n_), r(std::move(r_)) {
  if (n < 1) fail(errc::invalid_input, "simplex dimension must be positive");
  if (r.sign() <= 0) fail(errc::invalid_input, "simplex radius must be positive");
}

CylinderSpec::CylinderSpec(int n_, Rat halfwidth_, DirectionSpec direction_)
    : n(n_), halfwidth(std::move(halfwidth_)), direction(std::move(direction_)) {
  if (halfwidth.sign() <= 0) fail(errc::invalid_input, "cylinder halfwidth must be positive");
  if (direction.n() != n) fail(errc::invalid_input, "cylinder direction dimension mismatch");
}

ThinCylinderSpec::ThinCylinderSpec(int n_, Rat radius_, DirectionSpec direction_)
    : n(n_), radius(std::move(radius_)), direction(std::move(direction_)) {
  if (n < 3) fail(errc::invalid_input, "thin cylinder needs n >= 3");
  if (radius.sign() <= 0) fail(errc::invalid_input, "thin cylinder radius must be positive");
  if (direction.n() != n) fail(errc::invalid_input, "thin cylinder direction mismatch");
}

namespace {

// Values of <A x, v> at the simplex vertices: index 0 is the origin,
// index j is r e_j.
std::vector<ScalarSpec> vertex_values(const IntMat& a, const Rat& r, const DirectionSpec& v) {
  const int n = v.n();
  if (a.rows() != n || a.cols() != n) fail(errc::invalid_input, "matrix/direction mismatch");
  std::vector<ScalarSpec> fiber = v.fiber_entries();
  std::vector<ScalarSpec> vals;
  vals.reserve(n + 1);
  vals.emplace_back(Rat(0));
  for (int j = 0; j < n; ++j) {
    ScalarSpec dot{Rat(0)};
    for (int i = 0; i < n; ++i) {
      if (a.at(i, j) == 0) continue;
      dot = dot + ScalarSpec(Rat(a.at(i, j))) * fiber[i];
    }
    vals.push_back(canonicalize(ScalarSpec(Rat(r)) * dot));
  }
  return vals;
}

bool all_exact(const std::vector<ScalarSpec>& vals) {
  return std::all_of(vals.begin(), vals.end(), [](const ScalarSpec& s) { return scalar_is_exact(s); });
}

Extent extent_of_values(const std::vector<ScalarSpec>& vals, int digits) {
  Extent e;
  if (all_exact(vals)) {
    int ilo = 0, ihi = 0;
    for (int j = 1; j < static_cast<int>(vals.size()); ++j) {
      if (*scalar_compare(vals[j], vals[ilo]) < 0) ilo = j;
      if (*scalar_compare(vals[j], vals[ihi]) > 0) ihi = j;
    }
    e.lo = vals[ilo];
    e.hi = vals[ihi];
    e.width = canonicalize(e.hi - e.lo);
    e.witness_lo = ilo;
    e.witness_hi = ihi;
    return e;
  }
  // Enclosure hulls: [min lo_j, min hi_j] encloses the true minimum and
  // [max lo_j, max hi_j] the true maximum, for every direction in the box.
  std::vector<IntervalNum> encs;
  encs.reserve(vals.size());
  for (const auto& s : vals) encs.push_back(scalar_enclosure(s, digits));
  Rat min_lo = encs[0].lo(), min_hi = encs[0].hi();
  Rat max_lo = encs[0].lo(), max_hi = encs[0].hi();
  int ilo = 0, ihi = 0;
  for (size_t j = 1; j < encs.size(); ++j) {
    if (encs[j].lo() < min_lo) min_lo = encs[j].lo();
    if (encs[j].hi() < min_hi) { min_hi = encs[j].hi(); ilo = static_cast<int>(j); }
    if (encs[j].lo() > max_lo) { max_lo = encs[j].lo(); ihi = static_cast<int>(j); }
    if (encs[j].hi() > max_hi) max_hi = encs[j].hi();
  }
  e.lo = IntervalNum(min_lo, min_hi);
  e.hi = IntervalNum(max_lo, max_hi);
  Rat w_lo = max_lo - min_hi;
  if (w_lo.sign() < 0) w_lo = Rat(0);
  e.width = IntervalNum(w_lo, max_hi - min_lo);
  // Witnesses only when certified: the chosen vertex must beat every other
  // enclosure outright.
  bool hi_certain = true, lo_certain = true;
  for (size_t j = 0; j < encs.size(); ++j) {
    if (static_cast<int>(j) != ihi && encs[j].hi() > encs[ihi].lo()) hi_certain = false;
    if (static_cast<int>(j) != ilo && encs[j].lo() < encs[ilo].hi()) lo_certain = false;
  }
  e.witness_lo = lo_certain ? ilo : -1;
  e.witness_hi = hi_certain ? ihi : -1;
  return e;
}

// Squared Euclidean norm of the direction as a scalar.
ScalarSpec norm_squared(const std::vector<ScalarSpec>& entries) {
  ScalarSpec s{Rat(0)};
  for (const auto& x : entries) s = s + x * x;
  return canonicalize(s);
}

// Enclosure of |v| from the exact norm square.
IntervalNum norm_enclosure(const std::vector<ScalarSpec>& entries, int digits) {
  ScalarSpec n2 = norm_squared(entries);
  IntervalNum enc = scalar_enclosure(n2, digits);
  return sqrt_enclosure(enc, digits);
}

ScalarSpec divide_by_norm(const ScalarSpec& x, const IntervalNum& norm) {
  if (norm.is_point()) return canonicalize(x / ScalarSpec(norm.lo()));
  return canonicalize(x / ScalarSpec(norm));
}

}  // namespace

Extent fiber_extent_raw(const IntMat& a, const Rat& r, const DirectionSpec& v) {
  return extent_of_values(vertex_values(a, r, v), default_precision().digits);
}

Extent fiber_extent(const IntMat& a, const Rat& r, const DirectionSpec& v, Precision prec) {
  Extent raw = extent_of_values(vertex_values(a, r, v), prec.digits);
  IntervalNum norm = norm_enclosure(v.fiber_entries(), prec.digits);
  Extent e;
  e.lo = divide_by_norm(raw.lo, norm);
  e.hi = divide_by_norm(raw.hi, norm);
  e.width = divide_by_norm(raw.width, norm);
  e.witness_lo = raw.witness_lo;
  e.witness_hi = raw.witness_hi;
  return e;
}

Rat ell_rsq(const IntMat& a, const Rat& r_squared) {
  if (r_squared.sign() < 0) fail(errc::invalid_input, "negative squared radius");
  const int n = a.cols();
  Rat worst(0);
  for (int j = 0; j < n; ++j) {
    Int s = 0;
    for (int i = 0; i < n; ++i) s += a.at(i, j) * a.at(i, j);
    Rat m = r_squared * Rat(s);
    if (m > worst) worst = m;
  }
  return Rat(2) * sqrt_enclosure(worst, 8).hi();
}

Rat ell(const IntMat& a, const ScalarSpec& r) {
  ScalarSpec r2 = canonicalize(r * r);
  if (auto rat = scalar_as_rat(r2)) return ell_rsq(a, *rat);
  // Interval radius: outward bound from the upper end.
  IntervalNum enc = scalar_enclosure(r2, default_precision().digits);
  return ell_rsq(a, enc.hi());
}

namespace {

bool proportional_to(const DirectionSpec& v, const IntVec& p) {
  // Working entries have kappa_0 = 1, so proportionality with a positive
  // factor means kappa_j * p_0 == p_j exactly for every j.
  if (p[0] <= 0) return false;
  const auto& w = v.working();
  for (size_t j = 1; j < w.size(); ++j) {
    auto cmp = scalar_compare(w[j] * ScalarSpec(Rat(p[0])), ScalarSpec(Rat(p[j])));
    if (!cmp || *cmp != 0) return false;
  }
  return true;
}

}  // namespace

Rat theta_upper_bound(const DirectionSpec& v, const IntVec& p, Precision prec) {
  const int n = v.n();
  if (static_cast<int>(p.size()) != n) fail(errc::invalid_input, "tuple dimension mismatch");
  if (max_abs(p) == 0) fail(errc::invalid_input, "zero tuple");
  if (proportional_to(v, p)) return Rat(0);

  const auto& w = v.working();
  const int digits = prec.digits;

  // Chord bound: theta <= 2 |v/|v| - p/|p||, valid for any angle.
  IntervalNum vnorm = norm_enclosure(w, digits);
  Int pn2 = 0;
  for (const Int& x : p) pn2 += x * x;
  IntervalNum pnorm = sqrt_enclosure(Rat(pn2), digits);
  IntervalNum sum_sq(Rat(0));
  for (int j = 0; j < n; ++j) {
    IntervalNum diff = scalar_enclosure(w[j], digits) / vnorm - IntervalNum(Rat(p[j])) / pnorm;
    sum_sq = sum_sq + diff * diff;
  }
  Rat bound = Rat(2) * sqrt_enclosure(sum_sq, digits).hi();

  if (n == 2) {
    // Exact tangent |cross| / dot, an upper bound on theta when dot > 0.
    ScalarSpec cross = w[1] * ScalarSpec(Rat(p[0])) - ScalarSpec(Rat(p[1]));
    ScalarSpec dot = ScalarSpec(Rat(p[0])) + w[1] * ScalarSpec(Rat(p[1]));
    auto dot_sign = scalar_sign(dot);
    if (dot_sign && *dot_sign > 0) {
      ScalarSpec tan = cross / dot;
      IntervalNum enc = scalar_enclosure(tan, digits).abs();
      if (enc.hi() < bound) bound = enc.hi();
    }
  }
  return bound;
}

Rat delta_upper_bound(const Rat& ell_value, const Rat& theta_ub) {
  if (theta_ub.sign() < 0) fail(errc::invalid_input, "negative angle bound");
  return ell_value * theta_ub;
}

Rat admissible_r(const IntMat& a, const DirectionSpec& v, Precision prec) {
  Precision p = prec;
  while (true) {
    Extent e = fiber_extent(a, Rat(1), v, p);
    IntervalNum w = scalar_enclosure(e.width, p.digits);
    if (w.lo().sign() > 0) return Rat(2) / w.hi();
    if (scalar_is_exact(e.width) && scalar_is_zero(e.width))
      fail(errc::internal_error, "degenerate zero width for a unimodular matrix");
    if (!p.can_refine())
      fail(errc::needs_refinement, "width not certified positive at max precision");
    p = p.refined();
  }
}

namespace {

struct OrthoCandidate {
  Int norm2;
  IntVec z;  // original coordinates, sign-canonicalized
};

// first nonzero coordinate positive; assumes z != 0
IntVec canonical_sign(IntVec z) {
  for (const Int& x : z) {
    if (x == 0) continue;
    if (x < 0)
      for (Int& y : z) y = -y;
    break;
  }
  return z;
}

bool lex_less(const IntVec& a, const IntVec& b) {
  for (size_t i = 0; i < a.size(); ++i) {
    if (a[i] != b[i]) return a[i] < b[i];
  }
  return false;
}

bool better(const OrthoCandidate& a, const OrthoCandidate& b) {
  if (a.norm2 != b.norm2) return a.norm2 < b.norm2;
  return lex_less(a.z, b.z);
}

}  // namespace

std::optional<IntVec> shortest_orthogonal(const DirectionSpec& w, const Int& bound) {
  if (bound < 1) fail(errc::invalid_input, "bound must be >= 1");
  const int n = w.n();
  const auto& entries = w.working();

  // Double prefilter data: approximate working entries and a slack that
  // dominates both the enclosure radii and the float rounding error.
  std::vector<double> approx(n);
  double slack = 1e-6;
  double bd = mpz_get_d(bound.get_mpz_t());
  for (int j = 0; j < n; ++j) {
    IntervalNum enc = scalar_enclosure(entries[j], 30);
    approx[j] = enc.mid().to_double();
    slack += bd * (enc.width().to_double() + (std::abs(approx[j]) + 1.0) * 1e-12);
  }

  std::optional<OrthoCandidate> best;          // certified orthogonal
  std::optional<OrthoCandidate> best_unsure;   // enclosure contains an integer

  const bool prefilter = slack < 0.4;
  long b = static_cast<long>(bd);
  std::vector<long> zw(n, 0);  // slots 1..n-1 enumerated, slot 0 solved
  for (int j = 1; j < n; ++j) zw[j] = -b;
  bool done = false;
  while (!done) {
    bool all_zero_tail = std::all_of(zw.begin() + 1, zw.end(), [](long x) { return x == 0; });

    double t = 0;
    for (int j = 1; j < n; ++j) t += static_cast<double>(zw[j]) * approx[j];
    double nearest = std::nearbyint(-t);
    bool skip = prefilter && (std::abs(-t - nearest) > slack ||      // no integer can solve
                              std::abs(nearest) > bd + 0.5);          // z0 out of range
    if (skip) {
      int pos = 1;
      while (pos < n && zw[pos] == b) zw[pos++] = -b;
      if (pos == n) break;
      ++zw[pos];
      continue;
    }

    // Exact evaluation of sum zw_j kappa_j over slots >= 1.
    ScalarSpec sum{Rat(0)};
    for (int j = 1; j < n; ++j) {
      if (zw[j] == 0) continue;
      sum = sum + ScalarSpec(Rat(zw[j])) * entries[j];
    }
    ScalarSpec z0_val = canonicalize(-sum);

    auto consider = [&](const Int& z0, bool certified) {
      if (z0 == 0 && all_zero_tail) return;  // the zero vector
      if (abs(z0) > bound) return;
      IntVec zvec(n);
      zvec[w.perm()[0]] = z0;
      Int norm2 = z0 * z0;
      for (int j = 1; j < n; ++j) {
        zvec[w.perm()[j]] = zw[j];
        norm2 += Int(zw[j]) * Int(zw[j]);
      }
      OrthoCandidate cand{norm2, canonical_sign(std::move(zvec))};
      auto& slot = certified ? best : best_unsure;
      if (!slot || better(cand, *slot)) slot = std::move(cand);
    };

    if (auto exact = scalar_as_rat(z0_val)) {
      if (exact->is_integer()) consider(exact->num(), true);
    } else if (!scalar_is_exact(z0_val)) {
      IntervalNum enc = std::get<IntervalNum>(z0_val);
      for (Int z0 = enc.lo().ceil(); Rat(z0) <= enc.hi(); ++z0) consider(z0, false);
    }
    // exact surd with nonzero irrational part is never an integer

    int pos = 1;
    while (pos < n && zw[pos] == b) zw[pos++] = -b;
    if (pos == n) done = true; else ++zw[pos];
  }

  if (best_unsure && (!best || better(*best_unsure, *best)))
    fail(errc::needs_refinement,
         "candidate orthogonality indeterminate at the current precision");
  if (best) return best->z;
  return std::nullopt;
}

}  // namespace tsq
