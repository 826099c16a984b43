// Copyright 2026 the torus-squeeze authors
// SPDX-License-Identifier: Apache-2.0

#ifndef TSQ_DIOPHANTINE_HPP
#define TSQ_DIOPHANTINE_HPP

#include <vector>

#include "tsq/direction.hpp"
#include "tsq/error.hpp"
#include "tsq/int_linalg.hpp"
#include "tsq/scalar.hpp"

namespace tsq {

// Continued-fraction convergent p/q.
struct Convergent {
  Int p;
  Int q;
};

// Rational input has a finite expansion; the full finite convergent list
// rides along on the error.
class FiniteExpansionError : public Error {
 public:
  FiniteExpansionError(std::vector<Convergent> convergents)
      : Error(errc::invalid_input, "rational input has a finite continued fraction"),
        convergents_(std::move(convergents)) {}
  const std::vector<Convergent>& convergents() const { return convergents_; }

 private:
  std::vector<Convergent> convergents_;
};

// First `count` continued-fraction convergents of kappa. Each satisfies
// |p/q - kappa| < 1/q^2 with gcd(p, q) = 1. Quadratic kappa runs exactly;
// interval kappa runs while the next partial quotient is certified and
// throws needs-refinement when the enclosure is exhausted.
std::vector<Convergent> convergents_2d(const ScalarSpec& kappa, int count);

// Non-throwing variant for pipelines: runs as far as the enclosure allows
// and reports whether it stopped early for lack of precision. Rational
// kappa still raises the finite-expansion error.
struct ConvergentRun {
  std::vector<Convergent> convergents;
  bool precision_exhausted = false;
};
ConvergentRun convergents_2d_run(const ScalarSpec& kappa, int count);

// One simultaneous-approximation step: q in [1, Q^n) with p_j the nearest
// integer to kappa_j * q and every |kappa_j q - p_j| <= 1/Q certified.
// With kappa_1 = 1 the first coordinate satisfies p_1 = q.
struct ApproxStep {
  enum class Source { convergent, dirichlet };
  Source source = Source::dirichlet;
  Int param;        // convergent index (1-based) or the Dirichlet Q
  Int q;
  IntVec p;         // length n, p[0] == q
  Rat err_bound;    // certified upper bound on max_j |kappa_j q - p_j|
};

// Exhaustive scan from q = 1: returns the smallest q whose bounds are all
// certified. Directions with indeterminate candidates below the first
// certified hit trigger needs-refinement if nothing certifies at all.
ApproxStep simultaneous_approx(const DirectionSpec& v, const Int& Q);

// Divides out the gcd of all entries; the Dirichlet bound scales by 1/g.
std::pair<IntVec, Int> coprime_reduce(const IntVec& p);

// Convergent list repackaged as ApproxStep tuples (q, p) for the
// normalized convention (1, kappa).
ApproxStep convergent_step(const Convergent& c, int index, const ScalarSpec& kappa);

}  // namespace tsq

#endif  // TSQ_DIOPHANTINE_HPP
