// Copyright 2026 the torus-squeeze authors
// SPDX-License-Identifier: Apache-2.0

#include "tsq/diophantine.hpp"

#include <algorithm>

#include "tsq/error.hpp"

namespace tsq {

namespace {

struct CfState {
  Int h_m1 = 1, h_m2 = 0;  // numerators
  Int k_m1 = 0, k_m2 = 1;  // denominators
  Convergent push(const Int& a) {
    Int h = a * h_m1 + h_m2;
    Int k = a * k_m1 + k_m2;
    h_m2 = h_m1; k_m2 = k_m1;
    h_m1 = h; k_m1 = k;
    return {h, k};
  }
};

std::vector<Convergent> convergents_of_rational(Rat x) {
  CfState cf;
  std::vector<Convergent> out;
  while (true) {
    Int a = x.floor();
    out.push_back(cf.push(a));
    Rat frac = x - Rat(a);
    if (frac.is_zero()) return out;
    x = frac.reciprocal();
  }
}

std::vector<Convergent> convergents_of_surd(const QSurd& kappa, int count) {
  CfState cf;
  std::vector<Convergent> out;
  QSurd x = kappa;
  out.reserve(count);
  for (int i = 0; i < count; ++i) {
    Int a = x.floor();
    out.push_back(cf.push(a));
    QSurd frac = x - QSurd(Rat(a));
    if (frac.is_zero()) fail(errc::internal_error, "surd input canonicalizes to rational");
    x = frac.reciprocal();
  }
  return out;
}

// With `exhausted` non-null, precision starvation stops the walk and sets
// the flag; otherwise it raises needs-refinement.
std::vector<Convergent> convergents_of_interval(const IntervalNum& kappa, int count,
                                                bool* exhausted = nullptr) {
  CfState cf;
  std::vector<Convergent> out;
  IntervalNum x = kappa;
  out.reserve(count);
  for (int i = 0; i < count; ++i) {
    Int a_lo = x.lo().floor(), a_hi = x.hi().floor();
    bool starved = a_lo != a_hi;
    IntervalNum frac = starved ? x : x - IntervalNum(Rat(a_lo));
    if (!starved && frac.contains_zero()) starved = true;
    if (starved) {
      if (exhausted) {
        *exhausted = true;
        return out;
      }
      fail(errc::needs_refinement, "partial quotient not certified after " +
                                       std::to_string(out.size()) + " convergents");
    }
    out.push_back(cf.push(a_lo));
    x = IntervalNum(Rat(1)) / frac;
  }
  return out;
}

}  // namespace

std::vector<Convergent> convergents_2d(const ScalarSpec& kappa, int count) {
  if (count < 1) fail(errc::invalid_input, "convergent count must be >= 1");
  ScalarSpec k = canonicalize(kappa);
  if (const auto* r = std::get_if<Rat>(&k))
    throw FiniteExpansionError(convergents_of_rational(*r));
  if (const auto* q = std::get_if<QSurd>(&k)) return convergents_of_surd(*q, count);
  return convergents_of_interval(std::get<IntervalNum>(k), count);
}

ConvergentRun convergents_2d_run(const ScalarSpec& kappa, int count) {
  ConvergentRun run;
  ScalarSpec k = canonicalize(kappa);
  if (const auto* r = std::get_if<Rat>(&k))
    throw FiniteExpansionError(convergents_of_rational(*r));
  if (const auto* q = std::get_if<QSurd>(&k)) {
    run.convergents = convergents_of_surd(*q, count);
    return run;
  }
  run.convergents =
      convergents_of_interval(std::get<IntervalNum>(k), count, &run.precision_exhausted);
  return run;
}

namespace {

// Scan-friendly view of one direction coordinate.
struct Coord {
  bool exact;
  QSurd value;        // when exact
  IntervalNum encl;   // always usable as an enclosure
};

enum class Check { pass, fail, indeterminate };

Check check_exact(const QSurd& t, const Int& cand, const Rat& tol, QSurd* err) {
  QSurd e = (t - QSurd(Rat(cand))).abs();
  int cmp = (e - QSurd(tol)).sign();
  if (cmp <= 0) {
    *err = e;
    return Check::pass;
  }
  return Check::fail;
}

Check check_interval(const IntervalNum& t, const Int& cand, const Rat& tol, Rat* err_hi) {
  IntervalNum e = (t - IntervalNum(Rat(cand))).abs();
  if (e.hi() <= tol) {
    *err_hi = e.hi();
    return Check::pass;
  }
  if (e.lo() > tol) return Check::fail;
  return Check::indeterminate;
}

}  // namespace

ApproxStep simultaneous_approx(const DirectionSpec& v, const Int& Q) {
  if (Q < 2) fail(errc::invalid_input, "Q must be >= 2");
  const int n = v.n();
  const Rat tol(Int(1), Q);
  Int q_limit = 1;
  for (int i = 0; i < n; ++i) q_limit *= Q;  // scan q in [1, Q^n)

  std::vector<Coord> coords;
  coords.reserve(n);
  for (const ScalarSpec& e : v.working()) {
    if (const auto* r = std::get_if<Rat>(&e))
      coords.push_back({true, QSurd(*r), IntervalNum(*r)});
    else if (const auto* s = std::get_if<QSurd>(&e))
      coords.push_back({true, *s, s->enclosure(40)});
    else
      coords.push_back({false, QSurd(), std::get<IntervalNum>(e)});
  }

  bool saw_indeterminate = false;
  for (Int q = 1; q < q_limit; ++q) {
    IntVec p(n);
    p[0] = q;
    Rat worst(0);
    bool ok = true, indet = false;
    for (int j = 1; j < n && ok; ++j) {
      const Coord& c = coords[j];
      IntervalNum t_enc = c.encl * IntervalNum(Rat(q));
      Int cand_lo = t_enc.lo().round_half_toward_zero();
      Int cand_hi = t_enc.hi().round_half_toward_zero();
      // Candidates for the nearest integer; at most two when the enclosure
      // spans a half-integer. Ties round toward zero.
      Int cands[2] = {cand_lo, cand_hi};
      int n_cands = cand_lo == cand_hi ? 1 : 2;
      if (n_cands == 2 && abs(cand_hi) < abs(cand_lo)) std::swap(cands[0], cands[1]);

      Check best = Check::fail;
      for (int ci = 0; ci < n_cands && best != Check::pass; ++ci) {
        Check ck;
        Rat err_hi;
        if (c.exact) {
          QSurd t = c.value * QSurd(Rat(q));
          QSurd err;
          ck = check_exact(t, cands[ci], tol, &err);
          if (ck == Check::pass) {
            IntervalNum e = err.enclosure(40);
            err_hi = err.is_rational() ? err.as_rational() : e.hi();
          }
        } else {
          ck = check_interval(t_enc, cands[ci], tol, &err_hi);
        }
        if (ck == Check::pass) {
          p[j] = cands[ci];
          if (err_hi > worst) worst = err_hi;
          best = Check::pass;
        } else if (ck == Check::indeterminate) {
          best = Check::indeterminate;
        }
      }
      if (best == Check::indeterminate) { indet = true; ok = false; }
      if (best == Check::fail) ok = false;
    }
    if (ok) {
      ApproxStep step;
      step.source = ApproxStep::Source::dirichlet;
      step.param = Q;
      step.q = q;
      step.p = std::move(p);
      step.err_bound = worst;
      return step;
    }
    if (indet) saw_indeterminate = true;
  }
  if (saw_indeterminate)
    fail(errc::needs_refinement, "no certified q below Q^n at this precision");
  fail(errc::search_exhausted, "no q below Q^n satisfied the bound");
}

std::pair<IntVec, Int> coprime_reduce(const IntVec& p) {
  Int g = gcd_all(p);  // rejects the zero vector
  IntVec out(p.size());
  for (size_t i = 0; i < p.size(); ++i) mpz_divexact(out[i].get_mpz_t(), p[i].get_mpz_t(), g.get_mpz_t());
  return {out, g};
}

ApproxStep convergent_step(const Convergent& c, int index, const ScalarSpec& kappa) {
  ApproxStep step;
  step.source = ApproxStep::Source::convergent;
  step.param = index;
  step.q = c.q;
  step.p = {c.q, c.p};
  ScalarSpec err = ScalarSpec(Rat(c.q)) * kappa - ScalarSpec(Rat(c.p));
  IntervalNum enc = scalar_enclosure(err, 60).abs();
  step.err_bound = enc.hi();
  return step;
}

}  // namespace tsq
