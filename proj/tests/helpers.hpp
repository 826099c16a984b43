// Copyright 2026 the torus-squeeze authors
// SPDX-License-Identifier: Apache-2.0

#ifndef TSQ_TESTS_HELPERS_HPP
#define TSQ_TESTS_HELPERS_HPP

#include <random>

#include "tsq/direction.hpp"
#include "tsq/int_linalg.hpp"
#include "tsq/surd.hpp"

namespace tsq::testing {

inline QSurd golden() { return QSurd(Rat(1, 2), Rat(1, 2), 5); }

inline QSurd sqrt_of(long d) { return QSurd(Rat(0), Rat(1), d); }

inline DirectionSpec golden_direction() {
  return normalize_direction({ScalarSpec(golden()), ScalarSpec(Rat(1))});
}

inline Int rand_int(std::mt19937_64& rng, long lo, long hi) {
  return Int(std::uniform_int_distribution<long>(lo, hi)(rng));
}

// Random coprime tuple with entries in [-mag, mag]; zeros excluded unless
// allow_zero.
inline IntVec random_coprime_tuple(std::mt19937_64& rng, int n, long mag,
                                   bool allow_zero = false) {
  while (true) {
    IntVec p(n);
    for (int i = 0; i < n; ++i) {
      Int x = rand_int(rng, -mag, mag);
      if (x == 0 && !allow_zero) x = 1;
      p[i] = x;
    }
    Int g = 0;
    for (const Int& x : p) mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), x.get_mpz_t());
    if (g == 0) continue;
    for (Int& x : p) mpz_divexact(x.get_mpz_t(), x.get_mpz_t(), g.get_mpz_t());
    if (!allow_zero) {
      bool any_zero = false;
      for (const Int& x : p) any_zero |= (x == 0);
      if (any_zero) continue;
    }
    return p;
  }
}

// Random SL_n(Z) product of elementary shears and swaps.
inline IntMat random_sl(std::mt19937_64& rng, int n, int ops, long coef_mag = 5) {
  IntMat m = IntMat::identity(n);
  std::uniform_int_distribution<int> idx(0, n - 1);
  for (int t = 0; t < ops; ++t) {
    int i = idx(rng), j = idx(rng);
    if (i == j) continue;
    Int c = rand_int(rng, -coef_mag, coef_mag);
    for (int k = 0; k < n; ++k) m.at(i, k) += c * m.at(j, k);
  }
  return m;
}

// Independent completion oracle: pairwise gcd column elimination (Hermite
// style) building U with p U = (g, 0, ..., 0); the route shares nothing
// with the production construction.
inline IntMat hnf_completion(const IntVec& p) {
  const int n = static_cast<int>(p.size());
  IntVec w = p;
  IntMat u = IntMat::identity(n);
  // Sweep entries 1..n-1 into slot 0 by 2x2 Bezout column moves.
  for (int j = 1; j < n; ++j) {
    if (w[j] == 0) continue;
    BezoutTriple bz = ext_gcd(w[0], w[j]);
    Int a = w[0] / bz.g, b = w[j] / bz.g;
    // columns: col0' = s col0 + t colj ; colj' = -b col0 + a colj
    for (int r = 0; r < n; ++r) {
      Int c0 = u.at(r, 0), cj = u.at(r, j);
      u.at(r, 0) = bz.s * c0 + bz.t * cj;
      u.at(r, j) = -b * c0 + a * cj;
    }
    w[0] = bz.g;
    w[j] = 0;
  }
  if (w[0] == -1) {
    for (int r = 0; r < n; ++r) u.at(r, 0) = -u.at(r, 0);
    w[0] = 1;
  }
  if (mat_det(u) == -1)
    for (int r = 0; r < n; ++r) u.at(r, 1) = -u.at(r, 1);
  return u;
}

}  // namespace tsq::testing

#endif  // TSQ_TESTS_HELPERS_HPP
