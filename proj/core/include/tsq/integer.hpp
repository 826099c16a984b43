// Copyright 2026 the torus-squeeze authors
// SPDX-License-Identifier: Apache-2.0

#ifndef TSQ_INTEGER_HPP
#define TSQ_INTEGER_HPP

#include <gmpxx.h>

#include <string>
#include <vector>

namespace tsq {

// Arbitrary-precision integer carrier for tuples, matrices and gcd machinery.
using Int = mpz_class;
using IntVec = std::vector<Int>;

struct BezoutTriple {
  Int g;  // gcd(|a|,|b|), nonnegative
  Int s;
  Int t;  // s*a + t*b == g
};

// Extended Euclid with a normalized coefficient pair: for b != 0 the s
// coefficient is reduced to the least nonnegative residue mod |b/g|, which
// keeps |s| < |b| and |t| <= |a| for coprime inputs of magnitude >= 1.
// Both inputs zero is rejected.
BezoutTriple ext_gcd(const Int& a, const Int& b);

// gcd of all entries (nonnegative); zero vector is rejected.
Int gcd_all(const IntVec& v);

Int max_abs(const IntVec& v);

// floor(sqrt(x)) for x >= 0.
Int isqrt(const Int& x);

bool is_perfect_square(const Int& x);

// Splits x > 0 as s^2 * f with f squarefree as far as trial division up to
// `limit` can tell; returns {s, f}. Complete whenever f' <= limit^2 remains.
std::pair<Int, Int> extract_square_part(const Int& x, unsigned long limit = 100000);

Int pow_int(const Int& base, unsigned long e);

std::string to_string(const Int& x);
Int parse_int(const std::string& s);

}  // namespace tsq

#endif  // TSQ_INTEGER_HPP
