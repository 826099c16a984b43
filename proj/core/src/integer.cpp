// Copyright 2026 the torus-squeeze authors
// SPDX-License-Identifier: Apache-2.0

#include "tsq/integer.hpp"

#include "tsq/error.hpp"

namespace tsq {

BezoutTriple ext_gcd(const Int& a, const Int& b) {
  if (a == 0 && b == 0) fail(errc::invalid_input, "ext_gcd(0, 0)");
  if (b == 0) return {abs(a), Int(sgn(a)), Int(0)};
  if (a == 0) return {abs(b), Int(0), Int(sgn(b))};

  Int old_r = a, r = b;
  Int old_s = 1, s = 0;
  while (r != 0) {
    Int q;
    mpz_fdiv_q(q.get_mpz_t(), old_r.get_mpz_t(), r.get_mpz_t());
    Int tmp = old_r - q * r;
    old_r = r;
    r = tmp;
    tmp = old_s - q * s;
    old_s = s;
    s = tmp;
  }
  Int g = old_r;
  Int bez_s = old_s;
  if (g < 0) {
    g = -g;
    bez_s = -bez_s;
  }
  // Reduce s to the least nonnegative residue mod |b/g|.
  Int step = abs(b / g);
  mpz_fdiv_r(bez_s.get_mpz_t(), bez_s.get_mpz_t(), step.get_mpz_t());
  Int bez_t = (g - bez_s * a) / b;
  return {g, bez_s, bez_t};
}

Int gcd_all(const IntVec& v) {
  Int g = 0;
  for (const Int& x : v) mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), x.get_mpz_t());
  if (g == 0) fail(errc::invalid_input, "gcd of all-zero vector");
  return g;
}

Int max_abs(const IntVec& v) {
  Int m = 0;
  for (const Int& x : v)
    if (abs(x) > m) m = abs(x);
  return m;
}

Int isqrt(const Int& x) {
  if (x < 0) fail(errc::invalid_input, "isqrt of negative");
  Int r;
  mpz_sqrt(r.get_mpz_t(), x.get_mpz_t());
  return r;
}

bool is_perfect_square(const Int& x) {
  return x >= 0 && mpz_perfect_square_p(x.get_mpz_t()) != 0;
}

std::pair<Int, Int> extract_square_part(const Int& x, unsigned long limit) {
  if (x <= 0) fail(errc::invalid_input, "square part of nonpositive");
  Int square_root = 1, free_part = 1, rest = x;
  for (unsigned long p = 2; Int(p) * Int(p) <= rest && p <= limit; p += (p == 2 ? 1 : 2)) {
    unsigned long e = 0;
    while (mpz_divisible_ui_p(rest.get_mpz_t(), p)) {
      mpz_divexact_ui(rest.get_mpz_t(), rest.get_mpz_t(), p);
      ++e;
    }
    for (unsigned long i = 0; i + 1 < e; i += 2) square_root *= p;
    if (e % 2 == 1) free_part *= p;
  }
  if (is_perfect_square(rest)) {
    square_root *= isqrt(rest);
  } else {
    free_part *= rest;
  }
  return {square_root, free_part};
}

Int pow_int(const Int& base, unsigned long e) {
  Int r;
  mpz_pow_ui(r.get_mpz_t(), base.get_mpz_t(), e);
  return r;
}

std::string to_string(const Int& x) { return x.get_str(); }

Int parse_int(const std::string& s) {
  std::string t = s;
  if (!t.empty() && t.front() == '+') t.erase(0, 1);
  try {
    return Int(t, 10);  // explicit base: leading zeros must not mean octal
  } catch (const std::invalid_argument&) {
    fail(errc::parse_error, "not an integer: '" + s + "'");
  }
}

}  // namespace tsq
