// Copyright 2026 the torus-squeeze authors
// SPDX-License-Identifier: Apache-2.0

#include "tsq/rational.hpp"

#include <cctype>

#include "tsq/error.hpp"

namespace tsq {

Rat::Rat(const Int& num, const Int& den) {
  if (den == 0) fail(errc::invalid_input, "zero denominator");
  v_ = mpq_class(num, den);
  v_.canonicalize();
}

Rat Rat::parse(const std::string& s) {
  if (s.empty()) fail(errc::parse_error, "empty rational");
  auto slash = s.find('/');
  if (slash != std::string::npos) {
    Int num = parse_int(s.substr(0, slash));
    Int den = parse_int(s.substr(slash + 1));
    if (den == 0) fail(errc::parse_error, "zero denominator in '" + s + "'");
    return Rat(num, den);
  }
  auto dot = s.find('.');
  if (dot == std::string::npos) return Rat(parse_int(s));
  // Exact decimal: digits after the dot become a power-of-ten denominator.
  std::string digits = s.substr(0, dot) + s.substr(dot + 1);
  if (digits.empty() || digits == "-" || digits == "+")
    fail(errc::parse_error, "malformed decimal '" + s + "'");
  Int num = parse_int(digits);
  Int den = pow_int(10, s.size() - dot - 1);
  return Rat(num, den);
}

Rat operator/(const Rat& a, const Rat& b) {
  if (b.is_zero()) fail(errc::invalid_input, "division by zero");
  return Rat(mpq_class(a.v_ / b.v_));
}

Rat Rat::reciprocal() const {
  if (is_zero()) fail(errc::invalid_input, "reciprocal of zero");
  return Rat(den(), num());
}

Int Rat::floor() const {
  Int q;
  mpz_fdiv_q(q.get_mpz_t(), v_.get_num().get_mpz_t(), v_.get_den().get_mpz_t());
  return q;
}

Int Rat::ceil() const {
  Int q;
  mpz_cdiv_q(q.get_mpz_t(), v_.get_num().get_mpz_t(), v_.get_den().get_mpz_t());
  return q;
}

Int Rat::round_half_toward_zero() const {
  Rat shifted = *this + Rat(1, 2);
  Int f = shifted.floor();
  if (Rat(f) == shifted && sign() > 0) return f - 1;  // tie, positive side
  return f;
}

Rat Rat::round_to_denominator(const Int& max_den) const {
  if (max_den < 1) fail(errc::invalid_input, "round_to_denominator: max_den < 1");
  if (den() <= max_den) return *this;
  // Convergent walk of the continued fraction of *this; when the next
  // convergent overshoots the cap, fall back to the best semiconvergent.
  Int h_m1 = 1, k_m1 = 0, h_m2 = 0, k_m2 = 1;
  mpq_class y = v_;
  while (true) {
    Int a;
    mpz_fdiv_q(a.get_mpz_t(), y.get_num().get_mpz_t(), y.get_den().get_mpz_t());
    Int h = a * h_m1 + h_m2;
    Int k = a * k_m1 + k_m2;
    if (k > max_den) {
      Int t = (max_den - k_m2) / k_m1;
      Rat conv(h_m1, k_m1 == 0 ? Int(1) : k_m1);
      Int k_semi = t * k_m1 + k_m2;
      if (k_semi >= 1) {
        Rat semi(t * h_m1 + h_m2, k_semi);
        if ((semi - *this).abs() <= (conv - *this).abs()) return semi;
      }
      return conv;
    }
    h_m2 = h_m1; k_m2 = k_m1; h_m1 = h; k_m1 = k;
    mpq_class frac = y - mpq_class(a);
    if (frac == 0) return Rat(h, k);
    y = 1 / frac;
  }
}

std::string Rat::str() const { return num().get_str() + "/" + den().get_str(); }

Rat pow10_neg(int digits) {
  if (digits < 0) fail(errc::invalid_input, "negative digit count");
  return Rat(Int(1), pow_int(10, static_cast<unsigned long>(digits)));
}

}  // namespace tsq
