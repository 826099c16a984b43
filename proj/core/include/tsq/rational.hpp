// Copyright 2026 the torus-squeeze authors
// SPDX-License-Identifier: Apache-2.0

#ifndef TSQ_RATIONAL_HPP
#define TSQ_RATIONAL_HPP

#include <gmpxx.h>

#include <string>

#include "tsq/integer.hpp"

namespace tsq {

// Arbitrary-precision rational in canonical form: positive denominator,
// gcd(|num|, den) = 1. Wire format is always "num/den", e.g. "-13/10".
class Rat {
 public:
  Rat() : v_(0) {}
  Rat(long n) : v_(n) {}  // NOLINT(google-explicit-constructor)
  Rat(const Int& n) : v_(n) {}  // NOLINT(google-explicit-constructor)
  Rat(const Int& num, const Int& den);
  explicit Rat(const mpq_class& q) : v_(q) { v_.canonicalize(); }

  static Rat parse(const std::string& s);

  const mpq_class& raw() const { return v_; }
  Int num() const { return Int(v_.get_num()); }
  Int den() const { return Int(v_.get_den()); }

  int sign() const { return sgn(v_); }
  bool is_zero() const { return sgn(v_) == 0; }
  bool is_integer() const { return v_.get_den() == 1; }

  Rat abs() const { return Rat(mpq_class(::abs(v_))); }
  Rat reciprocal() const;
  Int floor() const;
  Int ceil() const;
  // Nearest integer with half-integer ties rounded toward zero.
  Int round_half_toward_zero() const;

  // Best rational approximation with denominator <= max_den, via the
  // continued-fraction convergent/semiconvergent walk. Deterministic.
  Rat round_to_denominator(const Int& max_den) const;

  double to_double() const { return v_.get_d(); }
  std::string str() const;

  friend Rat operator+(const Rat& a, const Rat& b) { return Rat(mpq_class(a.v_ + b.v_)); }
  friend Rat operator-(const Rat& a, const Rat& b) { return Rat(mpq_class(a.v_ - b.v_)); }
  friend Rat operator*(const Rat& a, const Rat& b) { return Rat(mpq_class(a.v_ * b.v_)); }
  friend Rat operator/(const Rat& a, const Rat& b);
  friend Rat operator-(const Rat& a) { return Rat(mpq_class(-a.v_)); }

  Rat& operator+=(const Rat& o) { v_ += o.v_; return *this; }
  Rat& operator-=(const Rat& o) { v_ -= o.v_; return *this; }
  Rat& operator*=(const Rat& o) { v_ *= o.v_; return *this; }
  Rat& operator/=(const Rat& o) { *this = *this / o; return *this; }

  friend bool operator==(const Rat& a, const Rat& b) { return a.v_ == b.v_; }
  friend bool operator!=(const Rat& a, const Rat& b) { return a.v_ != b.v_; }
  friend bool operator<(const Rat& a, const Rat& b) { return a.v_ < b.v_; }
  friend bool operator<=(const Rat& a, const Rat& b) { return a.v_ <= b.v_; }
  friend bool operator>(const Rat& a, const Rat& b) { return a.v_ > b.v_; }
  friend bool operator>=(const Rat& a, const Rat& b) { return a.v_ >= b.v_; }

 private:
  mpq_class v_;
};

// 10^-digits as an exact rational.
Rat pow10_neg(int digits);

}  // namespace tsq

#endif  // TSQ_RATIONAL_HPP
