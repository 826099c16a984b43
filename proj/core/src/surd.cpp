// Copyright 2026 the torus-squeeze authors
// SPDX-License-Identifier: Apache-2.0

#include "tsq/surd.hpp"

#include "tsq/error.hpp"

namespace tsq {

QSurd QSurd::raw(Rat a, Rat b, Int d) {
  QSurd s;
  s.a_ = std::move(a);
  s.b_ = std::move(b);
  s.d_ = s.b_.is_zero() ? Int(1) : std::move(d);
  return s;
}

QSurd::QSurd(Rat a, Rat b, Int d) : a_(std::move(a)), b_(std::move(b)), d_(std::move(d)) {
  if (d_ < 1) fail(errc::invalid_input, "radicand must be positive");
  if (b_.is_zero()) {
    d_ = 1;
    return;
  }
  auto [sq, rest] = extract_square_part(d_);
  b_ *= Rat(sq);
  d_ = rest;
  if (d_ == 1) {  // d was a perfect square: the value is rational
    a_ += b_;
    b_ = 0;
  }
}

Int common_radicand(const QSurd& x, const QSurd& y) {
  if (x.radicand() == 1) return y.radicand();
  if (y.radicand() == 1 || x.radicand() == y.radicand()) return x.radicand();
  fail(errc::mixed_surd, "arithmetic across radicands " + x.radicand().get_str() + " and " +
                             y.radicand().get_str());
}

int QSurd::sign() const {
  if (b_.is_zero()) return a_.sign();
  if (a_.is_zero()) return b_.sign();
  int sa = a_.sign(), sb = b_.sign();
  if (sa == sb) return sa;
  // Opposite signs: |a| vs |b| sqrt(d) decided by the sign of a^2 - b^2 d.
  return sa * field_norm().sign();
}

QSurd QSurd::reciprocal() const {
  if (is_zero()) fail(errc::invalid_input, "reciprocal of zero surd");
  if (b_.is_zero()) return QSurd(a_.reciprocal());
  Rat n = field_norm();
  return QSurd::raw(a_ / n, -b_ / n, d_);
}

QSurd operator+(const QSurd& x, const QSurd& y) {
  Int d = common_radicand(x, y);
  return QSurd::raw(x.a_ + y.a_, x.b_ + y.b_, d);
}

QSurd operator-(const QSurd& x, const QSurd& y) {
  Int d = common_radicand(x, y);
  return QSurd::raw(x.a_ - y.a_, x.b_ - y.b_, d);
}

QSurd operator*(const QSurd& x, const QSurd& y) {
  Int d = common_radicand(x, y);
  return QSurd::raw(x.a_ * y.a_ + x.b_ * y.b_ * Rat(d), x.a_ * y.b_ + x.b_ * y.a_, d);
}

QSurd operator/(const QSurd& x, const QSurd& y) { return x * y.reciprocal(); }

Int QSurd::floor() const {
  if (b_.is_zero()) return a_.floor();
  // Start from an enclosure and certify with exact sign checks.
  IntervalNum enc = enclosure(20);
  Int m = enc.lo().floor();
  while ((*this - QSurd(Rat(Int(m + 1)))).sign() >= 0) ++m;
  while ((*this - QSurd(Rat(m))).sign() < 0) --m;
  return m;
}

IntervalNum QSurd::enclosure(int digits) const {
  if (b_.is_zero()) return IntervalNum(a_);
  IntervalNum root = sqrt_enclosure(Rat(d_), digits);
  return IntervalNum(a_) + IntervalNum(b_) * root;
}

double QSurd::to_double() const { return enclosure(25).mid().to_double(); }

std::string QSurd::str() const {
  return a_.str() + " + " + b_.str() + "*sqrt(" + d_.get_str() + ")";
}

}  // namespace tsq
