// Copyright 2026 the torus-squeeze authors
// SPDX-License-Identifier: Apache-2.0

#include "tsq/interval.hpp"

#include <algorithm>

#include "tsq/error.hpp"

namespace tsq {

IntervalNum::IntervalNum(Rat lo, Rat hi) : lo_(std::move(lo)), hi_(std::move(hi)) {
  if (lo_ > hi_) fail(errc::invalid_input, "interval with lo > hi");
}

IntervalNum IntervalNum::from_midpoint(const Rat& mid, const Rat& radius) {
  if (radius.sign() < 0) fail(errc::invalid_input, "negative interval radius");
  return IntervalNum(mid - radius, mid + radius);
}

std::optional<int> IntervalNum::sign() const {
  if (lo_.sign() > 0) return 1;
  if (hi_.sign() < 0) return -1;
  if (lo_.is_zero() && hi_.is_zero()) return 0;
  return std::nullopt;
}

IntervalNum IntervalNum::abs() const {
  if (lo_.sign() >= 0) return *this;
  if (hi_.sign() <= 0) return IntervalNum(-hi_, -lo_);
  return IntervalNum(Rat(0), std::max(-lo_, hi_));
}

IntervalNum operator+(const IntervalNum& a, const IntervalNum& b) {
  return IntervalNum(a.lo_ + b.lo_, a.hi_ + b.hi_);
}

IntervalNum operator-(const IntervalNum& a, const IntervalNum& b) {
  return IntervalNum(a.lo_ - b.hi_, a.hi_ - b.lo_);
}

IntervalNum operator-(const IntervalNum& a) { return IntervalNum(-a.hi_, -a.lo_); }

IntervalNum operator*(const IntervalNum& a, const IntervalNum& b) {
  Rat c1 = a.lo_ * b.lo_, c2 = a.lo_ * b.hi_, c3 = a.hi_ * b.lo_, c4 = a.hi_ * b.hi_;
  return IntervalNum(std::min(std::min(c1, c2), std::min(c3, c4)),
                     std::max(std::max(c1, c2), std::max(c3, c4)));
}

IntervalNum operator/(const IntervalNum& a, const IntervalNum& b) {
  if (b.contains_zero()) fail(errc::invalid_input, "interval division by enclosure of zero");
  IntervalNum recip(b.hi_.reciprocal(), b.lo_.reciprocal());
  return a * recip;
}

IntervalNum sqrt_enclosure(const Rat& x, int digits) {
  if (x.sign() < 0) fail(errc::invalid_input, "sqrt of negative rational");
  if (x.is_zero()) return IntervalNum(Rat(0));
  if (is_perfect_square(x.num()) && is_perfect_square(x.den()))
    return IntervalNum(Rat(isqrt(x.num()), isqrt(x.den())));
  // sqrt(a/b) = isqrt(a*b*M^2) / (b*M) with M = 10^digits, rounded outward.
  Int scale = pow_int(10, static_cast<unsigned long>(std::max(digits, 1)));
  Int s = isqrt(x.num() * x.den() * scale * scale);
  Int den = x.den() * scale;
  return IntervalNum(Rat(s, den), Rat(s + 1, den));
}

IntervalNum sqrt_enclosure(const IntervalNum& x, int digits) {
  if (x.lo().sign() < 0) fail(errc::invalid_input, "sqrt of interval reaching below zero");
  return IntervalNum(sqrt_enclosure(x.lo(), digits).lo(), sqrt_enclosure(x.hi(), digits).hi());
}

}  // namespace tsq
