// Copyright 2026 the torus-squeeze authors
// SPDX-License-Identifier: Apache-2.0

#ifndef TSQ_INTERVAL_HPP
#define TSQ_INTERVAL_HPP

#include <optional>
#include <string>

#include "tsq/rational.hpp"

namespace tsq {

// Certified enclosure with exact rational endpoints. Addition, subtraction
// and multiplication are exact interval hulls; division requires the divisor
// to exclude zero. Values are immutable.
class IntervalNum {
 public:
  IntervalNum() : lo_(0), hi_(0) {}
  IntervalNum(Rat point) : lo_(point), hi_(point) {}  // NOLINT
  IntervalNum(Rat lo, Rat hi);

  static IntervalNum from_midpoint(const Rat& mid, const Rat& radius);

  const Rat& lo() const { return lo_; }
  const Rat& hi() const { return hi_; }
  Rat width() const { return hi_ - lo_; }
  Rat mid() const { return (lo_ + hi_) / Rat(2); }
  bool is_point() const { return lo_ == hi_; }
  bool contains_zero() const { return lo_.sign() <= 0 && hi_.sign() >= 0; }
  bool contains(const Rat& x) const { return lo_ <= x && x <= hi_; }

  // Certified sign, or nullopt when the enclosure straddles zero.
  std::optional<int> sign() const;

  IntervalNum abs() const;

  friend IntervalNum operator+(const IntervalNum& a, const IntervalNum& b);
  friend IntervalNum operator-(const IntervalNum& a, const IntervalNum& b);
  friend IntervalNum operator*(const IntervalNum& a, const IntervalNum& b);
  friend IntervalNum operator-(const IntervalNum& a);
  // Throws when b's enclosure contains zero.
  friend IntervalNum operator/(const IntervalNum& a, const IntervalNum& b);

  friend bool operator==(const IntervalNum& a, const IntervalNum& b) {
    return a.lo_ == b.lo_ && a.hi_ == b.hi_;
  }

 private:
  Rat lo_, hi_;
};

// Enclosure of sqrt(x), x >= 0 rational; exact (a point) when x is a perfect
// square of rationals, otherwise outward-rounded to `digits` decimal digits.
IntervalNum sqrt_enclosure(const Rat& x, int digits);

// Enclosure of sqrt over an interval of nonnegative values.
IntervalNum sqrt_enclosure(const IntervalNum& x, int digits);

}  // namespace tsq

#endif  // TSQ_INTERVAL_HPP
