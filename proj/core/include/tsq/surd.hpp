// Copyright 2026 the torus-squeeze authors
// SPDX-License-Identifier: Apache-2.0

#ifndef TSQ_SURD_HPP
#define TSQ_SURD_HPP

#include <string>

#include "tsq/interval.hpp"
#include "tsq/rational.hpp"

namespace tsq {

// Quadratic surd a + b*sqrt(d) with rational a, b and squarefree d > 1.
// Arithmetic is closed within a fixed d; combining two surds with different
// nontrivial d is rejected (mixed-surd). All comparisons are exact.
class QSurd {
 public:
  QSurd() : a_(0), b_(0), d_(1) {}
  explicit QSurd(Rat rational) : a_(std::move(rational)), b_(0), d_(1) {}
  // Normalizes: square factors of d are pulled into b; b == 0 collapses d to 1.
  QSurd(Rat a, Rat b, Int d);

  const Rat& rational_part() const { return a_; }
  const Rat& surd_coefficient() const { return b_; }
  const Int& radicand() const { return d_; }

  bool is_rational() const { return b_.is_zero(); }
  // Valid only when is_rational().
  const Rat& as_rational() const { return a_; }

  int sign() const;
  bool is_zero() const { return a_.is_zero() && b_.is_zero(); }
  QSurd conjugate() const { return QSurd::raw(a_, -b_, d_); }
  // Field norm a^2 - b^2 d; nonzero for nonzero surds.
  Rat field_norm() const { return a_ * a_ - b_ * b_ * Rat(d_); }
  QSurd reciprocal() const;
  QSurd abs() const { return sign() >= 0 ? *this : -*this; }

  Int floor() const;
  IntervalNum enclosure(int digits) const;
  double to_double() const;

  friend QSurd operator+(const QSurd& x, const QSurd& y);
  friend QSurd operator-(const QSurd& x, const QSurd& y);
  friend QSurd operator*(const QSurd& x, const QSurd& y);
  friend QSurd operator/(const QSurd& x, const QSurd& y);
  friend QSurd operator-(const QSurd& x) { return QSurd::raw(-x.a_, -x.b_, x.d_); }

  friend bool operator==(const QSurd& x, const QSurd& y) { return (x - y).is_zero(); }
  friend bool operator!=(const QSurd& x, const QSurd& y) { return !(x == y); }
  friend bool operator<(const QSurd& x, const QSurd& y) { return (x - y).sign() < 0; }
  friend bool operator<=(const QSurd& x, const QSurd& y) { return (x - y).sign() <= 0; }
  friend bool operator>(const QSurd& x, const QSurd& y) { return (x - y).sign() > 0; }
  friend bool operator>=(const QSurd& x, const QSurd& y) { return (x - y).sign() >= 0; }

  std::string str() const;

 private:
  static QSurd raw(Rat a, Rat b, Int d);

  Rat a_, b_;
  Int d_;
};

// The common radicand for a binary operation; throws mixed-surd when both
// operands carry distinct nontrivial radicands.
Int common_radicand(const QSurd& x, const QSurd& y);

}  // namespace tsq

#endif  // TSQ_SURD_HPP
