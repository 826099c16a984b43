// Copyright 2026 the torus-squeeze authors
// SPDX-License-Identifier: Apache-2.0

#include "tsq/scalar.hpp"

#include "tsq/error.hpp"

namespace tsq {

namespace {

enum class Op { add, sub, mul, div };

Rat apply(Op op, const Rat& x, const Rat& y) {
  switch (op) {
    case Op::add: return x + y;
    case Op::sub: return x - y;
    case Op::mul: return x * y;
    case Op::div: return x / y;
  }
  fail(errc::internal_error, "bad op");
}

QSurd apply(Op op, const QSurd& x, const QSurd& y) {
  switch (op) {
    case Op::add: return x + y;
    case Op::sub: return x - y;
    case Op::mul: return x * y;
    case Op::div: return x / y;
  }
  fail(errc::internal_error, "bad op");
}

IntervalNum apply(Op op, const IntervalNum& x, const IntervalNum& y) {
  switch (op) {
    case Op::add: return x + y;
    case Op::sub: return x - y;
    case Op::mul: return x * y;
    case Op::div: return x / y;
  }
  fail(errc::internal_error, "bad op");
}

IntervalNum widen(const ScalarSpec& s) {
  if (const auto* r = std::get_if<Rat>(&s)) return IntervalNum(*r);
  if (const auto* q = std::get_if<QSurd>(&s)) return q->enclosure(kSurdPromotionDigits);
  return std::get<IntervalNum>(s);
}

ScalarSpec combine(Op op, const ScalarSpec& x, const ScalarSpec& y) {
  if (std::holds_alternative<IntervalNum>(x) || std::holds_alternative<IntervalNum>(y))
    return canonicalize(apply(op, widen(x), widen(y)));
  if (std::holds_alternative<QSurd>(x) || std::holds_alternative<QSurd>(y)) {
    QSurd a = std::holds_alternative<QSurd>(x) ? std::get<QSurd>(x) : QSurd(std::get<Rat>(x));
    QSurd b = std::holds_alternative<QSurd>(y) ? std::get<QSurd>(y) : QSurd(std::get<Rat>(y));
    return canonicalize(apply(op, a, b));
  }
  return apply(op, std::get<Rat>(x), std::get<Rat>(y));
}

}  // namespace

ScalarKind kind_of(const ScalarSpec& s) {
  if (std::holds_alternative<Rat>(s)) return ScalarKind::rational;
  if (std::holds_alternative<QSurd>(s)) return ScalarKind::quadratic;
  return ScalarKind::interval;
}

ScalarSpec canonicalize(ScalarSpec s) {
  if (const auto* q = std::get_if<QSurd>(&s)) {
    if (q->is_rational()) return q->as_rational();
    return s;
  }
  if (const auto* iv = std::get_if<IntervalNum>(&s)) {
    if (iv->is_point()) return iv->lo();
    return s;
  }
  return s;
}

ScalarSpec operator+(const ScalarSpec& x, const ScalarSpec& y) { return combine(Op::add, x, y); }
ScalarSpec operator-(const ScalarSpec& x, const ScalarSpec& y) { return combine(Op::sub, x, y); }
ScalarSpec operator*(const ScalarSpec& x, const ScalarSpec& y) { return combine(Op::mul, x, y); }

ScalarSpec operator/(const ScalarSpec& x, const ScalarSpec& y) {
  if (scalar_is_exact(y) && scalar_is_zero(y)) fail(errc::invalid_input, "division by zero");
  return combine(Op::div, x, y);
}

ScalarSpec operator-(const ScalarSpec& x) {
  if (const auto* r = std::get_if<Rat>(&x)) return -*r;
  if (const auto* q = std::get_if<QSurd>(&x)) return -*q;
  return -std::get<IntervalNum>(x);
}

std::optional<int> scalar_sign(const ScalarSpec& x) {
  if (const auto* r = std::get_if<Rat>(&x)) return r->sign();
  if (const auto* q = std::get_if<QSurd>(&x)) return q->sign();
  return std::get<IntervalNum>(x).sign();
}

std::optional<int> scalar_compare(const ScalarSpec& x, const ScalarSpec& y) {
  return scalar_sign(x - y);
}

bool scalar_is_exact(const ScalarSpec& x) { return !std::holds_alternative<IntervalNum>(x); }

bool scalar_is_zero(const ScalarSpec& x) {
  auto s = scalar_sign(x);
  return s.has_value() && *s == 0;
}

IntervalNum scalar_enclosure(const ScalarSpec& x, int digits) {
  if (const auto* r = std::get_if<Rat>(&x)) return IntervalNum(*r);
  if (const auto* q = std::get_if<QSurd>(&x)) return q->enclosure(digits);
  return std::get<IntervalNum>(x);
}

std::optional<Rat> scalar_as_rat(const ScalarSpec& x) {
  ScalarSpec c = canonicalize(x);
  if (const auto* r = std::get_if<Rat>(&c)) return *r;
  return std::nullopt;
}

double scalar_to_double(const ScalarSpec& x) {
  if (const auto* r = std::get_if<Rat>(&x)) return r->to_double();
  if (const auto* q = std::get_if<QSurd>(&x)) return q->to_double();
  return std::get<IntervalNum>(x).mid().to_double();
}

std::string scalar_str(const ScalarSpec& x) {
  if (const auto* r = std::get_if<Rat>(&x)) return r->str();
  if (const auto* q = std::get_if<QSurd>(&x)) return q->str();
  const auto& iv = std::get<IntervalNum>(x);
  return "[" + iv.lo().str() + ", " + iv.hi().str() + "]";
}

}  // namespace tsq
